#include "cabounds/groups.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cabounds/error.hpp"
#include "cabounds/finite_field.hpp"
#include "cabounds/interaction.hpp"

namespace cabounds {

std::string_view to_string(GroupKind kind) noexcept {
  switch (kind) {
    case GroupKind::trivial: return "trivial";
    case GroupKind::cyclic: return "cyclic";
    case GroupKind::frobenius: return "frobenius";
    case GroupKind::pgl: return "pgl";
  }
  return "unknown";
}

GroupAction::GroupAction(GroupKind kind, unsigned degree, std::vector<Permutation> elements,
                         unsigned sharp_transitivity)
    : kind_(kind), degree_(degree), elements_(std::move(elements)), sharp_(sharp_transitivity) {
  require(!elements_.empty(), ErrorKind::invalid_argument, "a group needs at least the identity");
  for (const auto& g : elements_) {
    require(g.size() == degree_, ErrorKind::invalid_argument, "permutation has the wrong degree");
  }
  for (unsigned s = 0; s < degree_; ++s) {
    require(elements_[0][s] == s, ErrorKind::invalid_argument, "element 0 must be the identity");
  }
}

GroupAction make_trivial(unsigned v) {
  require(v >= 1 && v <= kMaxAlphabet, ErrorKind::invalid_argument, "degree out of range");
  Permutation identity(v);
  for (unsigned s = 0; s < v; ++s) identity[s] = static_cast<Symbol>(s);
  return GroupAction(GroupKind::trivial, v, {identity}, 0);
}

GroupAction make_cyclic(unsigned v) {
  require(v >= 2 && v <= kMaxAlphabet, ErrorKind::invalid_argument, "cyclic group needs 2 <= v <= 256");
  std::vector<Permutation> elements;
  for (unsigned c = 0; c < v; ++c) {
    Permutation g(v);
    for (unsigned x = 0; x < v; ++x) g[x] = static_cast<Symbol>((x + c) % v);
    elements.push_back(std::move(g));
  }
  return GroupAction(GroupKind::cyclic, v, std::move(elements), 1);
}

GroupAction make_frobenius(unsigned v) {
  require(v >= 2 && v <= kMaxAlphabet && is_prime_power(v), ErrorKind::unsupported_parameter,
          "frobenius requires prime-power v (got v=" + std::to_string(v) + ")");
  const FiniteField field(v);
  std::vector<Permutation> elements;
  elements.reserve(std::size_t{v} * (v - 1));
  for (unsigned a = 1; a < v; ++a) {
    for (unsigned b = 0; b < v; ++b) {
      Permutation g(v);
      for (unsigned x = 0; x < v; ++x) g[x] = static_cast<Symbol>(field.add(field.mul(a, x), b));
      elements.push_back(std::move(g));
    }
  }
  return GroupAction(GroupKind::frobenius, v, std::move(elements), 2);
}

GroupAction make_pgl(unsigned v) {
  require(v >= 3 && v <= kMaxAlphabet && is_prime_power(v - 1), ErrorKind::unsupported_parameter,
          "pgl requires v >= 3 with v-1 a prime power (got v=" + std::to_string(v) + ")");
  const unsigned q = v - 1;
  const Symbol infinity = static_cast<Symbol>(q);
  const FiniteField field(q);
  std::vector<Permutation> elements;
  elements.reserve(std::size_t{v} * (v - 1) * (v - 2));

  // One matrix [[a, b], [c, d]] per projective class: c = 0 scaled to d = 1,
  // otherwise c scaled to 1.
  for (unsigned a = 1; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      Permutation g(v);
      for (unsigned x = 0; x < q; ++x) g[x] = static_cast<Symbol>(field.add(field.mul(a, x), b));
      g[q] = infinity;
      elements.push_back(std::move(g));
    }
  }
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      for (unsigned d = 0; d < q; ++d) {
        if (field.mul(a, d) == b) continue;  // ad - bc = 0 with c = 1
        Permutation g(v);
        for (unsigned x = 0; x < q; ++x) {
          const auto denominator = field.add(x, d);
          g[x] = denominator == 0 ? infinity
                                  : static_cast<Symbol>(field.div(field.add(field.mul(a, x), b), denominator));
        }
        g[q] = static_cast<Symbol>(a);
        elements.push_back(std::move(g));
      }
    }
  }
  return GroupAction(GroupKind::pgl, v, std::move(elements), 3);
}

GroupAction make_group(GroupKind kind, unsigned v) {
  switch (kind) {
    case GroupKind::trivial: return make_trivial(v);
    case GroupKind::cyclic: return make_cyclic(v);
    case GroupKind::frobenius: return make_frobenius(v);
    case GroupKind::pgl: return make_pgl(v);
  }
  fail(ErrorKind::internal_error, "unknown group kind");
}

bool is_sharply_transitive(const GroupAction& action, unsigned l) {
  const unsigned v = action.degree();
  if (l == 0) return action.order() == 1;
  if (l > v) return false;
  std::uint64_t arrangements = 1;
  for (unsigned i = 0; i < l; ++i) arrangements *= v - i;
  if (action.order() != arrangements) return false;

  std::vector<Symbol> source(l);
  std::vector<bool> hit;
  // Enumerate every ordered l-tuple of distinct symbols as a source.
  std::uint64_t tuples = 1;
  for (unsigned i = 0; i < l; ++i) tuples *= v;
  for (std::uint64_t code = 0; code < tuples; ++code) {
    source = symbol_tuple_unrank(code, l, v);
    std::vector<bool> used(v, false);
    bool distinct = true;
    for (Symbol s : source) {
      if (used[s]) distinct = false;
      used[s] = true;
    }
    if (!distinct) continue;
    hit.assign(tuples, false);
    std::vector<Symbol> image(l);
    for (const auto& g : action.elements()) {
      for (unsigned i = 0; i < l; ++i) image[i] = g[source[i]];
      const auto rank = symbol_tuple_rank(image, v);
      if (hit[rank]) return false;  // two elements agree on the tuple
      hit[rank] = true;
    }
  }
  return true;
}

bool is_group(const GroupAction& action) {
  const std::set<Permutation> members(action.elements().begin(), action.elements().end());
  if (members.size() != action.order()) return false;
  Permutation identity(action.degree());
  for (unsigned s = 0; s < action.degree(); ++s) identity[s] = static_cast<Symbol>(s);
  if (!members.contains(identity)) return false;
  Permutation composed(action.degree());
  for (const auto& g : action.elements()) {
    for (const auto& h : action.elements()) {
      for (unsigned s = 0; s < action.degree(); ++s) composed[s] = g[h[s]];
      if (!members.contains(composed)) return false;
    }
  }
  return true;
}

OrbitTable::OrbitTable(GroupAction action, unsigned t, std::uint64_t max_tuples)
    : action_(std::move(action)), t_(t) {
  const unsigned v = action_.degree();
  const BigInt count = ipow(v, t);
  require(count <= max_tuples, ErrorKind::resource_limit,
          "orbit table for v^t = " + count.str() + " tuples exceeds the cap of " + std::to_string(max_tuples));
  const auto tuples = count.convert_to<std::uint32_t>();
  constexpr std::uint32_t kUnassigned = 0xffffffffu;
  orbit_of_.assign(tuples, kUnassigned);

  std::vector<Symbol> image(t);
  for (std::uint32_t rank = 0; rank < tuples; ++rank) {
    if (orbit_of_[rank] != kUnassigned) continue;
    const auto orbit = static_cast<std::uint32_t>(lengths_.size());
    const std::vector<Symbol> tuple = symbol_tuple_unrank(rank, t, v);
    std::uint32_t length = 0;
    for (const auto& g : action_.elements()) {
      for (unsigned i = 0; i < t; ++i) image[i] = g[tuple[i]];
      const auto r = static_cast<std::uint32_t>(symbol_tuple_rank(image, v));
      if (orbit_of_[r] == kUnassigned) {
        orbit_of_[r] = orbit;
        ++length;
      }
    }
    std::vector<Symbol> sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    const auto distinct = std::unique(sorted.begin(), sorted.end()) - sorted.begin();
    representatives_.push_back(rank);
    lengths_.push_back(length);
    distinct_.push_back(static_cast<std::uint8_t>(distinct));
  }
}

std::size_t OrbitTable::full_orbit_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < orbit_count(); ++i) count += is_full(i) ? 1 : 0;
  return count;
}

std::size_t OrbitTable::memory_bytes() const noexcept {
  return orbit_of_.capacity() * sizeof(std::uint32_t) + representatives_.capacity() * sizeof(std::uint32_t) +
         lengths_.capacity() * sizeof(std::uint32_t) + distinct_.capacity() +
         action_.order() * action_.degree();
}

OrbitTable enumerate_orbits(const GroupAction& action, unsigned t, std::uint64_t max_tuples) {
  return OrbitTable(action, t, max_tuples);
}

SymbolArray develop(const SymbolArray& array, const GroupAction& action) {
  const auto& params = array.params();
  require(action.degree() == params.v(), ErrorKind::invalid_argument,
          "group degree " + std::to_string(action.degree()) + " differs from v=" + std::to_string(params.v()));
  const std::size_t k = params.k();
  std::vector<Symbol> cells;
  cells.reserve(array.rows() * action.order() * k);
  for (std::size_t r = 0; r < array.rows(); ++r) {
    const auto row = array.row(r);
    for (const auto& g : action.elements()) {
      for (std::size_t c = 0; c < k; ++c) cells.push_back(g[row[c]]);
    }
  }
  return SymbolArray(params, std::move(cells));
}

SymbolArray constant_rows(const CAParams& params) {
  std::vector<Symbol> cells;
  cells.reserve(std::size_t{params.v()} * params.k());
  for (unsigned s = 0; s < params.v(); ++s) cells.insert(cells.end(), params.k(), static_cast<Symbol>(s));
  return SymbolArray(params, std::move(cells));
}

SymbolArray relabel(const SymbolArray& array, std::span<const Symbol> mapping, const CAParams& target) {
  require(mapping.size() >= array.params().v(), ErrorKind::invalid_argument, "relabel mapping is too short");
  require(target.k() == array.params().k(), ErrorKind::invalid_argument, "relabel target has a different k");
  std::vector<Symbol> cells;
  cells.reserve(array.cells().size());
  for (Symbol s : array.cells()) cells.push_back(mapping[s]);
  return SymbolArray(target, std::move(cells));
}

}  // namespace cabounds
