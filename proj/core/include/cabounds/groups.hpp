#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cabounds/symbol_array.hpp"

namespace cabounds {

enum class GroupKind { trivial, cyclic, frobenius, pgl };

std::string_view to_string(GroupKind kind) noexcept;

using Permutation = std::vector<Symbol>;

/// A permutation group on {0, ..., v-1} stored as explicit permutations; the
/// identity is always element 0.
class GroupAction {
 public:
  GroupAction(GroupKind kind, unsigned degree, std::vector<Permutation> elements, unsigned sharp_transitivity);

  GroupKind kind() const noexcept { return kind_; }
  unsigned degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  /// l such that the action is sharply l-transitive; 0 for the trivial group.
  unsigned sharp_transitivity() const noexcept { return sharp_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }

 private:
  GroupKind kind_;
  unsigned degree_;
  std::vector<Permutation> elements_;
  unsigned sharp_;
};

/// Identity only; developing over it leaves an array unchanged.
GroupAction make_trivial(unsigned v);
/// x -> x + c (mod v).
GroupAction make_cyclic(unsigned v);
/// x -> a x + b over GF(v), a != 0. Symbols are field elements in the
/// FiniteField enumeration. Throws unsupported_parameter unless v is a prime power.
GroupAction make_frobenius(unsigned v);
/// x -> (a x + b) / (c x + d) on GF(q) and infinity, q = v - 1, with infinity
/// encoded as symbol q. Throws unsupported_parameter unless v - 1 is a prime power.
GroupAction make_pgl(unsigned v);
GroupAction make_group(GroupKind kind, unsigned v);

/// Exhaustive check: for every pair of ordered l-tuples of distinct symbols
/// exactly one element maps the first to the second.
bool is_sharply_transitive(const GroupAction& action, unsigned l);
/// Identity present and closed under composition.
bool is_group(const GroupAction& action);

/// Orbits of the action on symbol t-tuples. Tuples are indexed by
/// symbol_tuple_rank (first symbol most significant); orbits are numbered in
/// order of their least tuple, which is also the stored representative.
class OrbitTable {
 public:
  OrbitTable(GroupAction action, unsigned t, std::uint64_t max_tuples);

  unsigned strength() const noexcept { return t_; }
  const GroupAction& action() const noexcept { return action_; }
  std::size_t orbit_count() const noexcept { return lengths_.size(); }
  std::uint32_t tuple_count() const noexcept { return static_cast<std::uint32_t>(orbit_of_.size()); }

  std::uint32_t orbit_of(std::uint32_t tuple_rank) const { return orbit_of_[tuple_rank]; }
  std::uint32_t representative(std::size_t orbit) const { return representatives_[orbit]; }
  std::uint32_t length(std::size_t orbit) const { return lengths_[orbit]; }
  /// Number of distinct symbols in every tuple of the orbit.
  unsigned distinct_symbols(std::size_t orbit) const { return distinct_[orbit]; }
  /// An orbit is full when its tuples use at least l distinct symbols (l the
  /// sharp transitivity); such orbits have length |G|. These are the orbits
  /// the local-lemma stage must cover; the rest are handled by extra rows.
  bool is_full(std::size_t orbit) const { return distinct_[orbit] >= action_.sharp_transitivity(); }
  std::size_t full_orbit_count() const;

  /// Approximate heap footprint, for memory accounting.
  std::size_t memory_bytes() const noexcept;

 private:
  GroupAction action_;
  unsigned t_;
  std::vector<std::uint32_t> orbit_of_;
  std::vector<std::uint32_t> representatives_;
  std::vector<std::uint32_t> lengths_;
  std::vector<std::uint8_t> distinct_;
};

inline constexpr std::uint64_t kDefaultMaxOrbitTuples = std::uint64_t{1} << 24;

/// Throws resource_limit when v^t exceeds `max_tuples`.
OrbitTable enumerate_orbits(const GroupAction& action, unsigned t,
                            std::uint64_t max_tuples = kDefaultMaxOrbitTuples);

/// Every input row followed by its images: output row i*|G| + j is element j
/// applied to input row i.
SymbolArray develop(const SymbolArray& array, const GroupAction& action);

/// v rows, row s = (s, s, ..., s).
SymbolArray constant_rows(const CAParams& params);

/// Maps symbol s of `array` to `mapping[s]`, producing an array over `target`.
SymbolArray relabel(const SymbolArray& array, std::span<const Symbol> mapping, const CAParams& target);

}  // namespace cabounds
