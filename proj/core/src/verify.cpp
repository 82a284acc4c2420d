#include "cabounds/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace cabounds {

namespace {

// Deliberately shares nothing with the construction code: its own binomials,
// odometer enumeration and Horner ranks.
std::uint64_t small_binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  std::vector<std::uint64_t> row(r + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min(i, r); j >= 1; --j) {
      const std::uint64_t sum = row[j] + row[j - 1];
      row[j] = sum < row[j] ? UINT64_MAX : sum;
    }
  }
  return row[r];
}

bool odometer(std::vector<unsigned>& c, unsigned k) {
  const unsigned t = static_cast<unsigned>(c.size());
  unsigned i = t;
  while (i > 0) {
    --i;
    if (c[i] < k - t + i) {
      ++c[i];
      for (unsigned j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<unsigned> nth_subset(std::uint64_t rank, unsigned t, unsigned k) {
  std::vector<unsigned> c(t);
  unsigned next = 0;
  for (unsigned i = 0; i < t; ++i) {
    for (unsigned x = next;; ++x) {
      const std::uint64_t block = small_binomial(k - x - 1, t - i - 1);
      if (rank < block) {
        c[i] = x;
        next = x + 1;
        break;
      }
      rank -= block;
    }
  }
  return c;
}

struct Partial {
  std::uint64_t uncovered = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> first;  // (set rank, tuple rank)
};

Partial check_range(const SymbolArray& array, unsigned t, std::uint64_t begin, std::uint64_t end) {
  Partial out;
  if (begin >= end) return out;
  const unsigned k = static_cast<unsigned>(array.columns());
  const unsigned v = array.params().v();
  std::uint64_t tuples = 1;
  for (unsigned i = 0; i < t; ++i) tuples *= v;
  std::vector<bool> seen(tuples);
  std::vector<unsigned> c = nth_subset(begin, t, k);
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    std::fill(seen.begin(), seen.end(), false);
    std::uint64_t hit = 0;
    for (std::size_t r = 0; r < array.rows() && hit < tuples; ++r) {
      std::uint64_t x = 0;
      for (unsigned col : c) x = x * v + array.at(r, col);
      if (!seen[x]) {
        seen[x] = true;
        ++hit;
      }
    }
    if (hit < tuples) {
      out.uncovered += tuples - hit;
      if (!out.first) {
        const auto it = std::find(seen.begin(), seen.end(), false);
        out.first = std::pair{rank, static_cast<std::uint64_t>(it - seen.begin())};
      }
    }
    if (rank + 1 < end) odometer(c, k);
  }
  return out;
}

Interaction make_witness(std::uint64_t set_rank, std::uint64_t tuple_rank, unsigned t, unsigned k, unsigned v) {
  std::vector<Symbol> symbols(t);
  for (unsigned i = t; i-- > 0;) {
    symbols[i] = static_cast<Symbol>(tuple_rank % v);
    tuple_rank /= v;
  }
  return Interaction(ColumnSet(nth_subset(set_rank, t, k)), std::move(symbols));
}

}  // namespace

CoverageReport full_check(const SymbolArray& array, const VerifyOptions& options) {
  const unsigned t = options.strength == 0 ? array.params().t() : options.strength;
  const unsigned k = static_cast<unsigned>(array.columns());
  const unsigned v = array.params().v();
  require(t >= 1 && t <= k, ErrorKind::invalid_argument,
          "strength " + std::to_string(t) + " must lie in 1.." + std::to_string(k));
  std::uint64_t tuples = 1;
  for (unsigned i = 0; i < t; ++i) {
    tuples *= v;
    require(tuples <= (std::uint64_t{1} << 32), ErrorKind::resource_limit, "v^t exceeds 2^32");
  }
  const std::uint64_t sets = small_binomial(k, t);
  const std::uint64_t limit = std::min(sets, options.max_column_sets);

  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(std::min<std::uint64_t>(limit, 64))));
  std::vector<Partial> parts(workers);
  if (workers == 1) {
    parts[0] = check_range(array, t, 0, limit);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t b = limit * w / workers;
      const std::uint64_t e = limit * (w + 1) / workers;
      pool.emplace_back([&, w, b, e] { parts[w] = check_range(array, t, b, e); });
    }
    for (auto& th : pool) th.join();
  }

  CoverageReport report;
  report.column_sets_checked = limit;
  for (const Partial& p : parts) {
    report.uncovered_count += p.uncovered;
    if (!report.first_witness && p.first) report.first_witness = make_witness(p.first->first, p.first->second, t, k, v);
  }
  report.is_covering = report.uncovered_count == 0 && limit == sets;
  if (limit < sets) {
    throw VerifyLimitError("coverage check needs " + std::to_string(sets) + " column sets, cap is " +
                               std::to_string(options.max_column_sets),
                           report);
  }
  return report;
}

OrbitCoverageReport orbit_check(const SymbolArray& array, const OrbitTable& table, bool full_only) {
  const unsigned t = table.strength();
  const unsigned k = static_cast<unsigned>(array.columns());
  const unsigned v = array.params().v();
  require(table.action().degree() == v, ErrorKind::invalid_argument, "orbit table alphabet differs from the array");
  require(t <= k, ErrorKind::invalid_argument, "orbit strength exceeds k");

  OrbitCoverageReport report;
  std::vector<bool> seen(table.orbit_count());
  std::vector<unsigned> c(t);
  for (unsigned i = 0; i < t; ++i) c[i] = i;
  do {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t r = 0; r < array.rows(); ++r) {
      std::uint32_t x = 0;
      for (unsigned col : c) x = x * v + array.at(r, col);
      seen[table.orbit_of(x)] = true;
    }
    for (std::size_t o = 0; o < seen.size(); ++o) {
      if (seen[o] || (full_only && !table.is_full(o))) continue;
      report.first_uncovered = std::pair{ColumnSet(c), static_cast<std::uint32_t>(o)};
      return report;
    }
  } while (odometer(c, k));
  report.all_covered = true;
  return report;
}

}  // namespace cabounds
