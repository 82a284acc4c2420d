#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "cabounds/error.hpp"
#include "cabounds/groups.hpp"
#include "cabounds/interaction.hpp"

namespace cabounds {

struct VerifyOptions {
  /// Strength to check; 0 means the array's own t.
  unsigned strength = 0;
  unsigned threads = 1;
  std::uint64_t max_column_sets = std::uint64_t{1} << 36;
};

struct CoverageReport {
  bool is_covering = false;
  std::uint64_t uncovered_count = 0;
  /// Lowest-ranked uncovered interaction.
  std::optional<Interaction> first_witness;
  std::uint64_t column_sets_checked = 0;
};

/// Raised when a check would exceed its column-set cap; carries what was
/// established before stopping.
class VerifyLimitError : public Error {
 public:
  VerifyLimitError(const std::string& message, CoverageReport partial)
      : Error(ErrorKind::resource_limit, message), partial_(std::move(partial)) {}
  const CoverageReport& partial() const noexcept { return partial_; }

 private:
  CoverageReport partial_;
};

/// Reference coverage check: for every column set, a v^t bitmap filled by one
/// pass over the rows.
CoverageReport full_check(const SymbolArray& array, const VerifyOptions& options = {});

struct OrbitCoverageReport {
  bool all_covered = false;
  std::optional<std::pair<ColumnSet, std::uint32_t>> first_uncovered;
};

/// Every (full, when `full_only`) orbit of `table` has a row whose tuple on
/// the column set lies in it, for every column set of size table.strength().
OrbitCoverageReport orbit_check(const SymbolArray& array, const OrbitTable& table, bool full_only);

enum class SearchStatus { found, none, budget_exceeded };

struct ExhaustiveResult {
  SearchStatus status = SearchStatus::none;
  std::optional<std::uint64_t> size;
  std::uint64_t nodes = 0;
};

/// Smallest N <= n_max admitting a CA(N; t, k, v), by column-wise
/// backtracking over canonically relabelled columns in increasing order.
ExhaustiveResult exhaustive_can(const CAParams& params, std::uint64_t n_max,
                                std::uint64_t node_budget = 50'000'000);

}  // namespace cabounds
