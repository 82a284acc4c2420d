#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cabounds/bounds.hpp"
#include "cabounds/groups.hpp"
#include "cabounds/interaction.hpp"
#include "cabounds/rng.hpp"

namespace cabounds {

enum class Strategy { two_stage, mt_cyclic, mt_frobenius, pgl, density };

std::string_view to_string(Strategy strategy) noexcept;
std::optional<Strategy> parse_strategy(std::string_view name);

enum class StageTwo {
  /// One row per leftover interaction, other cells drawn at random.
  one_row_each,
  /// Conditional-expectation rows until nothing is left.
  density_greedy,
};

enum class StageOneTarget {
  /// floor(C(k,t) v^t (1 - 1/v^t)^n) uncovered interactions.
  expectation_floor,
  /// At most v^t uncovered interactions.
  at_most_tuples,
};

struct BuildConfig {
  std::uint64_t seed = kDefaultSeed;
  std::uint32_t max_stage1_attempts = 1000;
  std::uint64_t resample_step_cap = 1'000'000;
  DependenceEstimate dependence = DependenceEstimate::simple;
  StageTwo second_stage = StageTwo::one_row_each;
  StageOneTarget stage1_target = StageOneTarget::expectation_floor;
  /// Overrides the stage-1 row count taken from the matching bound.
  std::optional<std::uint64_t> stage1_rows;
  /// Workers for coverage counting; results never depend on it.
  unsigned threads = 1;
  /// Cap on C(k,t) for any scan over column sets.
  std::uint64_t max_column_sets = std::uint64_t{1} << 36;
  /// Cap on explicitly listed interactions (density from scratch, stage 2).
  /// Each costs roughly 100 bytes, so the default allows about 100 MiB.
  std::uint64_t max_listed_interactions = std::uint64_t{1} << 20;
};

/// One Moser-Tardos resampling: the column set (colex rank) and the orbit
/// that was found uncovered. The position in BuildLog::resamples is the
/// running resample count.
struct ResampleEvent {
  std::uint64_t column_set_rank = 0;
  std::uint32_t orbit = 0;
};

struct BuildLog {
  Strategy strategy = Strategy::two_stage;
  std::uint64_t stage1_rows = 0;
  std::uint64_t stage1_attempts = 0;
  std::uint64_t uncovered_after_stage1 = 0;
  std::uint64_t stage1_target = 0;
  std::uint64_t resample_count = 0;
  std::uint64_t group_order = 1;
  std::uint64_t short_orbit_rows = 0;
  std::uint64_t stage2_rows = 0;
  std::uint64_t total_rows = 0;
  bool success = true;
  std::string failure;
  std::vector<ResampleEvent> resamples;
  double stage1_seconds = 0;
  double stage2_seconds = 0;
};

struct BuildResult {
  SymbolArray array;
  BuildLog log;
};

struct CountOptions {
  unsigned threads = 1;
  std::uint64_t max_column_sets = std::uint64_t{1} << 36;
};

/// n x k array with i.i.d. uniform entries, filled row by row.
SymbolArray random_array(const CAParams& params, std::size_t n, std::uint64_t seed);

/// Number of t-way interactions no row covers. Streams over column sets in
/// lexicographic order holding one v^t-bit mask per worker.
std::uint64_t count_uncovered(const SymbolArray& array, const CountOptions& options = {});

struct UncoveredList {
  std::vector<Interaction> interactions;
  /// More uncovered interactions exist beyond `limit`.
  bool truncated = false;
};

/// Uncovered interactions in interaction_rank order, at most `limit`.
UncoveredList uncovered_interactions(const SymbolArray& array, std::uint64_t limit,
                                     const CountOptions& options = {});

/// Next row by the method of conditional expectations: cells are fixed left
/// to right, each to the symbol maximising the expected number of listed
/// interactions the finished row covers (ties to the smallest symbol).
std::vector<Symbol> density_row(const CAParams& params, std::span<const Interaction> uncovered);
/// Same, listing the uncovered interactions of `array` first; nullopt when
/// the array already covers everything.
std::optional<std::vector<Symbol>> density_row(const SymbolArray& array, const BuildConfig& config = {});

/// Random stage 1 of the optimal two-stage size, redrawn until the leftover
/// count meets the target, then completed per `config.second_stage`.
BuildResult two_stage_build(const CAParams& params, const BuildConfig& config = {});

/// Density rows from an empty array until every interaction is covered.
BuildResult density_build(const CAParams& params, const BuildConfig& config = {});

/// Moser-Tardos resampling of an n x k array until every full orbit is
/// covered on every column set, then development over the group plus the
/// constant rows when the group is at least 2-transitive. PGL actions are
/// forwarded to pgl_build.
BuildResult moser_tardos_build(const CAParams& params, const GroupAction& action, const BuildConfig& config = {});

/// PGL development for the full orbits, a binary covering array mapped onto
/// every symbol pair, and the constant rows.
BuildResult pgl_build(const CAParams& params, const BuildConfig& config = {});

BuildResult build(Strategy strategy, const CAParams& params, const BuildConfig& config = {});

}  // namespace cabounds
