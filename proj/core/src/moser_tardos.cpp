#include <algorithm>
#include <array>
#include <chrono>
#include <limits>

#include "cabounds/construct.hpp"
#include "cabounds/error.hpp"
#include "construct_internal.hpp"

namespace cabounds {

namespace {

constexpr std::uint64_t kResampleStream = 3;
constexpr std::uint64_t kPairArraySalt = 0x9e3779b97f4a7c15ull;

struct ResampleRun {
  std::vector<Symbol> columns;  // column-major, k columns of n entries
  bool success = true;
};

// Moser-Tardos on the events "some full orbit is uncovered on column set S".
// Column sets are checked in colex order and orbits in table order; the first
// violation redraws all n entries of each of its t columns and the check
// restarts. Memory is the array itself plus one stamp per orbit.
ResampleRun resample_full_orbits(const CAParams& params, const OrbitTable& table, std::uint64_t n,
                                 const BuildConfig& config, BuildLog& log) {
  const unsigned t = params.t();
  const unsigned k = params.k();
  const unsigned v = params.v();
  SymbolSampler sampler(config.seed, kResampleStream);

  ResampleRun run;
  run.columns.resize(std::size_t{k} * n);
  for (auto& cell : run.columns) cell = sampler.draw(v);

  std::vector<std::uint32_t> full;
  for (std::uint32_t o = 0; o < table.orbit_count(); ++o) {
    if (table.is_full(o)) full.push_back(o);
  }
  if (full.empty()) return run;

  std::vector<std::uint32_t> stamp(table.orbit_count(), 0);
  std::uint32_t epoch = 0;
  std::vector<unsigned> set(t);
  auto reset_to = [&](unsigned last) {
    for (unsigned i = 0; i + 1 < t; ++i) set[i] = i;
    set[t - 1] = last;
  };
  reset_to(t - 1);
  std::uint64_t position = 0;

  for (;;) {
    if (++epoch == std::numeric_limits<std::uint32_t>::max()) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
    for (std::uint64_t r = 0; r < n; ++r) {
      std::uint32_t rank = 0;
      for (unsigned i = 0; i < t; ++i) rank = rank * v + run.columns[std::size_t{set[i]} * n + r];
      stamp[table.orbit_of(rank)] = epoch;
    }
    const auto missing = std::find_if(full.begin(), full.end(), [&](std::uint32_t o) { return stamp[o] != epoch; });
    if (missing == full.end()) {
      if (!next_combination_colex(set, k)) return run;
      ++position;
      continue;
    }

    if (log.resample_count >= config.resample_step_cap) {
      run.success = false;
      log.success = false;
      log.failure = "resample cap of " + std::to_string(config.resample_step_cap) + " reached";
      return run;
    }
    log.resamples.push_back({position, *missing});
    ++log.resample_count;
    for (unsigned c : set) {
      for (std::uint64_t r = 0; r < n; ++r) run.columns[std::size_t{c} * n + r] = sampler.draw(v);
    }
    // Restarting from the first column set is equivalent to restarting from
    // the first one that meets a redrawn column: everything before it was
    // already checked and is unchanged. In colex order that set is
    // {0, ..., t-2, max(min column, t-1)}.
    const unsigned last = std::max(set[0], t - 1);
    reset_to(last);
    position = to_u64_checked(binomial(last, t), "column set rank");
  }
}

SymbolArray to_rows(const CAParams& params, const std::vector<Symbol>& columns, std::uint64_t n) {
  std::vector<Symbol> cells(columns.size());
  const unsigned k = params.k();
  for (std::uint64_t r = 0; r < n; ++r) {
    for (unsigned c = 0; c < k; ++c) cells[r * k + c] = columns[std::size_t{c} * n + r];
  }
  return SymbolArray(params, std::move(cells));
}

std::uint64_t default_rows(const CAParams& params, GroupKind kind, const BuildConfig& config) {
  const BoundOptions options{.dependence = config.dependence};
  switch (kind) {
    case GroupKind::trivial: return gss_lll_bound(params, options).value;
    case GroupKind::cyclic: return *cyclic_lll_bound(params, options).stage1_rows;
    case GroupKind::frobenius: return *frobenius_lll_bound(params, options).stage1_rows;
    case GroupKind::pgl: return *pgl_lll_bound(params, options).stage1_rows;
  }
  fail(ErrorKind::internal_error, "unknown group kind");
}

}  // namespace

BuildResult moser_tardos_build(const CAParams& params, const GroupAction& action, const BuildConfig& config) {
  if (action.kind() == GroupKind::pgl) return pgl_build(params, config);
  require(action.degree() == params.v(), ErrorKind::invalid_argument,
          "group degree " + std::to_string(action.degree()) + " differs from v=" + std::to_string(params.v()));
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t n = config.stage1_rows ? *config.stage1_rows : default_rows(params, action.kind(), config);
  const OrbitTable table = enumerate_orbits(action, params.t());

  BuildLog log;
  log.strategy = action.kind() == GroupKind::frobenius ? Strategy::mt_frobenius : Strategy::mt_cyclic;
  log.stage1_rows = n;
  log.group_order = action.order();
  const ResampleRun run = resample_full_orbits(params, table, n, config, log);
  log.stage1_seconds = detail::seconds_since(start);

  SymbolArray array = develop(to_rows(params, run.columns, n), action);
  if (action.sharp_transitivity() >= 2) {
    array.append_rows(constant_rows(params));
    log.short_orbit_rows = params.v();
  }
  log.total_rows = array.rows();
  return {std::move(array), std::move(log)};
}

BuildResult pgl_build(const CAParams& params, const BuildConfig& config) {
  const unsigned v = params.v();
  const GroupAction action = make_pgl(v);
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t n = config.stage1_rows ? *config.stage1_rows : default_rows(params, GroupKind::pgl, config);
  const OrbitTable table = enumerate_orbits(action, params.t());

  BuildLog log;
  log.strategy = Strategy::pgl;
  log.stage1_rows = n;
  log.group_order = action.order();
  const ResampleRun run = resample_full_orbits(params, table, n, config, log);
  log.stage1_seconds = detail::seconds_since(start);

  const auto pair_start = std::chrono::steady_clock::now();
  BuildConfig binary_config = config;
  binary_config.seed = config.seed ^ kPairArraySalt;
  binary_config.stage1_rows.reset();
  const CAParams binary_params(params.t(), params.k(), 2);
  BuildResult binary = moser_tardos_build(binary_params, make_cyclic(2), binary_config);
  if (!binary.log.success) {
    log.success = false;
    log.failure = "binary pair array: " + binary.log.failure;
  }

  SymbolArray array = develop(to_rows(params, run.columns, n), action);
  for (unsigned a = 0; a < v; ++a) {
    for (unsigned b = a + 1; b < v; ++b) {
      const std::array<Symbol, 2> mapping{static_cast<Symbol>(a), static_cast<Symbol>(b)};
      array.append_rows(relabel(binary.array, mapping, params));
      log.stage2_rows += binary.array.rows();
    }
  }
  array.append_rows(constant_rows(params));
  log.short_orbit_rows = v;
  log.stage2_seconds = detail::seconds_since(pair_start);
  log.total_rows = array.rows();
  return {std::move(array), std::move(log)};
}

}  // namespace cabounds
