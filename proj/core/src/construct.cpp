#include "cabounds/construct.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <thread>

#include "cabounds/error.hpp"
#include "construct_internal.hpp"

namespace cabounds {

namespace detail {

std::vector<unsigned> unrank_lex(std::uint64_t rank, unsigned t, unsigned k) {
  const ColumnSet set = column_set_unrank(rank, t, k);
  return {set.columns().begin(), set.columns().end()};
}

unsigned advance_lex(std::span<unsigned> columns, unsigned k) {
  const auto t = static_cast<unsigned>(columns.size());
  for (unsigned i = t; i-- > 0;) {
    if (columns[i] < k - t + i) {
      ++columns[i];
      for (unsigned j = i + 1; j < t; ++j) columns[j] = columns[j - 1] + 1;
      return i;
    }
  }
  return t;
}

ColumnSetScanner::ColumnSetScanner(const SymbolArray& array)
    : t_(array.params().t()),
      k_(array.params().k()),
      v_(array.params().v()),
      n_(array.rows()),
      tuples_(array.params().tuple_count()),
      sets_(to_u64_checked(array.params().column_set_count(), "column set count")),
      columns_(std::size_t{array.params().k()} * array.rows()) {
  for (std::size_t r = 0; r < n_; ++r) {
    const auto row = array.row(r);
    for (unsigned c = 0; c < k_; ++c) columns_[std::size_t{c} * n_ + r] = row[c];
  }
}

}  // namespace detail

namespace {

constexpr std::array<std::pair<Strategy, std::string_view>, 5> kStrategyNames{{
    {Strategy::two_stage, "two_stage"},
    {Strategy::mt_cyclic, "mt_cyclic"},
    {Strategy::mt_frobenius, "mt_frobenius"},
    {Strategy::pgl, "pgl"},
    {Strategy::density, "density"},
}};

// Independent random streams carved out of one seed.
constexpr std::uint64_t kStageOneStream = 1;
constexpr std::uint64_t kStageTwoStream = 2;

std::uint64_t popcount(std::span<const std::uint64_t> mask) {
  std::uint64_t total = 0;
  for (auto word : mask) total += static_cast<std::uint64_t>(std::popcount(word));
  return total;
}

void check_column_sets(const CAParams& params, std::uint64_t cap) {
  const BigInt sets = params.column_set_count();
  require(sets <= cap, ErrorKind::resource_limit,
          "C(k,t) = " + sets.str() + " column sets exceed the scan cap of " + std::to_string(cap));
}

bool row_covers(std::span<const Symbol> row, const Interaction& interaction) {
  const auto cols = interaction.columns().columns();
  const auto syms = interaction.symbols();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (row[cols[i]] != syms[i]) return false;
  }
  return true;
}

// Drops every listed interaction that `row` covers.
void erase_covered(std::vector<Interaction>& pending, std::span<const Symbol> row) {
  std::erase_if(pending, [&](const Interaction& i) { return row_covers(row, i); });
}

std::vector<Interaction> list_all_uncovered(const SymbolArray& array, std::uint64_t expected,
                                            const BuildConfig& config) {
  require(expected <= config.max_listed_interactions, ErrorKind::resource_limit,
          std::to_string(expected) + " uncovered interactions exceed the listing cap of " +
              std::to_string(config.max_listed_interactions));
  auto listed = uncovered_interactions(array, expected, {config.threads, config.max_column_sets});
  require(!listed.truncated, ErrorKind::internal_error, "uncovered interaction count changed while listing");
  return std::move(listed.interactions);
}

}  // namespace

std::string_view to_string(Strategy strategy) noexcept {
  for (const auto& [value, name] : kStrategyNames) {
    if (value == strategy) return name;
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (const auto& [value, text] : kStrategyNames) {
    if (text == name) return value;
  }
  return std::nullopt;
}

SymbolArray random_array(const CAParams& params, std::size_t n, std::uint64_t seed) {
  SymbolSampler sampler(seed, 0);
  std::vector<Symbol> cells(n * params.k());
  for (auto& cell : cells) cell = sampler.draw(params.v());
  return SymbolArray(params, std::move(cells));
}

std::uint64_t count_uncovered(const SymbolArray& array, const CountOptions& options) {
  check_column_sets(array.params(), options.max_column_sets);
  const detail::ColumnSetScanner scanner(array);
  const std::uint64_t sets = scanner.column_set_count();
  const std::uint64_t tuples = scanner.tuples();

  auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t missing = 0;
    scanner.scan(begin, end, [&](std::span<const unsigned>, std::span<const std::uint64_t> mask) {
      missing += tuples - popcount(mask);
      return true;
    });
    return missing;
  };

  const std::uint64_t workers = std::clamp<std::uint64_t>(options.threads, 1, std::max<std::uint64_t>(sets, 1));
  if (workers == 1) return count_range(0, sets);

  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] { partial[w] = count_range(sets * w / workers, sets * (w + 1) / workers); });
  }
  for (auto& worker : pool) worker.join();
  std::uint64_t total = 0;
  for (auto value : partial) total += value;
  return total;
}

UncoveredList uncovered_interactions(const SymbolArray& array, std::uint64_t limit, const CountOptions& options) {
  check_column_sets(array.params(), options.max_column_sets);
  const detail::ColumnSetScanner scanner(array);
  const auto& params = array.params();
  UncoveredList out;
  scanner.scan(0, scanner.column_set_count(), [&](std::span<const unsigned> columns,
                                                  std::span<const std::uint64_t> mask) {
    for (std::uint32_t r = 0; r < scanner.tuples(); ++r) {
      if (mask[r >> 6] >> (r & 63) & 1) continue;
      if (out.interactions.size() == limit) {
        out.truncated = true;
        return false;
      }
      out.interactions.emplace_back(ColumnSet({columns.begin(), columns.end()}),
                                    symbol_tuple_unrank(r, params.t(), params.v()));
    }
    return true;
  });
  return out;
}

BuildResult two_stage_build(const CAParams& params, const BuildConfig& config) {
  const auto stage1_start = std::chrono::steady_clock::now();
  const CountOptions counting{config.threads, config.max_column_sets};
  const std::uint64_t n = config.stage1_rows ? *config.stage1_rows : *two_stage_bound(params).stage1_rows;
  const std::uint64_t target = config.stage1_target == StageOneTarget::expectation_floor
                                   ? to_u64_checked(expected_uncovered_floor(params, n), "stage-1 target")
                                   : params.tuple_count();

  BuildLog log;
  log.strategy = Strategy::two_stage;
  log.stage1_rows = n;
  log.stage1_target = target;

  SymbolSampler sampler(config.seed, kStageOneStream);
  std::optional<SymbolArray> best;
  std::uint64_t best_count = 0;
  const std::uint32_t attempts = std::max<std::uint32_t>(config.max_stage1_attempts, 1);
  for (std::uint32_t attempt = 1; attempt <= attempts; ++attempt) {
    std::vector<Symbol> cells(n * params.k());
    for (auto& cell : cells) cell = sampler.draw(params.v());
    SymbolArray candidate(params, std::move(cells));
    const std::uint64_t missing = count_uncovered(candidate, counting);
    log.stage1_attempts = attempt;
    if (!best || missing < best_count) {
      best = std::move(candidate);
      best_count = missing;
    }
    if (best_count <= target) break;
  }
  log.uncovered_after_stage1 = best_count;
  if (best_count > target) {
    log.success = false;
    log.failure = "stage 1 left " + std::to_string(best_count) + " interactions uncovered after " +
                  std::to_string(attempts) + " attempts (target " + std::to_string(target) + ")";
  }
  log.stage1_seconds = detail::seconds_since(stage1_start);

  const auto stage2_start = std::chrono::steady_clock::now();
  SymbolArray array = std::move(*best);
  std::vector<Interaction> pending = list_all_uncovered(array, best_count, config);
  if (config.second_stage == StageTwo::one_row_each) {
    SymbolSampler filler(config.seed, kStageTwoStream);
    std::vector<Symbol> row(params.k());
    SymbolArray added(params);
    for (const auto& interaction : pending) {
      bool done = false;
      for (std::size_t r = 0; r < added.rows() && !done; ++r) done = row_covers(added.row(r), interaction);
      if (done) continue;
      for (auto& cell : row) cell = filler.draw(params.v());
      const auto cols = interaction.columns().columns();
      for (std::size_t i = 0; i < cols.size(); ++i) row[cols[i]] = interaction.symbols()[i];
      added.append_row(row);
    }
    log.stage2_rows = added.rows();
    array.append_rows(added);
  } else {
    while (!pending.empty()) {
      const auto row = density_row(params, pending);
      erase_covered(pending, row);
      array.append_row(row);
      ++log.stage2_rows;
    }
  }
  log.stage2_seconds = detail::seconds_since(stage2_start);
  log.total_rows = array.rows();
  return {std::move(array), std::move(log)};
}

BuildResult build(Strategy strategy, const CAParams& params, const BuildConfig& config) {
  switch (strategy) {
    case Strategy::two_stage: return two_stage_build(params, config);
    case Strategy::mt_cyclic: return moser_tardos_build(params, make_cyclic(params.v()), config);
    case Strategy::mt_frobenius: return moser_tardos_build(params, make_frobenius(params.v()), config);
    case Strategy::pgl: return pgl_build(params, config);
    case Strategy::density: return density_build(params, config);
  }
  fail(ErrorKind::internal_error, "unknown strategy");
}

namespace detail {

void erase_covered_by(std::vector<Interaction>& pending, std::span<const Symbol> row) { erase_covered(pending, row); }

}  // namespace detail

}  // namespace cabounds
