#include <chrono>

#include "cabounds/construct.hpp"
#include "cabounds/error.hpp"
#include "construct_internal.hpp"

namespace cabounds {

std::vector<Symbol> density_row(const CAParams& params, std::span<const Interaction> uncovered) {
  const unsigned k = params.k();
  const unsigned v = params.v();
  const unsigned t = params.t();

  // weight[f] = v^(t-f): the expected-coverage contribution of an interaction
  // with f unfixed columns, scaled by v^(t-1) so it stays integral.
  std::vector<std::uint64_t> weight(t + 1, 1);
  for (unsigned f = t; f-- > 0;) weight[f] = weight[f + 1] * v;

  // Per interaction: still consistent with the fixed prefix, and how many of
  // its columns are unfixed. Interactions are bucketed by column for the sweep.
  std::vector<std::uint8_t> alive(uncovered.size(), 1);
  std::vector<std::uint8_t> free_columns(uncovered.size(), static_cast<std::uint8_t>(t));
  std::vector<std::vector<std::pair<std::uint32_t, Symbol>>> by_column(k);
  for (std::size_t i = 0; i < uncovered.size(); ++i) {
    const auto& interaction = uncovered[i];
    require(interaction.strength() == t, ErrorKind::invalid_argument, "interaction strength differs from t");
    const auto cols = interaction.columns().columns();
    for (std::size_t j = 0; j < cols.size(); ++j) {
      by_column.at(cols[j]).emplace_back(static_cast<std::uint32_t>(i), interaction.symbols()[j]);
    }
  }

  std::vector<Symbol> row(k, 0);
  std::vector<std::uint64_t> score(v);
  for (unsigned c = 0; c < k; ++c) {
    // Interactions not touching column c contribute equally for every symbol.
    std::fill(score.begin(), score.end(), 0);
    for (const auto& [index, symbol] : by_column[c]) {
      if (alive[index]) score[symbol] += weight[free_columns[index]];
    }
    Symbol best = 0;
    for (unsigned s = 1; s < v; ++s) {
      if (score[s] > score[best]) best = static_cast<Symbol>(s);
    }
    row[c] = best;
    for (const auto& [index, symbol] : by_column[c]) {
      if (!alive[index]) continue;
      if (symbol == best) {
        --free_columns[index];
      } else {
        alive[index] = 0;
      }
    }
  }
  return row;
}

std::optional<std::vector<Symbol>> density_row(const SymbolArray& array, const BuildConfig& config) {
  const CountOptions counting{config.threads, config.max_column_sets};
  const std::uint64_t missing = count_uncovered(array, counting);
  if (missing == 0) return std::nullopt;
  require(missing <= config.max_listed_interactions, ErrorKind::resource_limit,
          std::to_string(missing) + " uncovered interactions exceed the listing cap");
  const auto listed = uncovered_interactions(array, missing, counting);
  return density_row(array.params(), listed.interactions);
}

BuildResult density_build(const CAParams& params, const BuildConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const BigInt space = params.interaction_space_size();
  require(space <= config.max_listed_interactions, ErrorKind::resource_limit,
          "density build would list " + space.str() + " interactions, above the cap of " +
              std::to_string(config.max_listed_interactions));

  SymbolArray array(params);
  auto pending = uncovered_interactions(array, space.convert_to<std::uint64_t>(),
                                        {config.threads, config.max_column_sets})
                     .interactions;
  BuildLog log;
  log.strategy = Strategy::density;
  log.uncovered_after_stage1 = pending.size();
  while (!pending.empty()) {
    const auto row = density_row(params, pending);
    detail::erase_covered_by(pending, row);
    array.append_row(row);
  }
  log.stage2_rows = array.rows();
  log.total_rows = array.rows();
  log.stage2_seconds = detail::seconds_since(start);
  return {std::move(array), std::move(log)};
}

}  // namespace cabounds
