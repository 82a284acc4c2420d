#include "cabounds/interaction.hpp"

#include <algorithm>

#include "cabounds/error.hpp"

namespace cabounds {

namespace {

std::uint64_t small_binomial(std::uint64_t n, std::uint64_t r) {
  return to_u64_checked(binomial(n, r), "binomial coefficient");
}

}  // namespace

ColumnSet::ColumnSet(std::vector<unsigned> columns) : columns_(std::move(columns)) {
  for (std::size_t i = 1; i < columns_.size(); ++i) {
    require(columns_[i - 1] < columns_[i], ErrorKind::invalid_argument, "column set must be strictly increasing");
  }
}

Interaction::Interaction(ColumnSet columns, std::vector<Symbol> symbols)
    : columns_(std::move(columns)), symbols_(std::move(symbols)) {
  require(columns_.size() == symbols_.size(), ErrorKind::invalid_argument,
          "interaction needs one symbol per column");
}

std::string Interaction::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(columns_[i] + 1) + "," + std::to_string(symbols_[i]) + ")";
  }
  return out + "}";
}

void validate(const Interaction& interaction, const CAParams& params) {
  require(interaction.strength() == params.t(), ErrorKind::invalid_argument,
          "interaction strength " + std::to_string(interaction.strength()) + " differs from t=" +
              std::to_string(params.t()));
  for (unsigned c : interaction.columns().columns()) {
    require(c < params.k(), ErrorKind::invalid_argument, "interaction column out of range");
  }
  for (Symbol s : interaction.symbols()) {
    require(s < params.v(), ErrorKind::invalid_argument, "interaction symbol out of range");
  }
}

bool covers(const SymbolArray& array, const Interaction& interaction) {
  const auto& p = array.params();
  require(interaction.strength() <= p.k(), ErrorKind::invalid_argument, "interaction wider than the array");
  for (unsigned c : interaction.columns().columns()) {
    require(c < p.k(), ErrorKind::invalid_argument, "interaction column out of range for array");
  }
  const auto cols = interaction.columns().columns();
  const auto syms = interaction.symbols();
  for (std::size_t r = 0; r < array.rows(); ++r) {
    const auto row = array.row(r);
    bool match = true;
    for (std::size_t i = 0; i < cols.size() && match; ++i) match = row[cols[i]] == syms[i];
    if (match) return true;
  }
  return false;
}

std::uint64_t symbol_tuple_rank(std::span<const Symbol> symbols, unsigned v) {
  std::uint64_t rank = 0;
  for (Symbol s : symbols) rank = rank * v + s;
  return rank;
}

std::vector<Symbol> symbol_tuple_unrank(std::uint64_t rank, unsigned t, unsigned v) {
  std::vector<Symbol> symbols(t);
  for (unsigned i = t; i-- > 0;) {
    symbols[i] = static_cast<Symbol>(rank % v);
    rank /= v;
  }
  return symbols;
}

std::uint64_t column_set_rank(const ColumnSet& columns, unsigned k) {
  const auto t = static_cast<unsigned>(columns.size());
  std::uint64_t rank = 0;
  unsigned next = 0;
  for (unsigned i = 0; i < t; ++i) {
    for (unsigned c = next; c < columns[i]; ++c) rank += small_binomial(k - 1 - c, t - 1 - i);
    next = columns[i] + 1;
  }
  return rank;
}

ColumnSet column_set_unrank(std::uint64_t rank, unsigned t, unsigned k) {
  std::vector<unsigned> columns;
  columns.reserve(t);
  unsigned c = 0;
  for (unsigned i = 0; i < t; ++i) {
    for (;; ++c) {
      const std::uint64_t block = small_binomial(k - 1 - c, t - 1 - i);
      if (rank < block) break;
      rank -= block;
    }
    columns.push_back(c++);
  }
  return ColumnSet(std::move(columns));
}

std::uint64_t interaction_rank(const Interaction& interaction, const CAParams& params) {
  validate(interaction, params);
  const std::uint64_t tuples = params.tuple_count();
  to_u64_checked(params.interaction_space_size(), "interaction space size");
  return column_set_rank(interaction.columns(), params.k()) * tuples +
         symbol_tuple_rank(interaction.symbols(), params.v());
}

Interaction interaction_unrank(std::uint64_t rank, const CAParams& params) {
  const std::uint64_t space = to_u64_checked(params.interaction_space_size(), "interaction space size");
  require(rank < space, ErrorKind::invalid_argument, "interaction rank out of range");
  const std::uint64_t tuples = params.tuple_count();
  return Interaction(column_set_unrank(rank / tuples, params.t(), params.k()),
                     symbol_tuple_unrank(rank % tuples, params.t(), params.v()));
}

bool next_combination(std::span<unsigned> columns, unsigned k) {
  const auto t = columns.size();
  for (std::size_t i = t; i-- > 0;) {
    if (columns[i] < k - t + i) {
      ++columns[i];
      for (std::size_t j = i + 1; j < t; ++j) columns[j] = columns[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool next_combination_colex(std::span<unsigned> columns, unsigned k) {
  const auto t = columns.size();
  for (std::size_t i = 0; i < t; ++i) {
    const unsigned limit = i + 1 < t ? columns[i + 1] : k;
    if (columns[i] + 1 < limit) {
      ++columns[i];
      for (std::size_t j = 0; j < i; ++j) columns[j] = static_cast<unsigned>(j);
      return true;
    }
  }
  return false;
}

}  // namespace cabounds
