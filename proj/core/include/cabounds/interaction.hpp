#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cabounds/symbol_array.hpp"

namespace cabounds {

/// A t-subset of {0, ..., k-1}, stored strictly increasing.
class ColumnSet {
 public:
  ColumnSet() = default;
  /// Throws invalid_argument unless `columns` is strictly increasing.
  explicit ColumnSet(std::vector<unsigned> columns);

  std::span<const unsigned> columns() const noexcept { return columns_; }
  std::size_t size() const noexcept { return columns_.size(); }
  unsigned operator[](std::size_t i) const { return columns_[i]; }

  friend auto operator<=>(const ColumnSet&, const ColumnSet&) = default;

 private:
  std::vector<unsigned> columns_;
};

/// The pair (columns, symbols) identifying one t-way interaction.
class Interaction {
 public:
  Interaction(ColumnSet columns, std::vector<Symbol> symbols);

  const ColumnSet& columns() const noexcept { return columns_; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::size_t strength() const noexcept { return symbols_.size(); }

  /// Human-facing form with 1-based columns, e.g. "{(1,0),(3,2)}".
  std::string to_string() const;

  friend auto operator<=>(const Interaction&, const Interaction&) = default;

 private:
  ColumnSet columns_;
  std::vector<Symbol> symbols_;
};

/// Checks columns < k, |columns| = t and symbols < v.
void validate(const Interaction& interaction, const CAParams& params);

bool covers(const SymbolArray& array, const Interaction& interaction);

/// Mixed-radix value of a symbol tuple, first symbol most significant.
std::uint64_t symbol_tuple_rank(std::span<const Symbol> symbols, unsigned v);
std::vector<Symbol> symbol_tuple_unrank(std::uint64_t rank, unsigned t, unsigned v);

/// Lexicographic rank of a column set among all t-subsets of {0..k-1}.
std::uint64_t column_set_rank(const ColumnSet& columns, unsigned k);
ColumnSet column_set_unrank(std::uint64_t rank, unsigned t, unsigned k);

/// Dense index in [0, C(k,t) * v^t):
///   column_set_rank(columns) * v^t + symbol_tuple_rank(symbols).
/// Column sets are ordered lexicographically, symbols as base-v digits.
std::uint64_t interaction_rank(const Interaction& interaction, const CAParams& params);
Interaction interaction_unrank(std::uint64_t rank, const CAParams& params);

/// Advances `columns` (strictly increasing, values < k) to the next subset in
/// lexicographic order; returns false after the last one.
bool next_combination(std::span<unsigned> columns, unsigned k);

/// Advances to the next subset in colexicographic order (ordered by largest
/// element first); returns false after the last one.
bool next_combination_colex(std::span<unsigned> columns, unsigned k);

}  // namespace cabounds
