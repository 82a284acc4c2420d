#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "cabounds/interaction.hpp"
#include "cabounds/symbol_array.hpp"

namespace cabounds::detail {

/// Column-major copy of an array plus the running mixed-radix tuple ranks of
/// the current column set; consecutive lexicographic column sets share a
/// prefix, so only the levels after the first changed column are recomputed.
class ColumnSetScanner {
 public:
  explicit ColumnSetScanner(const SymbolArray& array);

  std::uint32_t tuples() const noexcept { return tuples_; }
  std::uint64_t column_set_count() const noexcept { return sets_; }

  /// Calls fn(columns, mask) for column sets with lexicographic rank in
  /// [begin, end); bit r of `mask` is set when symbol-tuple rank r occurs.
  /// fn returns false to stop early.
  template <typename Fn>
  void scan(std::uint64_t begin, std::uint64_t end, Fn&& fn) const;

 private:
  unsigned t_;
  unsigned k_;
  unsigned v_;
  std::size_t n_;
  std::uint32_t tuples_;
  std::uint64_t sets_;
  std::vector<Symbol> columns_;
};

std::vector<unsigned> unrank_lex(std::uint64_t rank, unsigned t, unsigned k);
/// Lexicographic successor; returns the first changed position or t when exhausted.
unsigned advance_lex(std::span<unsigned> columns, unsigned k);

/// Removes every interaction `row` covers.
void erase_covered_by(std::vector<Interaction>& pending, std::span<const Symbol> row);

inline double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename Fn>
void ColumnSetScanner::scan(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
  if (begin >= end) return;
  std::vector<unsigned> columns = unrank_lex(begin, t_, k_);
  std::vector<std::uint32_t> partial(std::size_t{t_} * n_);
  std::vector<std::uint64_t> mask((tuples_ + 63) / 64);
  unsigned changed = 0;
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    for (unsigned level = changed; level < t_; ++level) {
      const Symbol* col = columns_.data() + std::size_t{columns[level]} * n_;
      std::uint32_t* out = partial.data() + std::size_t{level} * n_;
      if (level == 0) {
        for (std::size_t r = 0; r < n_; ++r) out[r] = col[r];
      } else {
        const std::uint32_t* prev = out - n_;
        for (std::size_t r = 0; r < n_; ++r) out[r] = prev[r] * v_ + col[r];
      }
    }
    std::fill(mask.begin(), mask.end(), 0);
    const std::uint32_t* ranks = partial.data() + std::size_t{t_ - 1} * n_;
    for (std::size_t r = 0; r < n_; ++r) mask[ranks[r] >> 6] |= std::uint64_t{1} << (ranks[r] & 63);
    if (!fn(std::span<const unsigned>(columns), std::span<const std::uint64_t>(mask))) return;
    if (rank + 1 < end) changed = advance_lex(columns, k_);
  }
}

}  // namespace cabounds::detail
