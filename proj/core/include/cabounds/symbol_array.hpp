#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cabounds/params.hpp"

namespace cabounds {

using Symbol = std::uint8_t;

/// An N x k row-major matrix over {0, ..., v-1}.
class SymbolArray {
 public:
  explicit SymbolArray(CAParams params);
  SymbolArray(CAParams params, std::size_t rows);
  /// Adopts `cells` (row-major); throws invalid_argument on bad length or symbols.
  SymbolArray(CAParams params, std::vector<Symbol> cells);

  const CAParams& params() const noexcept { return params_; }
  std::size_t rows() const noexcept { return cells_.size() / params_.k(); }
  std::size_t columns() const noexcept { return params_.k(); }
  bool empty() const noexcept { return cells_.empty(); }

  Symbol at(std::size_t row, std::size_t column) const { return cells_[row * params_.k() + column]; }
  void set(std::size_t row, std::size_t column, Symbol symbol);

  std::span<const Symbol> row(std::size_t r) const {
    return {cells_.data() + r * params_.k(), params_.k()};
  }
  std::span<Symbol> mutable_row(std::size_t r) { return {cells_.data() + r * params_.k(), params_.k()}; }
  std::span<const Symbol> cells() const noexcept { return cells_; }

  void append_row(std::span<const Symbol> row);
  void append_rows(const SymbolArray& other);
  void erase_row(std::size_t r);

  friend bool operator==(const SymbolArray&, const SymbolArray&) = default;

 private:
  CAParams params_;
  std::vector<Symbol> cells_;
};

}  // namespace cabounds
