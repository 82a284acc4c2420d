#include "cabounds/symbol_array.hpp"

#include <algorithm>

#include "cabounds/error.hpp"

namespace cabounds {

SymbolArray::SymbolArray(CAParams params) : params_(params) {}

SymbolArray::SymbolArray(CAParams params, std::size_t rows) : params_(params), cells_(rows * params.k(), 0) {}

SymbolArray::SymbolArray(CAParams params, std::vector<Symbol> cells) : params_(params), cells_(std::move(cells)) {
  require(cells_.size() % params_.k() == 0, ErrorKind::invalid_argument,
          "cell count " + std::to_string(cells_.size()) + " is not a multiple of k=" + std::to_string(params_.k()));
  const auto bad = std::find_if(cells_.begin(), cells_.end(), [&](Symbol s) { return s >= params_.v(); });
  require(bad == cells_.end(), ErrorKind::invalid_argument,
          "cell value " + std::to_string(bad == cells_.end() ? 0 : *bad) + " is not below v=" +
              std::to_string(params_.v()));
}

void SymbolArray::set(std::size_t row, std::size_t column, Symbol symbol) {
  require(row < rows() && column < columns(), ErrorKind::invalid_argument, "cell index out of range");
  require(symbol < params_.v(), ErrorKind::invalid_argument, "symbol out of range");
  cells_[row * params_.k() + column] = symbol;
}

void SymbolArray::append_row(std::span<const Symbol> row) {
  require(row.size() == params_.k(), ErrorKind::invalid_argument,
          "row length " + std::to_string(row.size()) + " differs from k=" + std::to_string(params_.k()));
  for (Symbol s : row) require(s < params_.v(), ErrorKind::invalid_argument, "symbol out of range");
  cells_.insert(cells_.end(), row.begin(), row.end());
}

void SymbolArray::append_rows(const SymbolArray& other) {
  require(other.params_.k() == params_.k() && other.params_.v() <= params_.v(), ErrorKind::invalid_argument,
          "cannot append rows from an array with different shape");
  cells_.insert(cells_.end(), other.cells_.begin(), other.cells_.end());
}

void SymbolArray::erase_row(std::size_t r) {
  require(r < rows(), ErrorKind::invalid_argument, "row index out of range");
  const auto first = cells_.begin() + static_cast<std::ptrdiff_t>(r * params_.k());
  cells_.erase(first, first + params_.k());
}

}  // namespace cabounds
