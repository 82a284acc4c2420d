#pragma once

#include <iosfwd>
#include <string>

#include "cabounds/symbol_array.hpp"

namespace cabounds {

// Text format:
//   CA <N> <t> <k> <v>
//   N lines of k space-separated symbols in 0..v-1
// Lines starting with '#' are comments. The file ends with a newline.

void write_array(std::ostream& out, const SymbolArray& array);
std::string format_array(const SymbolArray& array);
void save_array(const std::string& path, const SymbolArray& array);

struct ReadOptions {
  /// Reject files whose row count differs from the header.
  bool strict_row_count = false;
};

struct ParsedArray {
  SymbolArray array;
  std::size_t declared_rows = 0;
  bool row_count_matches() const noexcept { return declared_rows == array.rows(); }
};

/// Throws Error(parse_error) naming the offending line.
ParsedArray read_array(std::istream& in, const ReadOptions& options = {});
ParsedArray load_array(const std::string& path, const ReadOptions& options = {});

}  // namespace cabounds
