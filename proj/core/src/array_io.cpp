#include "cabounds/array_io.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <optional>
#include <fstream>
#include <sstream>

#include "cabounds/error.hpp"

namespace cabounds {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& message) {
  fail(ErrorKind::parse_error, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::uint64_t> numbers(std::string_view text, std::size_t line) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == '\r') {
      ++i;
      continue;
    }
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || (end != text.data() + text.size() && *end != ' ' && *end != '\t' && *end != '\r')) {
      parse_fail(line, "expected a non-negative integer");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(end - text.data());
  }
  return out;
}

}  // namespace

void write_array(std::ostream& out, const SymbolArray& array) {
  const CAParams& p = array.params();
  out << "CA " << array.rows() << ' ' << p.t() << ' ' << p.k() << ' ' << p.v() << '\n';
  for (std::size_t r = 0; r < array.rows(); ++r) {
    const auto row = array.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      out << static_cast<unsigned>(row[c]);
    }
    out << '\n';
  }
}

std::string format_array(const SymbolArray& array) {
  std::ostringstream out;
  write_array(out, array);
  return out.str();
}

void save_array(const std::string& path, const SymbolArray& array) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), ErrorKind::resource_limit, "cannot open " + path + " for writing");
  write_array(out, array);
  out.flush();
  require(static_cast<bool>(out), ErrorKind::resource_limit, "write to " + path + " failed");
}

ParsedArray read_array(std::istream& in, const ReadOptions& options) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (text.empty()) parse_fail(1, "empty input");
  if (text.back() != '\n') {
    const std::size_t lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
    parse_fail(lines, "missing trailing newline");
  }

  std::optional<CAParams> params;
  std::size_t declared = 0;
  std::vector<Symbol> cells;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin < text.size()) {
    const std::size_t end = text.find('\n', begin);
    std::string_view line(text.data() + begin, end - begin);
    begin = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    if (!params) {
      if (line.substr(0, 3) != "CA ") parse_fail(line_no, "expected header 'CA <N> <t> <k> <v>'");
      const auto fields = numbers(line.substr(3), line_no);
      if (fields.size() != 4) parse_fail(line_no, "header needs four integers N t k v");
      if (fields[1] > 1024 || fields[2] > 1'000'000 || fields[3] > kMaxAlphabet) {
        parse_fail(line_no, "header values out of range");
      }
      try {
        params.emplace(static_cast<unsigned>(fields[1]), static_cast<unsigned>(fields[2]),
                       static_cast<unsigned>(fields[3]));
      } catch (const Error& e) {
        parse_fail(line_no, e.what());
      }
      declared = fields[0];
      continue;
    }
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    const auto row = numbers(line, line_no);
    if (row.size() != params->k()) {
      parse_fail(line_no, "expected " + std::to_string(params->k()) + " symbols, found " + std::to_string(row.size()));
    }
    for (std::uint64_t s : row) {
      if (s >= params->v()) parse_fail(line_no, "symbol " + std::to_string(s) + " outside 0.." + std::to_string(params->v() - 1));
      cells.push_back(static_cast<Symbol>(s));
    }
  }
  if (!params) parse_fail(line_no, "missing header");
  const std::size_t rows = cells.size() / params->k();
  if (options.strict_row_count && rows != declared) {
    parse_fail(line_no, "header declares " + std::to_string(declared) + " rows, found " + std::to_string(rows));
  }
  return ParsedArray{SymbolArray(*params, std::move(cells)), declared};
}

ParsedArray load_array(const std::string& path, const ReadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::invalid_argument, "cannot open " + path);
  return read_array(in, options);
}

}  // namespace cabounds
