#include "cabounds/error.hpp"

namespace cabounds {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::unsupported_parameter: return "unsupported parameter";
    case ErrorKind::resource_limit: return "resource limit";
    case ErrorKind::parse_error: return "parse error";
    case ErrorKind::internal_error: return "internal error";
  }
  return "unknown error";
}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace cabounds
