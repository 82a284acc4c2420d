#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cabounds::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_not_covering = 1,
  exit_parameter_error = 2,
  exit_resource_error = 3,
};

/// Runs one command line (without the program name) and returns the exit
/// status. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Environment variable holding the memory cap in MiB, read by the executable.
inline constexpr const char* kMemoryCapVariable = "CABOUNDS_MEMORY_CAP_MIB";

}  // namespace cabounds::cli
