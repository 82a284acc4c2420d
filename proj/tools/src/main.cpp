#include <sys/resource.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cabounds_cli/commands.hpp"

namespace {

bool apply_memory_cap(std::ostream& err) {
  const char* text = std::getenv(cabounds::cli::kMemoryCapVariable);
  if (text == nullptr || *text == '\0') return true;
  char* end = nullptr;
  const unsigned long long mib = std::strtoull(text, &end, 10);
  if (*end != '\0' || mib == 0) {
    err << "error: " << cabounds::cli::kMemoryCapVariable << " must be a positive integer (MiB)\n";
    return false;
  }
  const rlim_t bytes = static_cast<rlim_t>(mib) << 20;
  const rlimit limit{bytes, bytes};
  if (setrlimit(RLIMIT_DATA, &limit) != 0) {
    err << "warning: could not apply memory cap\n";
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (!apply_memory_cap(std::cerr)) return cabounds::cli::exit_parameter_error;
  std::vector<std::string> args(argv + 1, argv + argc);
  return cabounds::cli::run(args, std::cout, std::cerr);
}
