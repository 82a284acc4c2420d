#include "cabounds/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

#include "cabounds/error.hpp"

namespace cabounds {

BigInt binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

BigInt ipow(std::uint64_t base, std::uint64_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

Real log_big(const BigInt& value) {
  require(value > 0, ErrorKind::internal_error, "log of a non-positive integer");
  // cpp_bin_float has a 64-bit exponent range, so a direct conversion is exact
  // enough (50 digits) for every count this library produces.
  return boost::multiprecision::log(Real(value));
}

std::optional<std::uint64_t> to_u64(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return value.convert_to<std::uint64_t>();
}

std::uint64_t to_u64_checked(const BigInt& value, const char* what) {
  auto converted = to_u64(value);
  if (!converted) fail(ErrorKind::resource_limit, std::string(what) + " does not fit in 64 bits");
  return *converted;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power_decomposition(std::uint64_t v) {
  if (v < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::pair{v, 1u};
  unsigned m = 0;
  while (v % p == 0) {
    v /= p;
    ++m;
  }
  if (v != 1) return std::nullopt;
  return std::pair{p, m};
}

bool is_prime_power(std::uint64_t v) { return prime_power_decomposition(v).has_value(); }

Real log_ratio(const BigInt& b, const BigInt& a) {
  require(b > a && a > 0, ErrorKind::internal_error, "log_ratio requires b > a > 0");
  // log1p keeps precision when a/b is tiny (v^t in the thousands and beyond).
  return -boost::multiprecision::log1p(-Real(a) / Real(b));
}

}  // namespace cabounds
