#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace cabounds {

/// Exact counts (interaction totals, binomials, recurrence values).
using BigInt = boost::multiprecision::cpp_int;

/// 50 decimal digits; used for every log/exp that feeds a floor or ceiling.
using Real = boost::multiprecision::cpp_bin_float_50;

BigInt binomial(std::uint64_t n, std::uint64_t r);
BigInt ipow(std::uint64_t base, std::uint64_t exponent);

/// Natural log of a positive exact integer, evaluated in `Real`.
Real log_big(const BigInt& value);

std::optional<std::uint64_t> to_u64(const BigInt& value);
std::uint64_t to_u64_checked(const BigInt& value, const char* what);

/// Returns (p, m) with v = p^m when v is a prime power, found by trial division.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power_decomposition(std::uint64_t v);
bool is_prime_power(std::uint64_t v);

/// ln(b / (b - a)) for integers b > a > 0, i.e. -ln(1 - a/b).
Real log_ratio(const BigInt& b, const BigInt& a);

}  // namespace cabounds
