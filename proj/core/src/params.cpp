#include "cabounds/params.hpp"

#include "cabounds/error.hpp"

namespace cabounds {

CAParams::CAParams(unsigned t, unsigned k, unsigned v) : t_(t), k_(k), v_(v) {
  require(t >= 2, ErrorKind::invalid_argument, "strength t must be at least 2 (got " + std::to_string(t) + ")");
  require(k >= t, ErrorKind::invalid_argument,
          "factor count k must be at least t (got k=" + std::to_string(k) + ", t=" + std::to_string(t) + ")");
  require(v >= 2, ErrorKind::invalid_argument, "alphabet size v must be at least 2 (got " + std::to_string(v) + ")");
  require(v <= kMaxAlphabet, ErrorKind::unsupported_parameter,
          "alphabet size v must be at most " + std::to_string(kMaxAlphabet));
}

BigInt CAParams::tuples_per_column_set() const { return ipow(v_, t_); }

BigInt CAParams::column_set_count() const { return binomial(k_, t_); }

BigInt CAParams::interaction_space_size() const { return column_set_count() * tuples_per_column_set(); }

std::uint32_t CAParams::tuple_count() const {
  BigInt count = tuples_per_column_set();
  require(count <= std::numeric_limits<std::uint32_t>::max(), ErrorKind::resource_limit,
          "v^t = " + count.str() + " is too large to enumerate");
  return count.convert_to<std::uint32_t>();
}

std::string CAParams::to_string() const {
  return "(t=" + std::to_string(t_) + ", k=" + std::to_string(k_) + ", v=" + std::to_string(v_) + ")";
}

}  // namespace cabounds
