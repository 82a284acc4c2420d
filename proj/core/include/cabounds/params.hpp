#pragma once

#include <cstdint>
#include <string>

#include "cabounds/numeric.hpp"

namespace cabounds {

/// Largest alphabet representable by `Symbol`.
inline constexpr unsigned kMaxAlphabet = 256;

/// The triple (t, k, v): strength, factor count, alphabet size.
///
/// Construction enforces k >= t >= 2 and 2 <= v <= 256. The object is an
/// immutable value; the derived counts below are computed on demand with
/// exact integers.
class CAParams {
 public:
  CAParams(unsigned t, unsigned k, unsigned v);

  unsigned t() const noexcept { return t_; }
  unsigned k() const noexcept { return k_; }
  unsigned v() const noexcept { return v_; }

  /// v^t, the number of symbol tuples on one column set.
  BigInt tuples_per_column_set() const;
  BigInt column_set_count() const;
  /// C(k,t) * v^t.
  BigInt interaction_space_size() const;

  /// v^t as a machine word; throws resource_limit when it does not fit in 32 bits.
  std::uint32_t tuple_count() const;

  std::string to_string() const;

  friend bool operator==(const CAParams&, const CAParams&) = default;

 private:
  unsigned t_;
  unsigned k_;
  unsigned v_;
};

}  // namespace cabounds
