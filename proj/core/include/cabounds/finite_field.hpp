#pragma once

#include <cstdint>
#include <vector>

namespace cabounds {

/// GF(p^m) for p^m <= 2^16.
///
/// Element `x` in [0, q) is the polynomial sum c_i X^i with c_i the base-p
/// digits of x, so element order is the lexicographic order of coefficient
/// tuples (c_{m-1}, ..., c_0): 0 is zero, 1 is one. The modulus is the
/// lexicographically least monic irreducible of degree m, found by search.
class FiniteField {
 public:
  using Element = std::uint32_t;

  explicit FiniteField(std::uint32_t order);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Coefficients c_0 .. c_m of the modulus, leading 1 last.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const;
  /// Throws invalid_argument for a == 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  /// Generator of the multiplicative group used for the log tables.
  Element primitive_element() const noexcept { return exp_[1]; }

  /// Lowest-lexicographic monic irreducible of degree m over GF(p)
  /// (coefficients c_0 .. c_m).
  static std::vector<std::uint32_t> lowest_irreducible(std::uint32_t p, unsigned m);
  static bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

 private:
  Element poly_mul(Element a, Element b) const;

  std::uint32_t p_ = 0;
  unsigned m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace cabounds
