#include "cabounds/finite_field.hpp"

#include "cabounds/error.hpp"
#include "cabounds/numeric.hpp"

namespace cabounds {

namespace {

using Poly = std::vector<std::uint32_t>;  // c_0 .. c_n

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic polynomial g over GF(p).
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint32_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + static_cast<std::uint64_t>(p - lead) * g[i]) % p);
    }
    trim(f);
  }
  return f;
}

}  // namespace

bool FiniteField::is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  const std::size_t n = poly.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::uint64_t candidates = 1;
    for (std::size_t i = 0; i < d; ++i) candidates *= p;
    for (std::uint64_t code = 0; code < candidates; ++code) {
      Poly g(d + 1);
      std::uint64_t rest = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (poly_mod(poly, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> FiniteField::lowest_irreducible(std::uint32_t p, unsigned m) {
  std::uint64_t candidates = 1;
  for (unsigned i = 0; i < m; ++i) candidates *= p;
  // code enumerates (c_{m-1}, ..., c_0) lexicographically as a base-p number.
  for (std::uint64_t code = 0; code < candidates; ++code) {
    Poly f(m + 1);
    std::uint64_t rest = code;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  fail(ErrorKind::internal_error, "no irreducible polynomial found");
}

FiniteField::FiniteField(std::uint32_t order) : q_(order) {
  const auto decomposition = prime_power_decomposition(order);
  require(decomposition.has_value(), ErrorKind::unsupported_parameter,
          "finite field order must be a prime power (got " + std::to_string(order) + ")");
  require(order <= (1u << 16), ErrorKind::unsupported_parameter, "finite field order must be at most 2^16");
  p_ = static_cast<std::uint32_t>(decomposition->first);
  m_ = decomposition->second;
  modulus_ = lowest_irreducible(p_, m_);

  // Build exp/log tables from the first element whose powers reach every
  // nonzero element.
  const std::uint32_t group = q_ - 1;
  log_.assign(q_, 0);
  for (Element g = 1; g < q_; ++g) {
    std::vector<Element> powers{1};
    Element x = g;
    while (x != 1 && powers.size() <= group) {
      powers.push_back(x);
      x = poly_mul(x, g);
    }
    if (powers.size() == group) {
      exp_ = std::move(powers);
      break;
    }
  }
  require(exp_.size() == group, ErrorKind::internal_error, "no primitive element found");
  for (std::uint32_t i = 0; i < group; ++i) log_[exp_[i]] = i;
}

FiniteField::Element FiniteField::poly_mul(Element a, Element b) const {
  Poly fa(m_), fb(m_);
  for (unsigned i = 0; i < m_; ++i) {
    fa[i] = a % p_;
    a /= p_;
    fb[i] = b % p_;
    b /= p_;
  }
  Poly product(2 * m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    for (unsigned j = 0; j < m_; ++j) {
      product[i + j] = static_cast<std::uint32_t>((product[i + j] + static_cast<std::uint64_t>(fa[i]) * fb[j]) % p_);
    }
  }
  const Poly reduced = poly_mod(std::move(product), modulus_, p_);
  Element out = 0;
  for (std::size_t i = reduced.size(); i-- > 0;) out = out * p_ + reduced[i];
  return out;
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  if (p_ == 2) return a ^ b;
  Element out = 0;
  Element scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::neg(Element a) const {
  if (p_ == 2) return a;
  Element out = 0;
  Element scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FiniteField::Element FiniteField::inv(Element a) const {
  require(a != 0, ErrorKind::invalid_argument, "zero has no multiplicative inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

}  // namespace cabounds
