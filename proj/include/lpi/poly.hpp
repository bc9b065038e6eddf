#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace lpi {

using Int = mpz_class;
using Rat = mpq_class;

// Univariate polynomial in q with integer coefficients. Stored densely by
// degree with trailing zeros trimmed, so the zero polynomial is empty.
class PolyQ {
public:
  PolyQ() = default;
  PolyQ(long c);
  PolyQ(const Int& c);
  explicit PolyQ(std::vector<Int> coeffs);

  static PolyQ monomial(const Int& c, int deg);
  static PolyQ q_pow(int deg) { return monomial(Int(1), deg); }
  // 1 - c*q^deg
  static PolyQ one_minus(int deg, long c = 1);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  int valuation() const;
  std::size_t size() const { return c_.size(); }
  std::size_t term_count() const;

  const Int& coeff(int i) const;
  const Int& lead() const { return c_.back(); }
  const std::vector<Int>& coeffs() const { return c_; }

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const PolyQ& o);
  PolyQ& operator*=(const Int& c);
  PolyQ operator-() const;

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(PolyQ a, const Int& c) { return a *= c; }
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

  // multiply by q^k; k < 0 requires divisibility by q^-k
  PolyQ shift(int k) const;
  // a += c * q^k * b without temporaries
  void add_mul_shift(const PolyQ& b, const Int& c, int k);

  Int content() const;   // nonnegative gcd of coefficients
  PolyQ primitive() const;  // content removed, positive leading coefficient
  Int eval(const Int& t) const;
  unsigned long eval_mod(unsigned long t, unsigned long p) const;
  // p(q^k)
  PolyQ compose_power(int k) const;
  std::size_t max_bits() const;

  // deterministic total order used only for sorting containers
  friend bool operator<(const PolyQ& a, const PolyQ& b);

private:
  void trim();
  std::vector<Int> c_;
};

// Greatest common divisor in Q[q], returned primitive with positive leading
// coefficient; gcd(0, b) is the primitive part of b.
PolyQ gcd_poly(const PolyQ& a, const PolyQ& b);
// Greatest common divisor in Z[q] (integer content included).
PolyQ gcd_full(const PolyQ& a, const PolyQ& b);

// Exact quotient a/b in Z[q]; returns false when b does not divide a there.
bool try_divide(const PolyQ& a, const PolyQ& b, PolyQ& quot);
PolyQ divexact(const PolyQ& a, const PolyQ& b);

// Plain remainder sequence over Z (kept for cross-checking the modular gcd).
PolyQ gcd_poly_euclid(const PolyQ& a, const PolyQ& b);

} // namespace lpi
