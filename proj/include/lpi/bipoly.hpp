#pragma once

#include <utility>
#include <vector>

#include "lpi/poly.hpp"
#include "lpi/ratq.hpp"

namespace lpi {

// Polynomial in (x, q) over Z, held recursively as Z[q][x]: entry i is the
// coefficient of x^i. The same type carries recurrence coefficients with S
// in the role of x.
class BiPoly {
public:
  BiPoly() = default;
  BiPoly(long c) { if (c) c_.emplace_back(c); }
  BiPoly(const PolyQ& p) { if (!p.is_zero()) c_.push_back(p); }
  explicit BiPoly(std::vector<PolyQ> coeffs);

  // c * x^i * q^j
  static BiPoly monomial(const Int& c, int i, int j);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  int deg_x() const { return static_cast<int>(c_.size()) - 1; }
  int val_x() const;
  int deg_q() const;  // max over coefficients, -1 for zero
  int val_q() const;  // min over coefficients, -1 for zero
  std::size_t term_count() const;
  bool is_monomial() const { return term_count() == 1; }

  const PolyQ& coeff(int i) const;
  const PolyQ& lead_x() const { return c_.back(); }
  const std::vector<PolyQ>& coeffs() const { return c_; }
  // coefficient of the highest (x, q) term
  const Int& lead_term() const { return c_.back().lead(); }
  // coefficient of the lowest (x, q) term
  const Int& low_term() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const PolyQ& c);
  BiPoly operator-() const;
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const PolyQ& c) { return a *= c; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly mul_x_pow(int k) const;    // x^k * this, k >= 0
  BiPoly div_x_pow(int k) const;    // requires x^k | this
  BiPoly mul_q_pow(int k) const;    // q^k * this, k >= 0
  BiPoly div_q_pow(int k) const;    // requires q^k | this

  // q^k * f(x q^s) with k >= 0 the least exponent making it a polynomial
  std::pair<BiPoly, int> subst_xq(int s) const;
  // f(q^M, q) as an element of Q(q); M may be negative
  RationalQ eval_x_qpow(int M) const;
  // f(x, q) with x = c
  PolyQ eval_x(const PolyQ& c) const;

  // content in Z[q] (gcd of the x-coefficients, integer content included)
  PolyQ content_x() const;
  unsigned long eval_mod(unsigned long xv, unsigned long qv, unsigned long p) const;

private:
  void trim();
  std::vector<PolyQ> c_;
};

// gcd in Z[q][x] with positive leading term
BiPoly gcd(const BiPoly& a, const BiPoly& b);
bool try_divide(const BiPoly& a, const BiPoly& b, BiPoly& quot);
BiPoly divexact(const BiPoly& a, const BiPoly& b);
// sign chosen so the highest (x, q) term is positive
BiPoly normalize_sign_high(const BiPoly& a);

} // namespace lpi
