#pragma once

#include "lpi/bipoly.hpp"

namespace lpi {

// Element of Q(x, q) as num/den over Z[q][x], reduced by the full gcd, with
// the highest (x, q) term of den positive.
class BiRat {
public:
  BiRat() : den_(1) {}
  BiRat(long c) : num_(c), den_(1) {}
  BiRat(const BiPoly& p) : num_(p), den_(1) {}
  BiRat(const RationalQ& r) : num_(r.num()), den_(r.den()) {}
  BiRat(const BiPoly& num, const BiPoly& den);

  // c * x^i * q^j for any integers i, j
  static BiRat monomial(const Int& c, int i, int j);

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  // c * x^i * q^j with (i, j) possibly negative
  bool is_monomial() const;
  // exponents and coefficient of a monomial value
  void monomial_parts(Int& c, int& i, int& j) const;

  BiRat& operator+=(const BiRat& o);
  BiRat& operator-=(const BiRat& o);
  BiRat& operator*=(const BiRat& o);
  BiRat& operator/=(const BiRat& o);
  BiRat operator-() const;
  BiRat inverse() const;
  friend BiRat operator+(BiRat a, const BiRat& b) { return a += b; }
  friend BiRat operator-(BiRat a, const BiRat& b) { return a -= b; }
  friend BiRat operator*(BiRat a, const BiRat& b) { return a *= b; }
  friend BiRat operator/(BiRat a, const BiRat& b) { return a /= b; }
  friend bool operator==(const BiRat& a, const BiRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const BiRat& a, const BiRat& b) { return !(a == b); }

  BiRat pow(int e) const;

private:
  struct Raw {};
  BiRat(BiPoly n, BiPoly d, Raw) : num_(std::move(n)), den_(std::move(d)) {}
  void normalize();
  void fix_sign();
  BiPoly num_, den_;
};

// f(x q^s, q)
BiRat shift_x(const BiRat& f, int s);

} // namespace lpi
