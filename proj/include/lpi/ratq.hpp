#pragma once

#include "lpi/poly.hpp"

namespace lpi {

// Element of Q(q) as num/den over Z[q], coprime in Z[q] (integer content
// included) with positive leading coefficient in den. Two values are equal
// exactly when their representations are.
class RationalQ {
public:
  RationalQ() : den_(1) {}
  RationalQ(long c) : num_(c), den_(1) {}
  RationalQ(const Int& c) : num_(c), den_(1) {}
  RationalQ(const PolyQ& p) : num_(p), den_(1) {}
  RationalQ(const PolyQ& num, const PolyQ& den);

  // q^k for any integer k
  static RationalQ q_pow(int k);

  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalQ& operator+=(const RationalQ& o);
  RationalQ& operator-=(const RationalQ& o);
  RationalQ& operator*=(const RationalQ& o);
  RationalQ& operator/=(const RationalQ& o);
  RationalQ operator-() const;
  RationalQ inverse() const;

  friend RationalQ operator+(RationalQ a, const RationalQ& b) { return a += b; }
  friend RationalQ operator-(RationalQ a, const RationalQ& b) { return a -= b; }
  friend RationalQ operator*(RationalQ a, const RationalQ& b) { return a *= b; }
  friend RationalQ operator/(RationalQ a, const RationalQ& b) { return a /= b; }
  friend bool operator==(const RationalQ& a, const RationalQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalQ& a, const RationalQ& b) { return !(a == b); }

private:
  struct Raw {};
  RationalQ(PolyQ num, PolyQ den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  PolyQ num_, den_;
};

// Sum of many fractions using a running common denominator; cheaper than
// folding operator+ when the denominators share factors.
RationalQ sum_all(const std::vector<RationalQ>& terms);

} // namespace lpi
