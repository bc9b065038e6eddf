#include "lpi/ratq.hpp"

#include "lpi/errors.hpp"

namespace lpi {

RationalQ::RationalQ(const PolyQ& num, const PolyQ& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw InvalidArgument("RationalQ with zero denominator");
  normalize();
}

RationalQ RationalQ::q_pow(int k) {
  if (k >= 0) return RationalQ(PolyQ::q_pow(k));
  return RationalQ(PolyQ(1), PolyQ::q_pow(-k), Raw{});
}

void RationalQ::normalize() {
  if (num_.is_zero()) {
    den_ = PolyQ(1);
    return;
  }
  if (!den_.is_one()) {
    PolyQ g = gcd_full(num_, den_);
    if (!g.is_one()) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
  }
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalQ& RationalQ::operator+=(const RationalQ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;  // o reduced, so the sum stays reduced
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;
  }
  PolyQ g = gcd_full(den_, o.den_);
  PolyQ d1 = divexact(den_, g), d2 = divexact(o.den_, g);
  PolyQ n = num_ * d2 + o.num_ * d1;
  PolyQ d = den_ * d2;
  if (n.is_zero()) return *this = RationalQ();
  // only factors of g can be shared with n
  PolyQ h = gcd_full(n, g);
  if (!h.is_one()) {
    n = divexact(n, h);
    d = divexact(d, h);
  }
  num_ = std::move(n);
  den_ = std::move(d);
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

RationalQ& RationalQ::operator-=(const RationalQ& o) { return *this += -o; }

RationalQ& RationalQ::operator*=(const RationalQ& o) {
  if (is_zero() || o.is_zero()) return *this = RationalQ();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // cross-cancel; both operands are already reduced
  PolyQ g1 = den_.is_one() ? PolyQ(1) : gcd_full(o.num_, den_);
  PolyQ g2 = o.den_.is_one() ? PolyQ(1) : gcd_full(num_, o.den_);
  PolyQ n1 = g2.is_one() ? num_ : divexact(num_, g2);
  PolyQ d1 = g1.is_one() ? den_ : divexact(den_, g1);
  PolyQ n2 = g1.is_one() ? o.num_ : divexact(o.num_, g1);
  PolyQ d2 = g2.is_one() ? o.den_ : divexact(o.den_, g2);
  num_ = n1 * n2;
  den_ = d1 * d2;
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

RationalQ& RationalQ::operator/=(const RationalQ& o) { return *this *= o.inverse(); }

RationalQ RationalQ::operator-() const { return RationalQ(-num_, den_, Raw{}); }

RationalQ RationalQ::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero in Q(q)");
  RationalQ r(den_, num_, Raw{});
  if (r.den_.lead() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RationalQ sum_all(const std::vector<RationalQ>& terms) {
  // accumulate over a common denominator, reduce once at the end
  PolyQ num, den(1);
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    if (t.den() == den) {
      num += t.num();
      continue;
    }
    PolyQ g = gcd_poly(den, t.den());
    PolyQ m1 = divexact(t.den(), g);
    PolyQ m2 = divexact(den, g);
    num = num * m1 + t.num() * m2;
    den *= m1;
  }
  return RationalQ(num, den);
}

} // namespace lpi
