#include "lpi/birat.hpp"

#include "lpi/errors.hpp"

namespace lpi {

BiRat::BiRat(const BiPoly& num, const BiPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw InvalidArgument("BiRat with zero denominator");
  normalize();
}

BiRat BiRat::monomial(const Int& c, int i, int j) {
  BiPoly n = BiPoly::monomial(c, std::max(i, 0), std::max(j, 0));
  BiPoly d = BiPoly::monomial(Int(1), std::max(-i, 0), std::max(-j, 0));
  BiRat r(n, d, Raw{});
  r.fix_sign();
  return r;
}

void BiRat::fix_sign() {
  if (den_.lead_term() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

void BiRat::normalize() {
  if (num_.is_zero()) {
    den_ = BiPoly(1);
    return;
  }
  if (!den_.is_one()) {
    BiPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
  }
  fix_sign();
}

bool BiRat::is_monomial() const {
  return !num_.is_zero() && num_.is_monomial() && den_.is_monomial();
}

void BiRat::monomial_parts(Int& c, int& i, int& j) const {
  if (!is_monomial()) throw NonMonomialPrefactor("value is not a monomial");
  const int ni = num_.val_x(), di = den_.val_x();
  const int nj = num_.val_q(), dj = den_.val_q();
  // den is normalized to a positive monomial coefficient
  c = num_.lead_term();
  Int dc = den_.lead_term();
  if (dc != 1) throw NonMonomialPrefactor("monomial with non-unit denominator");
  i = ni - di;
  j = nj - dj;
}

BiRat& BiRat::operator+=(const BiRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;
  }
  BiPoly g = gcd(den_, o.den_);
  BiPoly d1 = divexact(den_, g), d2 = divexact(o.den_, g);
  BiPoly n = num_ * d2 + o.num_ * d1;
  if (n.is_zero()) return *this = BiRat();
  BiPoly d = den_ * d2;
  if (!g.is_one()) {
    BiPoly h = gcd(n, g);
    if (!h.is_one()) {
      n = divexact(n, h);
      d = divexact(d, h);
    }
  }
  num_ = std::move(n);
  den_ = std::move(d);
  fix_sign();
  return *this;
}

BiRat& BiRat::operator-=(const BiRat& o) { return *this += -o; }

BiRat& BiRat::operator*=(const BiRat& o) {
  if (is_zero() || o.is_zero()) return *this = BiRat();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  BiPoly g1 = den_.is_one() ? BiPoly(1) : gcd(o.num_, den_);
  BiPoly g2 = o.den_.is_one() ? BiPoly(1) : gcd(num_, o.den_);
  BiPoly n1 = g2.is_one() ? num_ : divexact(num_, g2);
  BiPoly d1 = g1.is_one() ? den_ : divexact(den_, g1);
  BiPoly n2 = g1.is_one() ? o.num_ : divexact(o.num_, g1);
  BiPoly d2 = g2.is_one() ? o.den_ : divexact(o.den_, g2);
  num_ = n1 * n2;
  den_ = d1 * d2;
  fix_sign();
  return *this;
}

BiRat& BiRat::operator/=(const BiRat& o) { return *this *= o.inverse(); }

BiRat BiRat::operator-() const { return BiRat(-num_, den_, Raw{}); }

BiRat BiRat::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero in Q(x,q)");
  BiRat r(den_, num_, Raw{});
  r.fix_sign();
  return r;
}

BiRat BiRat::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  BiRat r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

BiRat shift_x(const BiRat& f, int s) {
  if (s == 0 || f.is_zero()) return f;
  auto [n, kn] = f.num().subst_xq(s);
  auto [d, kd] = f.den().subst_xq(s);
  // f(xq^s) = (n / q^kn) / (d / q^kd)
  const int k = kd - kn;
  if (k >= 0) return BiRat(n.mul_q_pow(k), d);
  return BiRat(n, d.mul_q_pow(-k));
}

} // namespace lpi
