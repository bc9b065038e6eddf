#include "lpi/series.hpp"

#include <algorithm>

#include "lpi/errors.hpp"

namespace lpi {

SeriesQ::SeriesQ(const PolyQ& p, int order) : c_(static_cast<std::size_t>(order)) {
  const int n = std::min(order, p.degree() + 1);
  for (int i = 0; i < n; ++i) c_[i] = p.coeff(i);
}

SeriesQ SeriesQ::one(int order) {
  SeriesQ s(order);
  if (order > 0) s.c_[0] = 1;
  return s;
}

bool SeriesQ::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return v == 0; });
}

int SeriesQ::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return order();
}

SeriesQ SeriesQ::truncated(int order) const {
  if (order > this->order()) throw TruncationTooShallow("cannot extend a truncated series");
  return SeriesQ(std::vector<Rat>(c_.begin(), c_.begin() + order));
}

SeriesQ SeriesQ::shifted(int k) const {
  SeriesQ r(order());
  for (int i = 0; i < order(); ++i) {
    const int j = i + k;
    if (j >= 0 && j < order()) r.c_[j] = c_[i];
  }
  return r;
}

SeriesQ& SeriesQ::operator+=(const SeriesQ& o) {
  if (o.order() != order()) throw InvalidArgument("series orders differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

SeriesQ& SeriesQ::operator-=(const SeriesQ& o) {
  if (o.order() != order()) throw InvalidArgument("series orders differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

SeriesQ& SeriesQ::operator*=(const Rat& c) {
  for (auto& v : c_) v *= c;
  return *this;
}

SeriesQ SeriesQ::operator-() const {
  SeriesQ r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

SeriesQ operator*(const SeriesQ& a, const SeriesQ& b) {
  if (a.order() != b.order()) throw InvalidArgument("series orders differ");
  const int n = a.order();
  SeriesQ r(n);
  for (int i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j < n; ++j)
      if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

SeriesQ SeriesQ::inverse() const {
  const int n = order();
  if (n == 0) return *this;
  if (c_[0] == 0) throw DenominatorVanishesAtZero("series inverse with zero constant term");
  SeriesQ r(n);
  const Rat inv0 = 1 / c_[0];
  r.c_[0] = inv0;
  for (int k = 1; k < n; ++k) {
    Rat acc;
    for (int j = 1; j <= k; ++j)
      if (c_[j] != 0) acc += c_[j] * r.c_[k - j];
    r.c_[k] = -acc * inv0;
  }
  return r;
}

void SeriesQ::mul_one_minus(int k, const Rat& c) {
  if (k < 0) throw InvalidArgument("mul_one_minus with negative exponent");
  if (k == 0) {
    *this *= Rat(1) - c;
    return;
  }
  for (int i = order() - 1; i >= k; --i)
    if (c_[i - k] != 0) c_[i] -= c * c_[i - k];
}

void SeriesQ::div_one_minus(int k, const Rat& c) {
  if (k < 1) throw InvalidArgument("div_one_minus needs a positive exponent");
  for (int i = k; i < order(); ++i)
    if (c_[i - k] != 0) c_[i] += c * c_[i - k];
}

SeriesQ expand_q(const RationalQ& f, int N) {
  const PolyQ& den = f.den();
  if (den.coeff(0) == 0)
    throw DenominatorVanishesAtZero("denominator vanishes at q = 0");
  // long division by the denominator, one coefficient at a time
  SeriesQ r(N);
  const Int& d0 = den.coeff(0);
  const bool unit = (d0 == 1);
  for (int k = 0; k < N; ++k) {
    Rat acc = Rat(f.num().coeff(k));
    const int top = std::min(k, den.degree());
    for (int j = 1; j <= top; ++j)
      if (den.coeff(j) != 0) acc -= Rat(den.coeff(j)) * r[k - j];
    if (!unit) acc /= Rat(d0);
    r[k] = acc;
  }
  return r;
}

} // namespace lpi
