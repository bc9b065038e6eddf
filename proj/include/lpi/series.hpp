#pragma once

#include <vector>

#include "lpi/ratq.hpp"

namespace lpi {

// Power series in q truncated at q^N (exclusive) with rational coefficients.
class SeriesQ {
public:
  SeriesQ() = default;
  explicit SeriesQ(int order) : c_(static_cast<std::size_t>(order)) {}
  SeriesQ(const PolyQ& p, int order);
  SeriesQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {}

  static SeriesQ one(int order);

  int order() const { return static_cast<int>(c_.size()); }
  const Rat& operator[](int i) const { return c_[i]; }
  Rat& operator[](int i) { return c_[i]; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;
  // smallest exponent with a nonzero coefficient, order() when zero
  int valuation() const;

  SeriesQ truncated(int order) const;
  // q^k * this, dropping what falls off either end; k may be negative
  SeriesQ shifted(int k) const;

  SeriesQ& operator+=(const SeriesQ& o);
  SeriesQ& operator-=(const SeriesQ& o);
  SeriesQ& operator*=(const Rat& c);
  SeriesQ operator-() const;
  friend SeriesQ operator+(SeriesQ a, const SeriesQ& b) { return a += b; }
  friend SeriesQ operator-(SeriesQ a, const SeriesQ& b) { return a -= b; }
  friend SeriesQ operator*(const SeriesQ& a, const SeriesQ& b);
  friend bool operator==(const SeriesQ& a, const SeriesQ& b) { return a.c_ == b.c_; }
  friend bool operator!=(const SeriesQ& a, const SeriesQ& b) { return !(a == b); }

  // multiplicative inverse; constant term must be nonzero
  SeriesQ inverse() const;
  // this * (1 - c q^k), in place
  void mul_one_minus(int k, const Rat& c = Rat(1));
  // this / (1 - c q^k), in place, k >= 1
  void div_one_minus(int k, const Rat& c = Rat(1));

private:
  std::vector<Rat> c_;
};

// Power-series expansion of f truncated at q^N.
SeriesQ expand_q(const RationalQ& f, int N);

} // namespace lpi
