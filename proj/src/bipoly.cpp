#include "lpi/bipoly.hpp"

#include <algorithm>

#include "lpi/errors.hpp"
#include "modp.hpp"

namespace lpi {

namespace {
const PolyQ kZeroPoly;
}

BiPoly::BiPoly(std::vector<PolyQ> coeffs) : c_(std::move(coeffs)) { trim(); }

BiPoly BiPoly::monomial(const Int& c, int i, int j) {
  if (i < 0 || j < 0) throw InvalidArgument("BiPoly::monomial with negative exponent");
  BiPoly r;
  if (c == 0) return r;
  r.c_.resize(static_cast<std::size_t>(i) + 1);
  r.c_[i] = PolyQ::monomial(c, j);
  return r;
}

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BiPoly::val_x() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

int BiPoly::deg_q() const {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

int BiPoly::val_q() const {
  int v = -1;
  for (const auto& p : c_) {
    if (p.is_zero()) continue;
    int w = p.valuation();
    v = v < 0 ? w : std::min(v, w);
  }
  return v;
}

std::size_t BiPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& p : c_) n += p.term_count();
  return n;
}

const PolyQ& BiPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroPoly;
  return c_[i];
}

const Int& BiPoly::low_term() const {
  for (const auto& p : c_)
    if (!p.is_zero()) return p.coeff(p.valuation());
  throw InvalidArgument("low_term of zero BiPoly");
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const PolyQ& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& p : c_) p *= c;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.resize(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

BiPoly BiPoly::mul_x_pow(int k) const {
  if (k < 0) throw InvalidArgument("mul_x_pow with negative exponent");
  if (is_zero() || k == 0) return *this;
  BiPoly r;
  r.c_.assign(static_cast<std::size_t>(k), PolyQ());
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

BiPoly BiPoly::div_x_pow(int k) const {
  if (is_zero() || k == 0) return *this;
  if (val_x() < k) throw InvalidArgument("div_x_pow: not divisible");
  BiPoly r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

BiPoly BiPoly::mul_q_pow(int k) const {
  BiPoly r = *this;
  for (auto& p : r.c_) p = p.shift(k);
  return r;
}

BiPoly BiPoly::div_q_pow(int k) const { return mul_q_pow(-k); }

std::pair<BiPoly, int> BiPoly::subst_xq(int s) const {
  if (is_zero()) return {*this, 0};
  int k = 0;
  if (s < 0) {
    // x^i gains q^{i s}; find the least lift making every term nonnegative
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      int low = c_[i].valuation() + static_cast<int>(i) * s;
      k = std::max(k, -low);
    }
  }
  BiPoly r;
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    r.c_[i] = c_[i].shift(static_cast<int>(i) * s + k);
  }
  // drop any common power of q that the lift introduced needlessly
  int v = r.val_q();
  int drop = std::min(v, k);
  if (drop > 0) {
    r = r.div_q_pow(drop);
    k -= drop;
  }
  return {r, k};
}

RationalQ BiPoly::eval_x_qpow(int M) const {
  if (is_zero()) return RationalQ();
  int lift = M < 0 ? -M * deg_x() : 0;
  PolyQ acc;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    acc.add_mul_shift(c_[i], Int(1), static_cast<int>(i) * M + lift);
  }
  if (lift == 0) return RationalQ(acc);
  return RationalQ(acc, PolyQ::q_pow(lift));
}

PolyQ BiPoly::eval_x(const PolyQ& c) const {
  PolyQ r;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * c + c_[i];
  return r;
}

PolyQ BiPoly::content_x() const {
  PolyQ g;
  for (const auto& p : c_) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p : gcd_full(g, p);
    if (g.is_one()) break;
  }
  if (!g.is_zero() && g.lead() < 0) g = -g;
  return g;
}

unsigned long BiPoly::eval_mod(unsigned long xv, unsigned long qv, unsigned long p) const {
  unsigned long r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    unsigned long ci = c_[i].eval_mod(qv, p);
    r = static_cast<unsigned long>((static_cast<unsigned __int128>(r) * xv + ci) % p);
  }
  return r;
}

BiPoly normalize_sign_high(const BiPoly& a) {
  if (a.is_zero() || a.lead_term() > 0) return a;
  return -a;
}

bool try_divide(const BiPoly& a, const BiPoly& b, BiPoly& quot) {
  if (b.is_zero()) throw InvalidArgument("division by zero BiPoly");
  if (a.is_zero()) {
    quot = BiPoly();
    return true;
  }
  if (a.deg_x() < b.deg_x()) return false;
  std::vector<PolyQ> r = a.coeffs();
  const int db = b.deg_x();
  std::vector<PolyQ> qc(static_cast<std::size_t>(a.deg_x() - db) + 1);
  for (int i = a.deg_x(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    PolyQ t;
    if (!try_divide(r[i], b.lead_x(), t)) return false;
    const int off = i - db;
    for (int j = 0; j <= db; ++j)
      if (!b.coeff(j).is_zero()) r[off + j] -= t * b.coeff(j);
    qc[off] = std::move(t);
  }
  for (int i = 0; i < db; ++i)
    if (!r[i].is_zero()) return false;
  quot = BiPoly(std::move(qc));
  return true;
}

BiPoly divexact(const BiPoly& a, const BiPoly& b) {
  BiPoly q;
  if (!try_divide(a, b, q)) throw InvalidArgument("divexact: inexact BiPoly division");
  return q;
}

namespace {

BiPoly divide_content(const BiPoly& a, const PolyQ& c) {
  if (c.is_one()) return a;
  std::vector<PolyQ> out;
  out.reserve(a.coeffs().size());
  for (const auto& p : a.coeffs()) out.push_back(p.is_zero() ? p : divexact(p, c));
  return BiPoly(std::move(out));
}

BiPoly primitive_x(const BiPoly& a) {
  if (a.is_zero()) return a;
  return normalize_sign_high(divide_content(a, a.content_x()));
}

// Degree in x of gcd(a, b) modulo a prime after fixing q; an upper bound
// for the true degree whenever both leading coefficients survive.
int image_gcd_degree(const BiPoly& a, const BiPoly& b) {
  static const unsigned long kPoints[] = {1234567, 7654321, 3141592, 2718281, 1618033};
  for (std::size_t attempt = 0; attempt < 5; ++attempt) {
    const std::uint32_t p = modp::prime(attempt);
    const unsigned long t = kPoints[attempt] % p;
    if (a.lead_x().eval_mod(t, p) == 0 || b.lead_x().eval_mod(t, p) == 0) continue;
    modp::Vec va(a.coeffs().size()), vb(b.coeffs().size());
    for (std::size_t i = 0; i < va.size(); ++i)
      va[i] = static_cast<std::uint32_t>(a.coeffs()[i].eval_mod(t, p));
    for (std::size_t i = 0; i < vb.size(); ++i)
      vb[i] = static_cast<std::uint32_t>(b.coeffs()[i].eval_mod(t, p));
    return static_cast<int>(modp::gcd(va, vb, p).size()) - 1;
  }
  return std::min(a.deg_x(), b.deg_x());
}

BiPoly prs_gcd(BiPoly r0, BiPoly r1) {
  if (r0.deg_x() < r1.deg_x()) std::swap(r0, r1);
  while (true) {
    BiPoly r = r0;
    while (!r.is_zero() && r.deg_x() >= r1.deg_x()) {
      PolyQ lr = r.lead_x();
      const int k = r.deg_x() - r1.deg_x();
      r *= r1.lead_x();
      r -= (r1 * BiPoly(lr)).mul_x_pow(k);
    }
    if (r.is_zero()) return primitive_x(r1);
    if (r.deg_x() == 0) return BiPoly(1);
    r0 = std::move(r1);
    r1 = primitive_x(r);
  }
}

} // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return normalize_sign_high(b);
  if (b.is_zero()) return normalize_sign_high(a);
  PolyQ ca = a.content_x(), cb = b.content_x();
  PolyQ c = gcd_full(ca, cb);
  const int vx = std::min(a.val_x(), b.val_x());
  BiPoly A = divide_content(a, ca).div_x_pow(a.val_x());
  BiPoly B = divide_content(b, cb).div_x_pow(b.val_x());
  BiPoly g(1);
  if (A.deg_x() > 0 && B.deg_x() > 0) {
    A = normalize_sign_high(A);
    B = normalize_sign_high(B);
    const int d = image_gcd_degree(A, B);
    BiPoly quot;
    if (d == 0) {
      g = BiPoly(1);
    } else if (A == B) {
      g = A;
    } else if (d == B.deg_x() && try_divide(A, B, quot)) {
      g = B;
    } else if (d == A.deg_x() && try_divide(B, A, quot)) {
      g = A;
    } else {
      g = prs_gcd(A, B);
    }
  }
  return normalize_sign_high((g * BiPoly(c)).mul_x_pow(vx));
}

} // namespace lpi
