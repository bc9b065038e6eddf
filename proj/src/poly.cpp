#include "lpi/poly.hpp"

#include <algorithm>
#include <utility>

#include "lpi/errors.hpp"
#include "modp.hpp"

namespace lpi {

namespace {
const Int kZero(0);
}

PolyQ::PolyQ(long c) {
  if (c != 0) c_.emplace_back(c);
}

PolyQ::PolyQ(const Int& c) {
  if (c != 0) c_.push_back(c);
}

PolyQ::PolyQ(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::monomial(const Int& c, int deg) {
  if (deg < 0) throw InvalidArgument("negative degree in PolyQ::monomial");
  PolyQ r;
  if (c == 0) return r;
  r.c_.assign(static_cast<std::size_t>(deg) + 1, Int(0));
  r.c_[deg] = c;
  return r;
}

PolyQ PolyQ::one_minus(int deg, long c) {
  PolyQ r(1);
  r.add_mul_shift(PolyQ(1), Int(-c), deg);
  return r;
}

void PolyQ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int PolyQ::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

std::size_t PolyQ::term_count() const {
  std::size_t n = 0;
  for (const auto& v : c_) n += (v != 0);
  return n;
}

const Int& PolyQ::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  PolyQ r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    const mpz_srcptr ai = a.c_[i].get_mpz_t();
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r.c_[i + j].get_mpz_t(), ai, b.c_[j].get_mpz_t());
  }
  r.trim();
  return r;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) {
  *this = *this * o;
  return *this;
}

PolyQ& PolyQ::operator*=(const Int& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= c;
  return *this;
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

PolyQ PolyQ::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  PolyQ r;
  if (k > 0) {
    r.c_.assign(static_cast<std::size_t>(k), Int(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }
  int v = valuation();
  if (v < -k) throw InvalidArgument("PolyQ::shift: not divisible by q^" + std::to_string(-k));
  r.c_.assign(c_.begin() + (-k), c_.end());
  return r;
}

void PolyQ::add_mul_shift(const PolyQ& b, const Int& c, int k) {
  if (b.is_zero() || c == 0) return;
  if (k < 0) throw InvalidArgument("PolyQ::add_mul_shift: negative shift");
  std::size_t need = b.c_.size() + static_cast<std::size_t>(k);
  if (c_.size() < need) c_.resize(need);
  for (std::size_t j = 0; j < b.c_.size(); ++j)
    mpz_addmul(c_[j + k].get_mpz_t(), c.get_mpz_t(), b.c_[j].get_mpz_t());
  trim();
}

Int PolyQ::content() const {
  Int g(0);
  for (const auto& v : c_) {
    if (v == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

PolyQ PolyQ::primitive() const {
  if (is_zero()) return *this;
  Int g = content();
  if (lead() < 0) g = -g;
  if (g == 1) return *this;
  PolyQ r = *this;
  for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return r;
}

Int PolyQ::eval(const Int& t) const {
  Int r(0);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
  return r;
}

unsigned long PolyQ::eval_mod(unsigned long t, unsigned long p) const {
  unsigned long r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    unsigned long ci = mpz_fdiv_ui(c_[i].get_mpz_t(), p);
    r = static_cast<unsigned long>((static_cast<unsigned __int128>(r) * t + ci) % p);
  }
  return r;
}

PolyQ PolyQ::compose_power(int k) const {
  if (k < 1) throw InvalidArgument("compose_power needs k >= 1");
  if (k == 1 || is_constant()) return *this;
  std::vector<Int> out(static_cast<std::size_t>(degree()) * k + 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * k] = c_[i];
  return PolyQ(std::move(out));
}

std::size_t PolyQ::max_bits() const {
  std::size_t b = 0;
  for (const auto& v : c_) b = std::max<std::size_t>(b, mpz_sizeinbase(v.get_mpz_t(), 2));
  return b;
}

bool operator<(const PolyQ& a, const PolyQ& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    int s = cmp(a.c_[i], b.c_[i]);
    if (s) return s < 0;
  }
  return false;
}

bool try_divide(const PolyQ& a, const PolyQ& b, PolyQ& quot) {
  if (b.is_zero()) throw InvalidArgument("division by zero polynomial");
  if (a.is_zero()) {
    quot = PolyQ();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  // trailing zeros must match up as well
  if (a.valuation() < b.valuation()) return false;
  std::vector<Int> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<Int> qc(static_cast<std::size_t>(a.degree() - db) + 1);
  Int t;
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.lead().get_mpz_t())) return false;
    mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), b.lead().get_mpz_t());
    const int off = i - db;
    for (int j = 0; j <= db; ++j)
      if (bc[j] != 0) mpz_submul(r[off + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    qc[off] = t;
  }
  for (int i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  quot = PolyQ(std::move(qc));
  return true;
}

PolyQ divexact(const PolyQ& a, const PolyQ& b) {
  PolyQ q;
  if (!try_divide(a, b, q)) throw InvalidArgument("divexact: inexact polynomial division");
  return q;
}

namespace {

// symmetric residue of x modulo m
Int symmetric(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

modp::Vec reduce_mod(const PolyQ& a, std::uint32_t p) {
  modp::Vec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    v[i] = static_cast<std::uint32_t>(mpz_fdiv_ui(a.coeffs()[i].get_mpz_t(), p));
  modp::trim(v);
  return v;
}

// gcd of primitive polynomials with nonzero constant terms and positive degree
PolyQ gcd_modular(const PolyQ& A, const PolyQ& B) {
  Int h;
  mpz_gcd(h.get_mpz_t(), A.lead().get_mpz_t(), B.lead().get_mpz_t());
  int best = std::min(A.degree(), B.degree()) + 1;
  std::vector<Int> acc;  // CRT accumulator, symmetric range
  Int modulus(1);
  PolyQ prev;
  bool have_prev = false;
  for (std::size_t pi = 0;; ++pi) {
    const std::uint32_t p = modp::prime(pi);
    if (mpz_fdiv_ui(A.lead().get_mpz_t(), p) == 0 || mpz_fdiv_ui(B.lead().get_mpz_t(), p) == 0)
      continue;
    modp::Vec g = modp::gcd(reduce_mod(A, p), reduce_mod(B, p), p);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg == 0) return PolyQ(1);
    if (dg > best) continue;  // unlucky prime
    const std::uint32_t hp = static_cast<std::uint32_t>(mpz_fdiv_ui(h.get_mpz_t(), p));
    for (auto& v : g) v = modp::mulmod(v, hp, p);
    if (dg < best) {
      best = dg;
      acc.assign(g.begin(), g.end());
      modulus = p;
      for (auto& v : acc) v = symmetric(v, modulus);
      have_prev = false;
    } else {
      // combine residues: x = acc + modulus * t, t = (g - acc) / modulus mod p
      const std::uint32_t minv =
          modp::inv(static_cast<std::uint32_t>(mpz_fdiv_ui(modulus.get_mpz_t(), p)), p);
      Int newmod = modulus * p;
      for (std::size_t i = 0; i < acc.size(); ++i) {
        std::uint32_t ai = static_cast<std::uint32_t>(mpz_fdiv_ui(acc[i].get_mpz_t(), p));
        std::uint32_t diff = (g[i] + p - ai) % p;
        std::uint32_t t = modp::mulmod(diff, minv, p);
        acc[i] = symmetric(acc[i] + modulus * t, newmod);
      }
      modulus = newmod;
    }
    PolyQ cand = PolyQ(acc).primitive();
    if (have_prev && cand == prev) {
      PolyQ qa, qb;
      if (try_divide(A, cand, qa) && try_divide(B, cand, qb)) return cand;
    }
    prev = cand;
    have_prev = true;
  }
}

} // namespace

PolyQ gcd_poly(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  const int va = a.valuation(), vb = b.valuation();
  const int v = std::min(va, vb);
  PolyQ A = a.shift(-va).primitive();
  PolyQ B = b.shift(-vb).primitive();
  PolyQ g;
  if (A.degree() == 0 || B.degree() == 0) {
    g = PolyQ(1);
  } else if (A == B) {
    g = A;
  } else {
    g = gcd_modular(A, B);
  }
  return g.shift(v);
}

PolyQ gcd_full(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() && b.is_zero()) return PolyQ();
  Int c;
  mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  PolyQ g = gcd_poly(a, b);
  return g * c;
}

PolyQ gcd_poly_euclid(const PolyQ& a, const PolyQ& b) {
  PolyQ r0 = a.primitive(), r1 = b.primitive();
  if (r0.degree() < r1.degree()) std::swap(r0, r1);
  while (!r1.is_zero()) {
    // pseudo-remainder with primitive-part reduction at every step
    PolyQ r = r0;
    while (!r.is_zero() && r.degree() >= r1.degree()) {
      Int lr = r.lead();
      const int k = r.degree() - r1.degree();
      r *= r1.lead();
      r.add_mul_shift(r1, -lr, k);
    }
    r0 = r1;
    r1 = r.primitive();
  }
  return r0.primitive();
}

} // namespace lpi
