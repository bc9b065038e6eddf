#include "lpi/holo.hpp"

#include <algorithm>
#include <cmath>

#include "lpi/errors.hpp"

namespace lpi {

Recurrence normalize_recurrence(const std::vector<BiRat>& in) {
  int hi = static_cast<int>(in.size()) - 1;
  while (hi >= 0 && in[hi].is_zero()) --hi;
  if (hi < 0) throw DegenerateEquation("all recurrence coefficients vanish");
  BiPoly L(1);
  for (int k = 0; k <= hi; ++k) {
    const BiRat& v = in[k];
    if (v.is_zero() || v.den().is_one()) continue;
    L = L * divexact(v.den(), gcd(L, v.den()));
  }
  std::vector<BiPoly> p;
  for (int k = 0; k <= hi; ++k)
    p.push_back(in[k].is_zero() ? BiPoly() : in[k].num() * divexact(L, in[k].den()));
  // an order-zero relation keeps its coefficient: it says where g must vanish
  if (hi > 0) {
    BiPoly g;
    for (const auto& v : p) {
      if (v.is_zero()) continue;
      g = g.is_zero() ? normalize_sign_high(v) : gcd(g, v);
      if (g.is_one()) break;
    }
    if (!g.is_one())
      for (auto& v : p)
        if (!v.is_zero()) v = divexact(v, g);
  }
  if (p.back().low_term() < 0)
    for (auto& v : p) v = -v;
  return Recurrence{std::move(p)};
}

RationalQ eval_at(const BiPoly& c, int M) { return c.eval_x_qpow(M); }

Recurrence rec_from_qdiff(const QDiffEquation& eq) {
  // x^{M+J}: sum_i sum_a p_{i,a}(q) q^{i m (M + J - a)} g(M + J - a); with
  // k = J - a the coefficient of g(M + k) is sum_i p_{i,J-k}(q) q^{i m k} S^{i m}
  int J = 0;
  for (const auto& p : eq.coeffs)
    if (!p.is_zero()) J = std::max(J, p.deg_x());
  std::vector<BiRat> c(J + 1);
  for (int k = 0; k <= J; ++k) {
    BiPoly acc;
    for (int i = 0; i <= eq.order(); ++i) {
      const BiPoly& p = eq.coeffs[i];
      if (J - k > p.deg_x()) continue;
      const PolyQ& pa = p.coeff(J - k);
      if (pa.is_zero()) continue;
      acc += BiPoly(pa).mul_q_pow(i * eq.m * k).mul_x_pow(i * eq.m);
    }
    c[k] = BiRat(acc);
  }
  return normalize_recurrence(c);
}

std::vector<RationalQ> unroll(const HoloSequence& seq, int N) {
  const Recurrence& rec = seq.rec;
  const int r = rec.order();
  if (r < 0) throw InvalidArgument("empty recurrence");
  std::vector<RationalQ> g;
  for (int n = 0; n <= N; ++n) {
    if (n < static_cast<int>(seq.initials.size())) {
      g.push_back(seq.initials[n]);
      continue;
    }
    const int M = n - r;
    const RationalQ lead = eval_at(rec.lead(), M);
    if (lead.is_zero())
      throw LeadingCoefficientVanishes("leading coefficient vanishes at M = " + std::to_string(M), M);
    std::vector<RationalQ> terms;
    for (int i = 0; i < r; ++i) {
      const int idx = M + i;
      if (idx < 0 || rec.coeffs[i].is_zero() || g[idx].is_zero()) continue;
      terms.push_back(eval_at(rec.coeffs[i], M) * g[idx]);
    }
    g.push_back(terms.empty() ? RationalQ() : -sum_all(terms) / lead);
  }
  return g;
}

bool check_annihilates(const Recurrence& rec, const std::vector<RationalQ>& prefix) {
  const int r = rec.order();
  if (static_cast<int>(prefix.size()) <= r)
    throw PrefixTooShort("prefix of length " + std::to_string(prefix.size()) +
                             " does not reach past the order " + std::to_string(r),
                         static_cast<long>(prefix.size()));
  for (int M = 0; M + r < static_cast<int>(prefix.size()); ++M) {
    std::vector<RationalQ> terms;
    for (int i = 0; i <= r; ++i)
      if (!rec.coeffs[i].is_zero() && !prefix[M + i].is_zero())
        terms.push_back(eval_at(rec.coeffs[i], M) * prefix[M + i]);
    if (!terms.empty() && !sum_all(terms).is_zero()) return false;
  }
  return true;
}

namespace {

// R[k][j]: u(M + k) = sum_j R[k][j](q, S) u(M + j) for every solution u
std::vector<std::vector<BiRat>> reductions(const Recurrence& a, int upto) {
  const int r = a.order();
  std::vector<std::vector<BiRat>> R;
  if (r == 0) {
    R.assign(upto + 1, {});
    return R;
  }
  std::vector<BiRat> neg(r);
  const BiRat lead(a.lead());
  for (int j = 0; j < r; ++j) neg[j] = -BiRat(a.coeffs[j]) / lead;
  std::vector<BiRat> cur(r);
  for (int k = 0; k <= upto; ++k) {
    if (k < r) {
      cur.assign(r, BiRat());
      cur[k] = BiRat(1);
    } else {
      std::vector<BiRat> next(r);
      const BiRat top = shift_x(cur[r - 1], 1);
      for (int j = 0; j < r; ++j) {
        if (j > 0 && !cur[j - 1].is_zero()) next[j] = shift_x(cur[j - 1], 1);
        if (!top.is_zero() && !neg[j].is_zero()) next[j] += top * neg[j];
      }
      cur = std::move(next);
    }
    R.push_back(cur);
  }
  return R;
}

BiPoly row_content(const std::vector<BiPoly>& row) {
  BiPoly g;
  for (const auto& v : row) {
    if (v.is_zero()) continue;
    g = g.is_zero() ? normalize_sign_high(v) : gcd(g, v);
    if (g.is_one()) break;
  }
  return g;
}

// Nonzero y with sum_k y_k col[k] = 0, or nothing. Columns are first made
// polynomial, then reduced fraction-free with the content of each row removed.
std::optional<std::vector<BiRat>> kernel_vector(const std::vector<std::vector<BiRat>>& cols) {
  const int n = static_cast<int>(cols.size());
  const int rows = n ? static_cast<int>(cols[0].size()) : 0;
  std::vector<BiPoly> scale(n, BiPoly(1));
  std::vector<std::vector<BiPoly>> A(rows, std::vector<BiPoly>(n));
  for (int k = 0; k < n; ++k) {
    BiPoly L(1);
    for (const auto& v : cols[k])
      if (!v.is_zero() && !v.den().is_one()) L = L * divexact(v.den(), gcd(L, v.den()));
    scale[k] = L;
    for (int j = 0; j < rows; ++j)
      if (!cols[k][j].is_zero()) A[j][k] = cols[k][j].num() * divexact(L, cols[k][j].den());
  }
  std::vector<int> pivot_col;
  int pr = 0;
  for (int c = 0; c < n && pr < rows; ++c) {
    int best = -1;
    for (int r = pr; r < rows; ++r)
      if (!A[r][c].is_zero() && (best < 0 || A[r][c].term_count() < A[best][c].term_count()))
        best = r;
    if (best < 0) continue;
    std::swap(A[pr], A[best]);
    for (int r = pr + 1; r < rows; ++r) {
      if (A[r][c].is_zero()) continue;
      const BiPoly f = A[r][c];
      for (int j = c; j < n; ++j) A[r][j] = A[pr][c] * A[r][j] - f * A[pr][j];
      const BiPoly g = row_content(A[r]);
      if (!g.is_zero() && !g.is_one())
        for (auto& v : A[r])
          if (!v.is_zero()) v = divexact(v, g);
    }
    pivot_col.push_back(c);
    ++pr;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = -1;
  for (int c = n - 1; c >= 0 && free_col < 0; --c)
    if (!is_pivot[c]) free_col = c;
  if (free_col < 0) return std::nullopt;
  std::vector<BiRat> y(n);
  y[free_col] = BiRat(1);
  for (int i = static_cast<int>(pivot_col.size()) - 1; i >= 0; --i) {
    const int p = pivot_col[i];
    BiRat s;
    for (int j = p + 1; j < n; ++j)
      if (!A[i][j].is_zero() && !y[j].is_zero()) s += BiRat(A[i][j]) * y[j];
    y[p] = -s / BiRat(A[i][p]);
  }
  for (int k = 0; k < n; ++k)
    if (!y[k].is_zero()) y[k] *= BiRat(scale[k]);
  return y;
}

} // namespace

Recurrence plus_closure(const Recurrence& a, const Recurrence& b, int* searched) {
  const int ra = a.order(), rb = b.order();
  const int top = ra + rb;
  const auto Ra = reductions(a, top);
  const auto Rb = reductions(b, top);
  for (int rho = std::max(ra, rb); rho <= top; ++rho) {
    std::vector<std::vector<BiRat>> cols;
    for (int k = 0; k <= rho; ++k) {
      std::vector<BiRat> col(Ra[k]);
      col.insert(col.end(), Rb[k].begin(), Rb[k].end());
      cols.push_back(std::move(col));
    }
    if (auto y = kernel_vector(cols)) {
      Recurrence r = normalize_recurrence(*y);
      if (searched) *searched = r.order();
      return r;
    }
  }
  throw InternalShapeViolation("no annihilator up to the summed order", top);
}

NonvanishingReport leading_nonvanishing(const Recurrence& rec, int extra) {
  // monomials q^a S^b of the leading coefficient as (b, a)
  std::vector<std::pair<int, int>> mono;
  const BiPoly& c = rec.lead();
  for (int b = 0; b <= c.deg_x(); ++b) {
    const PolyQ& p = c.coeff(b);
    for (int a = 0; a <= p.degree(); ++a)
      if (p.coeff(a) != 0) mono.emplace_back(b, a);
  }
  NonvanishingReport rep;
  // a1 + b1 M = a2 + b2 M at M = (a2 - a1) / (b1 - b2)
  for (std::size_t i = 0; i < mono.size(); ++i)
    for (std::size_t j = i + 1; j < mono.size(); ++j) {
      const int db = mono[i].first - mono[j].first;
      if (db == 0) continue;
      const int da = mono[j].second - mono[i].second;
      const int t = static_cast<int>(std::floor(static_cast<double>(da) / db));
      rep.bound = std::max(rep.bound, t);
    }
  for (int M = 0; M <= rep.bound + extra; ++M) {
    rep.checked.push_back(M);
    if (rep.first_zero < 0 && eval_at(c, M).is_zero()) rep.first_zero = M;
  }
  return rep;
}

Certificate prove_equal(const HoloSequence& A, const std::vector<RationalQ>& b,
                        const std::optional<Recurrence>& b_rec, int n_check) {
  Certificate cert;
  if (b_rec) {
    cert.rec = plus_closure(A.rec, *b_rec);
    cert.source = "closure";
  } else {
    cert.rec = A.rec;
    cert.source = "prefix";
  }
  cert.order = cert.rec.order();
  const int n = std::max(n_check, cert.order + 1);
  if (static_cast<int>(b.size()) < n)
    throw PrefixTooShort("need " + std::to_string(n) + " values of the second sequence",
                         static_cast<long>(b.size()));
  const std::vector<RationalQ> a = unroll(A, n - 1);
  const std::vector<RationalQ> bb(b.begin(), b.begin() + n);
  for (int M = 0; M < n; ++M) {
    if (a[M] != bb[M])
      throw InitialMismatch("sequences differ at M = " + std::to_string(M), M);
    if (M < cert.order) cert.zero_initials.push_back(M);
  }
  cert.prefix = n;
  cert.rec_ok = check_annihilates(cert.rec, a) && check_annihilates(cert.rec, bb);
  if (b_rec) cert.rec_ok = cert.rec_ok && check_annihilates(*b_rec, bb);
  cert.nonvanishing = leading_nonvanishing(cert.rec);
  return cert;
}

} // namespace lpi
