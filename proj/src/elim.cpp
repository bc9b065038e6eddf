#include "lpi/elim.hpp"

#include <map>

#include "lpi/errors.hpp"

namespace lpi {

namespace {

using Matrix = std::vector<std::vector<BiRat>>;

// sum_k op[k](x) u(x q^{k m})
using ShiftOp = std::map<int, BiRat>;

// op evaluated at x q^{d m}
ShiftOp shifted(const ShiftOp& op, int d, int m) {
  ShiftOp r;
  for (const auto& [k, c] : op) r[k + d] = shift_x(c, d * m);
  return r;
}

void add_scaled(ShiftOp& acc, const ShiftOp& op, const BiRat& f) {
  if (f.is_zero()) return;
  for (const auto& [k, c] : op) {
    BiRat& slot = acc[k];
    slot += f * c;
    if (slot.is_zero()) acc.erase(k);
  }
}

void swap_states(Matrix& P, int a, int b) {
  if (a == b) return;
  std::swap(P[a], P[b]);
  for (auto& row : P) std::swap(row[a], row[b]);
}

// Rows 0..upto: entry (r, r+1) is 1 and everything right of it is 0.
void assert_shape(const Matrix& P, int upto, int step) {
  const int k = static_cast<int>(P.size());
  for (int r = 0; r <= upto; ++r) {
    if (r + 1 < k && !P[r][r + 1].is_one())
      throw InternalShapeViolation("superdiagonal entry is not 1", step);
    for (int c = r + 2; c < k; ++c)
      if (!P[r][c].is_zero()) throw InternalShapeViolation("nonzero entry right of the superdiagonal", step);
  }
}

} // namespace

QDiffEquation normalize_equation(int m, const std::vector<BiRat>& in) {
  int lo = 0, hi = static_cast<int>(in.size()) - 1;
  while (lo <= hi && in[lo].is_zero()) ++lo;
  while (hi >= lo && in[hi].is_zero()) --hi;
  if (lo > hi) throw DegenerateEquation("all coefficients vanish");
  std::vector<BiRat> c;
  for (int k = lo; k <= hi; ++k) c.push_back(lo ? shift_x(in[k], -lo * m) : in[k]);
  BiPoly L(1);
  for (const auto& v : c) {
    if (v.is_zero() || v.den().is_one()) continue;
    BiPoly g = gcd(L, v.den());
    L = L * divexact(v.den(), g);
  }
  std::vector<BiPoly> p;
  for (const auto& v : c) {
    if (v.is_zero()) {
      p.emplace_back();
      continue;
    }
    p.push_back(v.num() * divexact(L, v.den()));
  }
  BiPoly g;
  for (const auto& v : p) {
    if (v.is_zero()) continue;
    g = g.is_zero() ? normalize_sign_high(v) : gcd(g, v);
    if (g.is_one()) break;
  }
  if (!g.is_one())
    for (auto& v : p)
      if (!v.is_zero()) v = divexact(v, g);
  if (p[0].low_term() < 0)
    for (auto& v : p) v = -v;
  QDiffEquation eq;
  eq.m = m;
  eq.coeffs = std::move(p);
  return eq;
}

QDiffEquation eliminate(const QDiffSystem& system, int target, EliminationTrace* trace) {
  const int k = system.size();
  const int m = system.m;
  if (target < 0 || target >= k) throw InvalidArgument("target state out of range");
  Matrix P = system.P;
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  swap_states(P, 0, target);
  std::swap(order[0], order[target]);
  int checks = 0;
  // i is the row whose right part is being folded into a new unknown
  int rows = k;
  for (int i = 0; i + 1 < k; ++i) {
    int t = -1;
    for (int c = i + 1; c < k && t < 0; ++c)
      if (!P[i][c].is_zero()) t = c;
    if (t < 0) {
      rows = i + 1;
      break;
    }
    swap_states(P, i + 1, t);
    std::swap(order[i + 1], order[t]);
    const int s = i + 1;
    std::vector<BiRat> piv(P[i].begin(), P[i].end());  // T(x) row s
    const BiRat inv = piv[s].inverse();
    // right factor T(x)^{-1}: column operations
    for (int r = 0; r < k; ++r) {
      if (P[r][s].is_zero()) continue;
      P[r][s] *= inv;
      for (int c = s + 1; c < k; ++c)
        if (!piv[c].is_zero()) P[r][c] -= P[r][s] * piv[c];
    }
    // left factor T(x q^{-m}): row s becomes a combination of rows s..k-1
    std::vector<BiRat> row(k);
    for (int c = s; c < k; ++c) {
      if (piv[c].is_zero()) continue;
      const BiRat w = shift_x(piv[c], -m);
      for (int j = 0; j < k; ++j)
        if (!P[c][j].is_zero()) row[j] += w * P[c][j];
    }
    P[s] = std::move(row);
    assert_shape(P, i, s + 1);
    ++checks;
  }
  if (trace) {
    trace->steps = rows;
    trace->order = order;
    trace->shape_checks = checks;
  }
  // u_{i+1}(x) = u_i(x q^{-m}) - sum_{j<=i} P[i][j](x q^{-m}) u_j(x), each u_j as
  // an operator on u_0 = F_target
  std::vector<ShiftOp> u(rows);
  u[0][0] = BiRat(1);
  for (int i = 0; i + 1 < rows; ++i) {
    ShiftOp next = shifted(u[i], -1, m);
    for (int j = 0; j <= i; ++j)
      if (!P[i][j].is_zero()) add_scaled(next, u[j], -shift_x(P[i][j], -m));
    u[i + 1] = std::move(next);
  }
  // last row: 0 = -u_l(x) + sum_j P[l][j](x) u_j(x q^m)
  const int l = rows - 1;
  ShiftOp rel;
  add_scaled(rel, u[l], BiRat(-1));
  for (int j = 0; j <= l; ++j)
    if (!P[l][j].is_zero()) add_scaled(rel, shifted(u[j], 1, m), P[l][j]);
  if (rel.empty()) throw DegenerateEquation("elimination produced the zero relation");
  const int lo = rel.begin()->first, hi = rel.rbegin()->first;
  std::vector<BiRat> c(hi - lo + 1);
  for (const auto& [s, v] : rel) c[s - lo] = lo ? shift_x(v, -lo * m) : v;
  return normalize_equation(m, c);
}

QDiffEquation rebase_to_target(const QDiffEquation& eq, const BiRat& prefactor, int shift) {
  if (!prefactor.is_monomial())
    throw NonMonomialPrefactor("target prefactor must be a monomial");
  if (prefactor.is_one() && shift == 0) return eq;
  // F(y) = G(y q^{-shift}) / prefactor(y q^{-shift}); substitute x -> x q^shift
  std::vector<BiRat> c;
  for (int k = 0; k <= eq.order(); ++k) {
    BiRat pk = shift_x(BiRat(eq.coeffs[k]), shift);
    c.push_back(pk / shift_x(prefactor, k * eq.m));
  }
  return normalize_equation(eq.m, c);
}

QDiffEquation eliminate_target(const QDiffSystem& system, const std::string& target,
                               EliminationTrace* trace) {
  const SystemTarget& t = system.target(target);
  QDiffEquation eq = eliminate(system, t.state, trace);
  return rebase_to_target(eq, t.prefactor, t.shift);
}

bool check_annihilation(const QDiffEquation& eq, const std::vector<SeriesQ>& g) {
  if (eq.coeffs.empty()) throw DegenerateEquation("equation has no coefficients");
  bool any = false;
  for (const auto& p : eq.coeffs)
    if (!p.is_zero()) any = true;
  if (!any) throw DegenerateEquation("all coefficients vanish");
  const int D = static_cast<int>(g.size()) - 1;
  // every x^n, n <= D, and q^e, e < N, of the product is exact from the data
  if (D < 1) throw TruncationTooShallow("need the x^1 coefficient at least", D);
  const int N = g[0].order();
  if (N < 1) throw TruncationTooShallow("need a positive q-order", N);
  for (int n = 0; n <= D; ++n) {
    SeriesQ acc(N);
    for (int i = 0; i <= eq.order(); ++i) {
      const BiPoly& p = eq.coeffs[i];
      for (int a = 0; a <= std::min(n, p.deg_x()); ++a) {
        const PolyQ& pa = p.coeff(a);
        if (pa.is_zero()) continue;
        const int base = i * eq.m * (n - a);
        for (int d = 0; d <= pa.degree(); ++d) {
          if (pa.coeff(d) == 0) continue;
          const Rat c(pa.coeff(d));
          for (int e = 0; e + d + base < N; ++e)
            if (g[n - a][e] != 0) acc[e + d + base] += c * g[n - a][e];
        }
      }
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

} // namespace lpi
