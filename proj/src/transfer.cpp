#include "lpi/transfer.hpp"

#include <algorithm>

#include "lpi/errors.hpp"

namespace lpi {

int QDiffSystem::state_index(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

const SystemTarget& QDiffSystem::target(const std::string& name) const {
  for (const auto& t : targets)
    if (t.name == name) return t;
  throw UnknownName("system has no target '" + name + "'");
}

QDiffSystem build_system(const TailTable& table,
                         const std::vector<std::pair<std::string, Restriction>>& targets) {
  const int k = static_cast<int>(table.tails.size());
  const int m = table.modulus;
  QDiffSystem s;
  s.m = m;
  s.P.assign(k, std::vector<BiRat>(k));
  for (int i = 0; i < k; ++i) {
    const Partition& pi = table.tails[i];
    s.labels.push_back(to_string(pi));
    BiRat lead = BiRat::monomial(Int(1), pi.length(), pi.weight());
    for (int j : table.linking[i]) s.P[i][j] = lead;
  }
  for (const auto& [name, r] : targets) {
    if (r.min_part - 1 > m || r.at_most_once > m)
      throw TargetUnresolvable("restriction '" + name + "' reaches beyond the modulus");
    std::vector<int> admitted;
    for (int j = 0; j < k; ++j)
      if (r.admits(table.tails[j])) admitted.push_back(j);
    int tau = -1;
    for (int i = 0; i < k && tau < 0; ++i)
      if (table.linking[i] == admitted) tau = i;
    if (tau < 0)
      throw TargetUnresolvable("no tail links to exactly the subset '" + name + "'");
    const Partition& t = table.tails[tau];
    SystemTarget tg;
    tg.name = name;
    tg.restriction = r;
    tg.state = tau;
    tg.prefactor = BiRat::monomial(Int(1), -t.length(), m * t.length() - t.weight());
    tg.shift = -m;
    s.targets.push_back(tg);
  }
  return s;
}

QDiffSystem build_system(const IdealSpec& spec) {
  return build_system(compute_linking(spec), spec.targets);
}

namespace {

// Returns true with row b = ratio * row a when ratio is a monomial.
bool proportional(const std::vector<BiRat>& a, const std::vector<BiRat>& b, BiRat& ratio) {
  std::size_t c = 0;
  while (c < a.size() && a[c].is_zero()) ++c;
  if (c == a.size()) return false;
  if (b[c].is_zero()) return false;
  ratio = b[c] / a[c];
  if (!ratio.is_monomial()) return false;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (b[j] != ratio * a[j]) return false;
  return true;
}

} // namespace

QDiffSystem merge_proportional(const QDiffSystem& s) {
  const int k = s.size();
  std::vector<int> rep(k, -1);
  std::vector<BiRat> mult(k, BiRat(1));
  std::vector<int> survivors;
  for (int i = 0; i < k; ++i) {
    if (rep[i] >= 0) continue;
    rep[i] = static_cast<int>(survivors.size());
    survivors.push_back(i);
    for (int j = i + 1; j < k; ++j) {
      if (rep[j] >= 0) continue;
      BiRat ratio;
      if (proportional(s.P[i], s.P[j], ratio)) {
        rep[j] = rep[i];
        mult[j] = ratio;  // F_j = ratio * F_i
      }
    }
  }
  const int r = static_cast<int>(survivors.size());
  QDiffSystem out;
  out.m = s.m;
  out.P.assign(r, std::vector<BiRat>(r));
  std::vector<BiRat> shifted(k);
  for (int j = 0; j < k; ++j) shifted[j] = shift_x(mult[j], s.m);
  for (int a = 0; a < r; ++a) {
    const int i = survivors[a];
    out.labels.push_back(s.labels[i]);
    for (int j = 0; j < k; ++j)
      if (!s.P[i][j].is_zero()) out.P[a][rep[j]] += s.P[i][j] * shifted[j];
  }
  for (const auto& t : s.targets) {
    SystemTarget nt = t;
    nt.state = rep[t.state];
    nt.prefactor = t.prefactor * shift_x(mult[t.state], t.shift);
    out.targets.push_back(nt);
  }
  return out;
}

namespace {

// x-coefficients of a polynomial entry
std::vector<PolyQ> x_coeffs(const BiRat& e) {
  if (!e.is_polynomial())
    throw NonPolynomialSystem("system entry is not a polynomial: series solving needs one");
  return e.num().coeffs();
}

// s * p(q) * q^k truncated at the order of s; k >= 0
void add_poly_times(SeriesQ& acc, const SeriesQ& s, const PolyQ& p, int k) {
  const int N = acc.order();
  for (int d = 0; d <= p.degree(); ++d) {
    const Int& c = p.coeff(d);
    if (c == 0) continue;
    const Rat cr(c);
    for (int i = 0; i + d + k < N; ++i)
      if (s[i] != 0) acc[i + d + k] += cr * s[i];
  }
}

// Solves A f = b over truncated power series by elimination; pivots need a
// nonzero constant term.
std::vector<SeriesQ> solve_series(std::vector<std::vector<SeriesQ>> A, std::vector<SeriesQ> b) {
  const int n = static_cast<int>(A.size());
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n && piv < 0; ++r)
      if (A[r][c][0] != 0) piv = r;
    if (piv < 0) throw NonUnipotentAtZero("constant-term system is singular", c);
    std::swap(A[piv], A[c]);
    std::swap(b[piv], b[c]);
    SeriesQ inv = A[c][c].inverse();
    for (int j = c; j < n; ++j) A[c][j] = A[c][j] * inv;
    b[c] = b[c] * inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || A[r][c].is_zero()) continue;
      SeriesQ f = A[r][c];
      for (int j = c; j < n; ++j)
        if (!A[c][j].is_zero()) A[r][j] -= f * A[c][j];
      b[r] -= f * b[c];
    }
  }
  return b;
}

// f[state][n] for n = 0..D at q-order N
std::vector<std::vector<SeriesQ>> solve_system(const QDiffSystem& s, int D, int N) {
  const int k = s.size();
  std::vector<std::vector<std::vector<PolyQ>>> E(k, std::vector<std::vector<PolyQ>>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) E[i][j] = x_coeffs(s.P[i][j]);
  auto coeff = [&](int i, int j, int a) -> const PolyQ* {
    return a < static_cast<int>(E[i][j].size()) ? &E[i][j][a] : nullptr;
  };
  std::vector<std::vector<SeriesQ>> f(k, std::vector<SeriesQ>(D + 1, SeriesQ(N)));
  // x^0: F_0(0) = 1, the other states follow from their rows
  {
    if (k > 1) {
      std::vector<std::vector<SeriesQ>> A(k - 1, std::vector<SeriesQ>(k - 1, SeriesQ(N)));
      std::vector<SeriesQ> b(k - 1, SeriesQ(N));
      for (int i = 1; i < k; ++i) {
        if (const PolyQ* p = coeff(i, 0, 0)) b[i - 1] = SeriesQ(*p, N);
        for (int j = 1; j < k; ++j) {
          SeriesQ e(N);
          if (const PolyQ* p = coeff(i, j, 0)) e = -SeriesQ(*p, N);
          if (i == j) e[0] += 1;
          A[i - 1][j - 1] = e;
        }
      }
      std::vector<SeriesQ> sol = solve_series(std::move(A), std::move(b));
      for (int i = 1; i < k; ++i) f[i][0] = sol[i - 1];
    }
    f[0][0] = SeriesQ::one(N);
    SeriesQ row0(N);
    for (int j = 0; j < k; ++j)
      if (const PolyQ* p = coeff(0, j, 0)) add_poly_times(row0, f[j][0], *p, 0);
    if (row0 != f[0][0])
      throw NonUnipotentAtZero("first row is inconsistent with F_0(0) = 1");
  }
  for (int n = 1; n <= D; ++n) {
    std::vector<SeriesQ> rhs(k, SeriesQ(N));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        for (int a = 1; a <= n && a < static_cast<int>(E[i][j].size()); ++a)
          if (!E[i][j][a].is_zero()) add_poly_times(rhs[i], f[j][n - a], E[i][j][a], s.m * (n - a));
    // f_n = rhs + q^{mn} P(0) f_n; each pass fixes m*n more coefficients
    std::vector<SeriesQ> cur = rhs;
    const int passes = N / (s.m * n) + 2;
    for (int it = 0; it < passes; ++it) {
      std::vector<SeriesQ> next = rhs;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (const PolyQ* p = coeff(i, j, 0)) add_poly_times(next[i], cur[j], *p, s.m * n);
      if (next == cur) break;
      cur.swap(next);
    }
    for (int i = 0; i < k; ++i) f[i][n] = std::move(cur[i]);
  }
  return f;
}

} // namespace

std::vector<SeriesQ> system_series(const QDiffSystem& s, int state, int D, int N) {
  if (state < 0 || state >= s.size()) throw InvalidArgument("state index out of range");
  auto f = solve_system(s, D, N);
  return f[state];
}

std::vector<SeriesQ> target_series(const QDiffSystem& s, const std::string& name, int D, int N) {
  const SystemTarget& t = s.target(name);
  Int c;
  int a, b;
  t.prefactor.monomial_parts(c, a, b);
  // g_n = c q^{b + shift (n - a)} f_{n - a}
  int lift = 0;
  for (int n = 0; n <= D; ++n) {
    const int e = b + t.shift * (n - a);
    if (n - a >= 0) lift = std::max(lift, -e);
  }
  const int depth = std::max(0, D - std::min(a, 0));
  auto f = solve_system(s, std::max(depth, 0), N + lift);
  std::vector<SeriesQ> g;
  for (int n = 0; n <= D; ++n) {
    const int src = n - a;
    if (src < 0 || src > depth) {
      g.emplace_back(N);
      continue;
    }
    const SeriesQ& fs = f[t.state][src];
    const int e = b + t.shift * src;
    if (e < 0 && fs.valuation() < -e)
      throw InternalShapeViolation("target prefactor leaves negative powers of q", n);
    SeriesQ r = fs.shifted(e).truncated(N);
    r *= Rat(c);
    g.push_back(std::move(r));
  }
  return g;
}

std::vector<SeriesQ> count_series(const IdealSpec& spec, int D, int N) {
  CountTable c = enumerate(spec, N - 1);
  std::vector<SeriesQ> out;
  for (int len = 0; len <= D; ++len) {
    SeriesQ s(N);
    if (len < static_cast<int>(c.size()))
      for (int n = 0; n < N; ++n) s[n] = Rat(static_cast<long>(c[len][n]));
    out.push_back(std::move(s));
  }
  return out;
}

} // namespace lpi
