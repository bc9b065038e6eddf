#include "lpi/qseries.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "lpi/errors.hpp"
#include "lpi/text.hpp"

namespace lpi {

SeriesQ pochhammer(int B, int A, int n, int N, long sign) {
  if (A < 1) throw InvalidArgument("pochhammer step must be positive");
  if (n == kInfinite && B < 1) throw InvalidArgument("infinite pochhammer needs B >= 1");
  if (B < 0) throw InvalidArgument("pochhammer needs B >= 0");
  SeriesQ s = SeriesQ::one(N);
  // exponents increase with j, so factors from q^N on change nothing
  for (int j = 0; n == kInfinite || j < n; ++j) {
    const int e = B + j * A;
    if (e >= N) break;
    s.mul_one_minus(e, Rat(sign));
  }
  return s;
}

PolyQ pochhammer_poly(int B, int A, int n) {
  PolyQ p(1);
  for (int j = 0; j < n; ++j) {
    const int e = B + j * A;
    if (e < 0) throw InvalidArgument("pochhammer_poly needs nonnegative exponents");
    p *= PolyQ::one_minus(e);
  }
  return p;
}

RationalQ pochhammer_exact(int e, int step, int n) {
  PolyQ p(1);
  int shift = 0;
  bool flip = false;
  for (int j = 0; j < n; ++j) {
    const int k = e + j * step;
    if (k == 0) return RationalQ();
    if (k > 0) {
      p *= PolyQ::one_minus(k);
    } else {
      // 1 - q^k = -q^k (1 - q^{-k})
      p *= PolyQ::one_minus(-k);
      shift += k;
      flip = !flip;
    }
  }
  if (flip) p = -p;
  return RationalQ(p) * RationalQ::q_pow(shift);
}

// ---------------------------------------------------------------------------
// multi-sums

long AndrewsSum::exponent(const std::vector<int>& n) const {
  Rat e = 0;
  const int k = r();
  for (int i = 0; i < k; ++i) {
    if (!n[i]) continue;
    e += L2[i] * n[i];
    for (int j = 0; j < k; ++j)
      if (n[j]) e += Q[i][j] * n[i] * n[j];
  }
  if (e.get_den() != 1) {
    std::ostringstream os;
    os << "exponent " << e << " at (";
    for (int i = 0; i < k; ++i) os << (i ? "," : "") << n[i];
    os << ")";
    throw NonIntegralExponent(os.str());
  }
  return e.get_num().get_si();
}

bool AndrewsSum::negative(const std::vector<int>& n) const {
  Int s = 0;
  for (int i = 0; i < r(); ++i) s += L1[i] * n[i];
  return mpz_odd_p(s.get_mpz_t());
}

void AndrewsSum::validate() const {
  const int k = r();
  if (k < 1) throw InvalidArgument("multi-sum needs at least one variable");
  if (static_cast<int>(Q.size()) != k || static_cast<int>(L1.size()) != k ||
      static_cast<int>(L2.size()) != k || static_cast<int>(L3.size()) != k)
    throw InvalidArgument("multi-sum dimensions disagree");
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(Q[i].size()) != k) throw InvalidArgument("Q is not square");
    for (int j = 0; j < k; ++j)
      if (Q[i][j] != Q[j][i]) throw InvalidArgument("Q is not symmetric");
    if (L3[i] < 0) throw InvalidArgument("L3 has a negative coefficient");
    if (bases[i].first < 1 || bases[i].second < 1)
      throw InvalidArgument("bases need positive step and start");
  }
}

namespace {

// points n >= 0 with L3.n = M
void fiber(const std::vector<int>& L3, int M, std::vector<int>& cur, int i,
           std::vector<std::vector<int>>& out) {
  if (i == static_cast<int>(L3.size())) {
    if (M == 0) out.push_back(cur);
    return;
  }
  for (int v = 0; v * L3[i] <= M; ++v) {
    cur[i] = v;
    fiber(L3, M - v * L3[i], cur, i + 1, out);
  }
  cur[i] = 0;
}

} // namespace

std::vector<RationalQ> andrews_expand(const AndrewsSum& s, int M) {
  s.validate();
  for (int c : s.L3)
    if (c <= 0) throw InfiniteFiber("every L3 coefficient must be positive for exact expansion");
  const int k = s.r();
  std::vector<RationalQ> out;
  for (int m = 0; m <= M; ++m) {
    std::vector<std::vector<int>> pts;
    std::vector<int> cur(k, 0);
    fiber(s.L3, m, cur, 0, pts);
    std::vector<RationalQ> terms;
    for (const auto& n : pts) {
      const long e = s.exponent(n);
      PolyQ den(1);
      for (int i = 0; i < k; ++i) den *= pochhammer_poly(s.bases[i].second, s.bases[i].first, n[i]);
      PolyQ num(s.negative(n) ? -1 : 1);
      if (e >= 0)
        terms.emplace_back(num * PolyQ::q_pow(static_cast<int>(e)), den);
      else
        terms.emplace_back(num, den * PolyQ::q_pow(static_cast<int>(-e)));
    }
    out.push_back(terms.empty() ? RationalQ() : sum_all(terms));
  }
  return out;
}

SeriesQ andrews_at_one(const AndrewsSum& s, int N) {
  s.validate();
  const int k = s.r();
  for (int i = 0; i < k; ++i) {
    if (s.Q[i][i] < 0 || (s.Q[i][i] == 0 && s.L2[i] <= 0))
      throw InvalidArgument("truncated expansion needs each diagonal part to grow");
    for (int j = 0; j < k; ++j)
      if (s.Q[i][j] < 0) throw InvalidArgument("truncated expansion needs Q_ij >= 0");
  }
  // f_i(v) = Q_ii v^2 + L2_i v bounds the exponent from below together with
  // the nonnegative cross terms
  std::vector<Rat> fmin(k);
  for (int i = 0; i < k; ++i) {
    Rat best = 0;
    for (int v = 1;; ++v) {
      Rat f = s.Q[i][i] * v * v + s.L2[i] * v;
      if (f < best) best = f;
      else if (f > 0) break;
    }
    fmin[i] = best;
  }
  std::vector<std::vector<SeriesQ>> inv(k);  // inv[i][v] = 1 / (q^B; q^A)_v
  auto inverse_poch = [&](int i, int v) -> const SeriesQ& {
    auto& cache = inv[i];
    if (cache.empty()) cache.push_back(SeriesQ::one(N));
    while (static_cast<int>(cache.size()) <= v) {
      SeriesQ next = cache.back();
      const int j = static_cast<int>(cache.size()) - 1;
      const int e = s.bases[i].second + j * s.bases[i].first;
      if (e < N) next.div_one_minus(e);
      cache.push_back(std::move(next));
    }
    return cache[v];
  };
  SeriesQ acc(N);
  std::vector<int> n(k, 0);
  std::vector<Rat> tail(k + 1, Rat(0));  // sum of fmin over coordinates >= i
  for (int i = k - 1; i >= 0; --i) tail[i] = tail[i + 1] + fmin[i];
  // partial: exponent contributed by coordinates 0..i-1
  auto rec = [&](auto&& self, int i, const Rat& partial) -> void {
    if (i == k) {
      const long e = s.exponent(n);
      if (e < 0) throw InvalidArgument("negative exponent in truncated expansion");
      if (e >= N) return;
      const int len = N - static_cast<int>(e);
      SeriesQ t = SeriesQ::one(len);
      for (int j = 0; j < k; ++j)
        if (n[j]) t = t * inverse_poch(j, n[j]).truncated(len);
      if (s.negative(n)) t = -t;
      for (int d = 0; d < len; ++d)
        if (t[d] != 0) acc[d + static_cast<int>(e)] += t[d];
      return;
    }
    Rat prev_diag = 0;
    for (int v = 0;; ++v) {
      const Rat diag = s.Q[i][i] * v * v + s.L2[i] * v;
      // diag is convex in v, so once it grows it keeps growing
      if (v > 0 && diag >= prev_diag && partial + diag + tail[i + 1] >= N) break;
      prev_diag = diag;
      Rat cross = 0;
      for (int j = 0; j < i; ++j) cross += 2 * s.Q[i][j] * v * n[j];
      n[i] = v;
      if (partial + diag + cross + tail[i + 1] < N) self(self, i + 1, partial + diag + cross);
    }
    n[i] = 0;
  };
  rec(rec, 0, Rat(0));
  return acc;
}

// ---------------------------------------------------------------------------
// 2phi1

namespace {

int valuation_of(const RationalQ& r) { return r.num().valuation() - r.den().valuation(); }

} // namespace

SeriesQ phi21_expand(const Phi21Spec& sp, int N) {
  if (sp.base < 1) throw InvalidArgument("2phi1 base exponent must be positive");
  if (sp.z_exp < 1) throw InvalidArgument("2phi1 argument needs a positive q-power");
  if (sp.z_sign != 1 && sp.z_sign != -1) throw InvalidArgument("2phi1 argument sign must be +-1");
  SeriesQ acc(N);
  const int slack = std::abs(sp.a0) + std::abs(sp.a1) + std::abs(sp.b1) + sp.base;
  for (int n = 0; sp.z_exp * n < N + slack; ++n) {
    const RationalQ up = pochhammer_exact(sp.a0, sp.base, n) * pochhammer_exact(sp.a1, sp.base, n);
    if (up.is_zero()) break;
    const RationalQ low = pochhammer_exact(sp.base, sp.base, n) * pochhammer_exact(sp.b1, sp.base, n);
    if (low.is_zero()) throw DivisorVanishes("lower parameter factor vanishes", n);
    RationalQ t = up / low * RationalQ::q_pow(sp.z_exp * n);
    if (sp.z_sign < 0 && n % 2) t = -t;
    const int v = valuation_of(t);
    if (v >= N) continue;
    if (v < 0) throw InvalidArgument("2phi1 term with negative powers of q");
    acc += expand_q(t, N);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// functional equation

FunctionalSolution solve_functional(int a, int b, int c, int d, const RationalQ& alpha0,
                                    const RationalQ& alpha1, int M, int N) {
  using R = RationalQ;
  auto qp = [](int k) { return R::q_pow(k); };
  for (int n = 2; n <= M; ++n)
    if (a + 3 * n == 0) throw DivisorVanishes("1 - q^{a+3n} vanishes", n);
  FunctionalSolution sol;
  // alpha_n (1 - q^{3n})(1 - q^{a+3n}) = [(q^b + q^c) q^{3n-6}
  //   - q^a (q^{b+c-a-d+6} + q^d) q^{6n-12}] alpha_{n-2} - q^{b+c+6} q^{6n-24} alpha_{n-4}
  auto& f = sol.forward;
  for (int n = 0; n <= M; ++n) {
    if (n == 0) {
      f.push_back(alpha0);
      continue;
    }
    if (n == 1) {
      f.push_back(alpha1);
      continue;
    }
    R rhs = ((qp(b) + qp(c)) * qp(3 * n - 6) - qp(a) * (qp(b + c - a - d + 6) + qp(d)) * qp(6 * n - 12)) *
            f[n - 2];
    if (n >= 4) rhs -= qp(b + c + 6) * qp(6 * n - 24) * f[n - 4];
    const R div = (R(1) - qp(3 * n)) * (R(1) - qp(a + 3 * n));
    f.push_back(rhs / div);
  }
  // (-x^2 q^{d-6}; q^6)_inf = sum_j q^{6 j(j-1)/2 + (d-6) j} x^{2j} / (q^6; q^6)_j
  const int K = M / 2 + 1;
  std::vector<R> E, T, U;
  for (int j = 0; j <= K; ++j) {
    E.push_back(qp(3 * j * (j - 1) + (d - 6) * j) / pochhammer_exact(6, 6, j));
    R sgn = (j % 2) ? R(-1) : R(1);
    const R tden = pochhammer_exact(6, 6, j) * pochhammer_exact(a + 6, 6, j);
    const R uden = pochhammer_exact(9, 6, j) * pochhammer_exact(a + 9, 6, j);
    const R tnum = pochhammer_exact(b - d + 6, 6, j) * pochhammer_exact(c - d + 6, 6, j);
    const R unum = pochhammer_exact(b - d + 9, 6, j) * pochhammer_exact(c - d + 9, 6, j);
    T.push_back(tden.is_zero() ? R() : sgn * tnum * qp((d - 6) * j) / tden);
    U.push_back(uden.is_zero() ? R() : sgn * unum * qp((d - 6) * j) / uden);
  }
  for (int n = 0; n <= M; ++n) {
    const int k = n / 2;
    const auto& S = (n % 2) ? U : T;
    std::vector<R> terms;
    for (int j = 0; j <= k; ++j)
      if (!E[j].is_zero() && !S[k - j].is_zero()) terms.push_back(E[j] * S[k - j]);
    const R base = terms.empty() ? R() : sum_all(terms);
    sol.closed.push_back(((n % 2) ? alpha1 : alpha0) * base);
  }
  int lift = 0;
  for (const auto* v : {&sol.forward, &sol.closed})
    for (const auto& x : *v)
      if (!x.is_zero()) lift = std::max(lift, -valuation_of(x));
  sol.lift = lift;
  for (const auto& x : sol.forward) sol.forward_series.push_back(expand_q(x * qp(lift), N));
  for (const auto& x : sol.closed) sol.closed_series.push_back(expand_q(x * qp(lift), N));
  return sol;
}

// ---------------------------------------------------------------------------
// data files

std::string data_dir() {
  if (const char* e = std::getenv("LPI_DATA_DIR")) return e;
  return LPI_DATA_DIR;
}

namespace {

Rat parse_rat(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) throw ParseError("rational must be an integer or a string");
  Rat r;
  if (r.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad rational '" + j.get<std::string>() + "'");
  r.canonicalize();
  return r;
}

std::string rat_text(const Rat& r) { return r.get_str(); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

AndrewsSum parse_sum(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("multi-sum json: ") + e.what());
  }
  AndrewsSum s;
  try {
    s.name = j.value("name", "");
    for (const auto& row : j.at("Q")) {
      std::vector<Rat> r;
      for (const auto& v : row) r.push_back(parse_rat(v));
      s.Q.push_back(std::move(r));
    }
    for (const auto& v : j.at("L1")) s.L1.push_back(Int(static_cast<long>(v.get<long long>())));
    for (const auto& v : j.at("L2")) s.L2.push_back(parse_rat(v));
    for (const auto& v : j.at("L3")) s.L3.push_back(v.get<int>());
    for (const auto& v : j.at("bases")) s.bases.emplace_back(v.at(0).get<int>(), v.at(1).get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("multi-sum json: ") + e.what());
  }
  s.validate();
  return s;
}

std::string sum_to_json(const AndrewsSum& s) {
  nlohmann::json j;
  j["name"] = s.name;
  j["Q"] = nlohmann::json::array();
  for (const auto& row : s.Q) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(rat_text(v));
    j["Q"].push_back(r);
  }
  j["L1"] = nlohmann::json::array();
  for (const auto& v : s.L1) j["L1"].push_back(v.get_si());
  j["L2"] = nlohmann::json::array();
  for (const auto& v : s.L2) j["L2"].push_back(rat_text(v));
  j["L3"] = s.L3;
  j["bases"] = nlohmann::json::array();
  for (const auto& [A, B] : s.bases) j["bases"].push_back({A, B});
  return j.dump();
}

AndrewsSum load_sum(const std::string& name) {
  return parse_sum(read_file(data_dir() + "/sums/" + name + ".json"));
}

std::optional<Recurrence> load_stated_recurrence(const std::string& name) {
  std::ifstream in(data_dir() + "/recurrences/" + name + ".json");
  if (!in) return std::nullopt;
  const auto j = nlohmann::json::parse(in);
  if (!j.contains(name) || !j.at(name).contains("multisum")) return std::nullopt;
  Recurrence r;
  for (const auto& c : j.at(name).at("multisum")) r.coeffs.push_back(parse_bipoly(c.get<std::string>()));
  return r;
}

} // namespace lpi
