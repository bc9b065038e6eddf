#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "lpi/errors.hpp"
#include "lpi/qseries.hpp"

namespace lpi {

namespace {

struct Combo {
  std::vector<int> base;  // indices into space.bases, nondecreasing
  std::vector<int> L3;
  std::vector<int> L1;
};

// Exponent parameters: a_i = e(e_i), b_i = e(2 e_i), c_ij = e(e_i + e_j).
// They fix Q and L2 since e(n) = sum_i h_i(n_i) + sum_{i<j} n_i n_j (c_ij - a_i - a_j)
// with h_i(v) = ((b_i - 2 a_i) v^2 + (4 a_i - b_i) v) / 2.
struct Params {
  int r = 0;
  std::vector<std::optional<long>> a, b;
  std::vector<std::vector<std::optional<long>>> c;
};

enum class Kind { A, B, C };
struct Slot {
  Kind kind;
  int i, j;
};

std::optional<long>& slot_ref(Params& p, const Slot& s) {
  if (s.kind == Kind::A) return p.a[s.i];
  if (s.kind == Kind::B) return p.b[s.i];
  return p.c[s.i][s.j];
}

// Parameters a point needs; the point introduces at most one of them.
std::vector<Slot> needed(const std::vector<int>& n) {
  std::vector<Slot> out;
  const int r = static_cast<int>(n.size());
  for (int i = 0; i < r; ++i) {
    if (n[i] >= 1) out.push_back({Kind::A, i, 0});
    if (n[i] >= 2) out.push_back({Kind::B, i, 0});
    for (int j = i + 1; j < r; ++j)
      if (n[i] >= 1 && n[j] >= 1) out.push_back({Kind::C, i, j});
  }
  return out;
}

bool introduces(const std::vector<int>& n, const Slot& s) {
  const int r = static_cast<int>(n.size());
  for (int k = 0; k < r; ++k) {
    int want = 0;
    if (s.kind == Kind::A && k == s.i) want = 1;
    if (s.kind == Kind::B && k == s.i) want = 2;
    if (s.kind == Kind::C && (k == s.i || k == s.j)) want = 1;
    if (n[k] != want) return false;
  }
  return true;
}

Rat half(long v) {
  Rat r(v, 2);
  r.canonicalize();
  return r;
}

Rat exponent_of(const Params& p, const std::vector<int>& n) {
  Rat e = 0;
  for (int i = 0; i < p.r; ++i) {
    if (!n[i]) continue;
    const long a = *p.a[i];
    if (n[i] == 1) {
      e += a;
    } else {
      const long b = *p.b[i];
      e += half((b - 2 * a) * n[i] * n[i] + (4 * a - b) * n[i]);
    }
    for (int j = i + 1; j < p.r; ++j)
      if (n[j]) e += Rat(n[i] * n[j]) * (*p.c[i][j] - a - *p.a[j]);
  }
  return e;
}

void fiber_points(const std::vector<int>& L3, int M, std::vector<int>& cur, int i,
                  std::vector<std::vector<int>>& out) {
  if (i == static_cast<int>(L3.size())) {
    if (M == 0) out.push_back(cur);
    return;
  }
  for (int v = 0; v * L3[i] <= M; ++v) {
    cur[i] = v;
    fiber_points(L3, M - v * L3[i], cur, i + 1, out);
  }
  cur[i] = 0;
}

class Searcher {
public:
  Searcher(const std::vector<SeriesQ>& target, const GuessSpace& space)
      : target_(target), space_(space), T_(space.q_order) {
    for (const auto& [A, B] : space.bases) {
      std::vector<SeriesQ> inv{SeriesQ::one(T_)};
      for (int v = 1; v <= space.depth; ++v) {
        SeriesQ s = inv.back();
        const int e = B + (v - 1) * A;
        if (e < T_) s.div_one_minus(e);
        inv.push_back(std::move(s));
      }
      inv_.push_back(std::move(inv));
    }
  }

  std::vector<AndrewsSum> run(const Combo& cb) const {
    const int r = static_cast<int>(cb.base.size());
    const int depth = space_.depth;
    for (int l : cb.L3)
      if (2 * l > depth) return {};
    Params p;
    p.r = r;
    p.a.assign(r, std::nullopt);
    p.b.assign(r, std::nullopt);
    p.c.assign(r, std::vector<std::optional<long>>(r, std::nullopt));
    std::vector<AndrewsSum> out;
    degree(cb, p, 1, out);
    return out;
  }

private:
  SeriesQ denominator(const Combo& cb, const std::vector<int>& n) const {
    SeriesQ s = SeriesQ::one(T_);
    for (std::size_t i = 0; i < n.size(); ++i)
      if (n[i]) s = s * inv_[cb.base[i]][n[i]];
    return s;
  }

  bool negative(const Combo& cb, const std::vector<int>& n) const {
    int s = 0;
    for (std::size_t i = 0; i < n.size(); ++i) s += cb.L1[i] * n[i];
    return s % 2;
  }

  struct Unknown {
    Slot slot;
    bool neg;
    SeriesQ den;
  };

  void degree(const Combo& cb, Params& p, int M, std::vector<AndrewsSum>& out) const {
    if (M > space_.depth) {
      finish(cb, p, out);
      return;
    }
    std::vector<std::vector<int>> pts;
    std::vector<int> cur(p.r, 0);
    fiber_points(cb.L3, M, cur, 0, pts);
    SeriesQ residual = target_[M];
    std::vector<Unknown> unknown;
    for (const auto& n : pts) {
      std::vector<Slot> miss;
      for (const auto& s : needed(n))
        if (!slot_ref(p, s)) miss.push_back(s);
      if (miss.empty()) {
        const Rat e = exponent_of(p, n);
        if (e.get_den() != 1 || e < 0) return;
        const long ev = e.get_num().get_si();
        if (ev >= T_) continue;
        SeriesQ t = denominator(cb, n).shifted(static_cast<int>(ev));
        if (negative(cb, n)) residual += t;
        else residual -= t;
        continue;
      }
      if (miss.size() != 1 || !introduces(n, miss[0])) return;
      unknown.push_back({miss[0], negative(cb, n), denominator(cb, n)});
    }
    assign(cb, p, M, residual, unknown, out);
  }

  void assign(const Combo& cb, Params& p, int M, const SeriesQ& residual,
              std::vector<Unknown>& unknown, std::vector<AndrewsSum>& out) const {
    if (unknown.empty()) {
      if (residual.is_zero()) degree(cb, p, M + 1, out);
      return;
    }
    const int v = residual.valuation();
    if (v >= T_) return;
    const bool lead_negative = residual[v] < 0;
    for (std::size_t u = 0; u < unknown.size(); ++u) {
      if (unknown[u].neg != lead_negative) continue;
      Unknown cur = unknown[u];
      std::optional<long>& ref = slot_ref(p, cur.slot);
      ref = v;
      SeriesQ next = residual;
      const SeriesQ t = cur.den.shifted(v);
      if (cur.neg) next += t;
      else next -= t;
      std::vector<Unknown> rest;
      for (std::size_t w = 0; w < unknown.size(); ++w)
        if (w != u) rest.push_back(unknown[w]);
      assign(cb, p, M, next, rest, out);
      ref.reset();
    }
  }

  void finish(const Combo& cb, const Params& p, std::vector<AndrewsSum>& out) const {
    AndrewsSum s;
    const int r = p.r;
    s.Q.assign(r, std::vector<Rat>(r));
    s.L2.assign(r, Rat(0));
    for (int i = 0; i < r; ++i) {
      const long a = *p.a[i], b = *p.b[i];
      s.Q[i][i] = half(b - 2 * a);
      s.L2[i] = half(4 * a - b);
      for (int j = i + 1; j < r; ++j) {
        s.Q[i][j] = s.Q[j][i] = half(*p.c[i][j] - a - *p.a[j]);
      }
    }
    for (int i = 0; i < r; ++i) {
      if (abs(s.L2[i]) > space_.max_abs) return;
      for (int j = 0; j < r; ++j)
        if (abs(s.Q[i][j]) > space_.max_abs) return;
      s.L1.emplace_back(cb.L1[i]);
      s.L3.push_back(cb.L3[i]);
      s.bases.push_back(space_.bases[cb.base[i]]);
    }
    out.push_back(std::move(s));
  }

  const std::vector<SeriesQ>& target_;
  const GuessSpace& space_;
  int T_;
  std::vector<std::vector<SeriesQ>> inv_;  // per base pair, 1 / (q^B; q^A)_v
};

std::vector<Combo> combos(const GuessSpace& sp) {
  std::vector<Combo> out;
  const int nb = static_cast<int>(sp.bases.size());
  for (int r = 1; r <= sp.max_r; ++r) {
    std::vector<int> base(r, 0);
    // nondecreasing base indices
    auto next_base = [&]() {
      int i = r - 1;
      while (i >= 0 && base[i] == nb - 1) --i;
      if (i < 0) return false;
      ++base[i];
      for (int j = i + 1; j < r; ++j) base[j] = base[i];
      return true;
    };
    do {
      std::vector<int> L3(r, 1);
      do {
        const int nsign = sp.signs ? (1 << r) : 1;
        for (int mask = 0; mask < nsign; ++mask) {
          std::vector<int> L1(r);
          for (int i = 0; i < r; ++i) L1[i] = (mask >> i) & 1;
          // variables sharing a base are ordered by (L3, L1)
          bool ok = true;
          for (int i = 0; i + 1 < r && ok; ++i)
            if (base[i] == base[i + 1] && std::make_pair(L3[i], L1[i]) > std::make_pair(L3[i + 1], L1[i + 1]))
              ok = false;
          if (ok) out.push_back({base, L3, L1});
        }
        int i = r - 1;
        while (i >= 0 && L3[i] == sp.max_l3) L3[i--] = 1;
        if (i < 0) break;
        ++L3[i];
      } while (true);
    } while (next_base());
  }
  return out;
}

// smallest serialization over variable permutations that keep the sum
std::string canonical_key(const AndrewsSum& s) {
  const int r = s.r();
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    AndrewsSum t = s;
    for (int i = 0; i < r; ++i) {
      t.bases[i] = s.bases[perm[i]];
      t.L1[i] = s.L1[perm[i]];
      t.L2[i] = s.L2[perm[i]];
      t.L3[i] = s.L3[perm[i]];
      for (int j = 0; j < r; ++j) t.Q[i][j] = s.Q[perm[i]][perm[j]];
    }
    t.name.clear();
    const std::string k = sum_to_json(t);
    if (best.empty() || k < best) best = k;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Rat weight_q(const AndrewsSum& s) {
  Rat w = 0;
  for (const auto& row : s.Q)
    for (const auto& v : row) w += abs(v);
  return w;
}

Rat weight_l2(const AndrewsSum& s) {
  Rat w = 0;
  for (const auto& v : s.L2) w += abs(v);
  return w;
}

} // namespace

std::vector<AndrewsSum> guess(const std::vector<SeriesQ>& target, const GuessSpace& space) {
  if (space.max_r < 1 || space.max_r > 3) throw InvalidArgument("guess searches 1 to 3 variables");
  if (space.depth < 1 || space.q_order < 1) throw InvalidArgument("guess needs positive depth and order");
  if (static_cast<int>(target.size()) <= space.depth)
    throw PrefixTooShort("target has fewer x-degrees than the search depth",
                         static_cast<long>(target.size()));
  std::vector<SeriesQ> tg;
  for (int M = 0; M <= space.depth; ++M) {
    if (target[M].order() < space.q_order)
      throw TruncationTooShallow("target series shorter than the q-order", target[M].order());
    tg.push_back(target[M].truncated(space.q_order));
  }
  if (tg[0] != SeriesQ::one(space.q_order)) return {};
  const Searcher searcher(tg, space);
  const std::vector<Combo> all = combos(space);
  std::vector<std::vector<AndrewsSum>> found(all.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < all.size(); i = next++) found[i] = searcher.run(all[i]);
  };
  const int jobs = std::max(1, space.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  struct Ranked {
    AndrewsSum s;
    Rat wq, wl;
    std::size_t index;
  };
  std::vector<Ranked> ranked;
  std::set<std::string> seen;
  std::size_t index = 0;
  for (auto& list : found)
    for (auto& s : list) {
      const std::size_t idx = index++;
      if (!seen.insert(canonical_key(s)).second) continue;
      // soundness: the candidate reproduces the target through the depth
      const auto g = andrews_expand(s, space.depth);
      bool match = true;
      for (int M = 0; M <= space.depth && match; ++M) match = expand_q(g[M], space.q_order) == tg[M];
      if (!match) continue;
      ranked.push_back({s, weight_q(s), weight_l2(s), idx});
    }
  std::stable_sort(ranked.begin(), ranked.end(), [](const Ranked& x, const Ranked& y) {
    if (x.s.r() != y.s.r()) return x.s.r() < y.s.r();
    if (x.wq != y.wq) return x.wq < y.wq;
    if (x.wl != y.wl) return x.wl < y.wl;
    return x.index < y.index;
  });
  std::vector<AndrewsSum> out;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    ranked[i].s.name = "candidate-" + std::to_string(i + 1);
    out.push_back(std::move(ranked[i].s));
  }
  return out;
}

std::vector<AndrewsSum> guess(const std::vector<RationalQ>& target, const GuessSpace& space) {
  std::vector<SeriesQ> s;
  for (const auto& v : target) s.push_back(expand_q(v, space.q_order));
  return guess(s, space);
}

} // namespace lpi
