#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <random>

#include "lpi/errors.hpp"
#include "lpi/qseries.hpp"
#include "lpi/text.hpp"

using namespace lpi;

namespace {

SeriesQ totals(const IdealSpec& spec, int N) {
  const auto t = weight_totals(enumerate(spec, N - 1));
  SeriesQ s(N);
  for (int n = 0; n < N && n < static_cast<int>(t.size()); ++n) s[n] = Rat(static_cast<long>(t[n]));
  return s;
}

// 1 / prod (1 - q^k) over k < N in the given residues mod m
SeriesQ product_side(int m, const std::vector<int>& residues, int N) {
  SeriesQ s = SeriesQ::one(N);
  for (int k = 1; k < N; ++k)
    if (std::find(residues.begin(), residues.end(), k % m) != residues.end()) s.div_one_minus(k);
  return s;
}

SeriesQ prod_series(const SeriesQ& a, const SeriesQ& b) { return a * b; }

} // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(1, 1, 2, 5) == SeriesQ(parse_polyq("1 - q - q^2 + q^3"), 5));
  CHECK(pochhammer(3, 2, 0, 10) == SeriesQ::one(10));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> B(1, 6), A(1, 4), n(0, 8);
  for (int t = 0; t < 200; ++t) {
    const int b = B(rng), a = A(rng), k = n(rng);
    SeriesQ lhs = pochhammer(b, a, k + 1, 40);
    SeriesQ rhs = pochhammer(b, a, k, 40);
    rhs.mul_one_minus(b + a * k);
    CHECK(lhs == rhs);
    CHECK(SeriesQ(pochhammer_poly(b, a, k), 40) == pochhammer(b, a, k, 40));
  }
  CHECK(pochhammer_exact(-1, 6, 2) == parse_ratq("(1 - q^(-1))*(1 - q^5)"));
  CHECK(pochhammer_exact(-6, 3, 3).is_zero());
}

TEST_CASE("Euler's product inverts to the partition numbers") {
  const int N = 41;
  CHECK(pochhammer(1, 1, kInfinite, N).inverse() == totals(presets::unrestricted(), N));
}

TEST_CASE("multi-sum expansions") {
  const AndrewsSum t11 = load_sum("type-i-1");
  auto g = andrews_expand(t11, 4);
  CHECK(g[0] == RationalQ(1));
  CHECK(g[1] == parse_ratq("q/(1-q)"));
  CHECK(g[2] == parse_ratq("(q^3+q^4+q^6)/((1-q^2)*(1-q^3))"));
  const AndrewsSum t43 = load_sum("type-iv-b");
  auto want = count_series(presets::type_iv().with_target("min2once2"), 2, 40);
  CHECK(expand_q(andrews_expand(t43, 2)[2], 40) == want[2]);

  AndrewsSum half;
  half.Q = {{Rat(1, 2)}};
  half.L1 = {0};
  half.L2 = {Rat(0)};
  half.L3 = {1};
  half.bases = {{1, 1}};
  CHECK_THROWS_AS(andrews_expand(half, 2), NonIntegralExponent);
  half.L2 = {Rat(1, 2)};
  CHECK_NOTHROW(andrews_expand(half, 4));
  half.L3 = {0};
  CHECK_THROWS_AS(andrews_expand(half, 2), InfiniteFiber);
}

TEST_CASE("multi-sum files round trip") {
  for (const std::string name :
       {"type-i-1", "type-ii-a", "type-iii-1", "type-iv-b", "rogers-ramanujan", "gordon-3", "gollnitz-gordon"}) {
    CAPTURE(name);
    const AndrewsSum s = load_sum(name);
    CHECK(parse_sum(sum_to_json(s)) == s);
    CHECK(sum_to_json(parse_sum(sum_to_json(s))) == sum_to_json(s));
  }
  CHECK_THROWS_AS(parse_sum("{\"Q\": 3}"), ParseError);
}

TEST_CASE("classical fixtures match enumeration to q^40") {
  const int N = 41;
  SUBCASE("Rogers-Ramanujan") {
    const AndrewsSum s = load_sum("rogers-ramanujan");
    CHECK(andrews_at_one(s, N) == totals(presets::rogers_ramanujan(), N));
    auto per = count_series(presets::rogers_ramanujan(), 8, N);
    auto g = andrews_expand(s, 8);
    for (int M = 0; M <= 8; ++M) CHECK(expand_q(g[M], N) == per[M]);
  }
  SUBCASE("Gordon, k = 3") {
    const AndrewsSum s = load_sum("gordon-3");
    CHECK(andrews_at_one(s, N) == totals(presets::gordon(3), N));
    auto per = count_series(presets::gordon(3), 8, N);
    auto g = andrews_expand(s, 8);
    for (int M = 0; M <= 8; ++M) CHECK(expand_q(g[M], N) == per[M]);
  }
  SUBCASE("Gollnitz-Gordon, signed") {
    const AndrewsSum s = load_sum("gollnitz-gordon");
    CHECK(andrews_at_one(s, N) == totals(presets::gollnitz_gordon(), N));
    CHECK(andrews_at_one(s, N) == product_side(8, {1, 4, 7}, N));
  }
  SUBCASE("Gollnitz-Gordon, graded by length") {
    const AndrewsSum s = load_sum("gollnitz-gordon-graded");
    CHECK(andrews_at_one(s, N) == andrews_at_one(load_sum("gollnitz-gordon"), N));
    auto per = count_series(presets::gollnitz_gordon(), 8, N);
    auto g = andrews_expand(s, 8);
    for (int M = 0; M <= 8; ++M) CHECK(expand_q(g[M], N) == per[M]);
  }
}

TEST_CASE("the twelve multi-sums against enumeration and the recurrences") {
  const int mmax = 10, N = 41;
  for (const auto& name : identity_names()) {
    CAPTURE(name);
    const auto [p, target] = identity_target(name);
    const IdealSpec spec = preset(p);
    const auto counts = count_series(spec.with_target(target), mmax, N);
    const auto gt = andrews_expand(load_sum(name), mmax);
    const QDiffSystem sys = merge_proportional(build_system(spec));
    const auto g = unroll(HoloSequence{rec_from_qdiff(eliminate_target(sys, target)), {RationalQ(1)}}, mmax);
    for (int M = 0; M <= mmax; ++M) {
      CAPTURE(M);
      const SeriesQ a = expand_q(g[M], N), b = expand_q(gt[M], N);
      CHECK(a == counts[M]);
      CHECK(b == counts[M]);
      CHECK(a == b);
    }
  }
}

TEST_CASE("2phi1 expansions") {
  Phi21Spec trivial{1, 2, 3, 6, -1, 50};
  CHECK(phi21_expand(trivial, 40) == SeriesQ::one(40));
  const int N = 61;
  const SeriesQ front1 = prod_series(pochhammer(1, 1, kInfinite, N, -1), pochhammer(3, 6, kInfinite, N, -1));
  const SeriesQ front2 = prod_series(pochhammer(2, 1, kInfinite, N, -1), pochhammer(3, 6, kInfinite, N, -1));
  struct Row {
    const char* name;
    const char* preset;
    const char* target;
    SeriesQ front;
    Phi21Spec phi;
  };
  const Row rows[] = {
      {"type-iii-1", "type-iii", "min1", front1, {-1, 1, 2, 6, -1, 3}},
      {"type-iii-2", "type-iii", "min2", front2, {1, 5, 8, 6, -1, 3}},
      {"type-iv-1", "type-iv", "min1", front1, {-1, 1, 4, 6, -1, 3}},
      {"type-iv-a", "type-iv", "once1", front1, {1, 5, 4, 6, -1, 3}},
  };
  for (const auto& r : rows) {
    CAPTURE(std::string(r.name));
    const SeriesQ sum = andrews_at_one(load_sum(r.name), N);
    CHECK(sum == totals(preset(r.preset).with_target(r.target), N));
    CHECK(sum == r.front * phi21_expand(r.phi, N));
  }
}

TEST_CASE("product identities for III,a and IV,b to q^60") {
  const int N = 61;
  const SeriesQ a = andrews_at_one(load_sum("type-iii-a"), N);
  CHECK(a == product_side(12, {1, 3, 4, 6, 7, 10, 11}, N));
  CHECK(a == totals(presets::type_iii().with_target("once1"), N));
  const SeriesQ b = andrews_at_one(load_sum("type-iv-b"), N);
  CHECK(b == product_side(12, {2, 3, 5, 6, 7, 8, 11}, N));
  CHECK(b == totals(presets::type_iv().with_target("min2once2"), N));
}

TEST_CASE("mod 9 product against Type I enumeration to q^60") {
  const int N = 61;
  CHECK(totals(presets::type_i(), N) == product_side(9, {1, 3, 6, 8}, N));
}

TEST_CASE("functional equation: forward solution against the closed form") {
  const int tuples[][4] = {{1, 4, 5, 6}, {2, 3, 7, 5}, {4, 1, 2, 9}, {1, 0, 0, 6}, {5, 8, 2, 3}, {-1, 2, 4, 7}};
  for (const auto& t : tuples) {
    CAPTURE(t[0]);
    CAPTURE(t[3]);
    FunctionalSolution s = solve_functional(t[0], t[1], t[2], t[3], RationalQ(1), RationalQ(0), 8, 40);
    CHECK(s.agree());
    CHECK(s.forward[0] == RationalQ(1));
    CHECK(s.closed[0] == RationalQ(1));
    for (int n = 1; n <= 8; n += 2) CHECK(s.forward[n].is_zero());
  }
  FunctionalSolution odd = solve_functional(-3, 2, 4, 7, RationalQ(1), RationalQ(1), 8, 40);
  CHECK(odd.agree());
  CHECK_THROWS_AS(solve_functional(-6, 1, 2, 3, RationalQ(1), RationalQ(0), 8, 40), DivisorVanishes);
}

TEST_CASE("guessing re-finds Rogers-Ramanujan and Type I,1") {
  GuessSpace sp;
  sp.depth = 6;
  sp.q_order = 40;
  sp.jobs = 2;
  const auto start = std::chrono::steady_clock::now();
  {
    auto target = count_series(presets::rogers_ramanujan(), 6, 40);
    auto found = guess(target, sp);
    REQUIRE_FALSE(found.empty());
    const AndrewsSum& top = found.front();
    CHECK(top.r() == 1);
    CHECK(top.Q[0][0] == 1);
    CHECK(top.L2[0] == 0);
    CHECK(top.bases[0] == std::make_pair(1, 1));
  }
  {
    auto target = count_series(presets::type_i(), 6, 40);
    auto found = guess(target, sp);
    const AndrewsSum want = load_sum("type-i-1");
    bool hit = false;
    for (const auto& s : found) {
      auto g = andrews_expand(s, 6);
      for (int M = 0; M <= 6; ++M) CHECK(expand_q(g[M], 40) == target[M]);
      hit = hit || (s.Q == want.Q && s.L2 == want.L2 && s.L3 == want.L3 && s.bases == want.bases);
    }
    CHECK(hit);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  MESSAGE("guess took " << secs << " s");
  CHECK(secs < 120.0);
  std::vector<SeriesQ> zero(7, SeriesQ(40));
  CHECK(guess(zero, sp).empty());
}
