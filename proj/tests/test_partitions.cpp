#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <set>

#include "golden.hpp"
#include "lpi/errors.hpp"
#include "lpi/partitions.hpp"

using namespace lpi;

namespace {

Partition Pt(std::vector<int> v) { return Partition(std::move(v)); }

// Golden tails and linking sets keyed by partition rather than by position,
// since the reference numbering is per-type.
void check_against_golden(const std::string& name) {
  const auto g = load_golden("tails.json").at(name);
  const auto start = std::chrono::steady_clock::now();
  TailTable t = compute_linking(preset(name));
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 1.0);
  CHECK(t.modulus == g.at("m").get<int>());
  std::vector<Partition> ref;
  for (const auto& p : g.at("tails")) ref.push_back(Pt(p.get<std::vector<int>>()));
  REQUIRE(t.tails.size() == ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const int idx = t.index_of(ref[i]);
    REQUIRE_MESSAGE(idx >= 0, "missing tail " << to_string(ref[i]));
    std::set<std::vector<int>> want, got;
    for (int j : g.at("linking")[i]) want.insert(ref[j].parts);
    for (int j : t.linking[idx]) got.insert(t.tails[j].parts);
    CHECK_MESSAGE(want == got, name << " tail " << to_string(ref[i]));
    CHECK(t.spans[idx] == 1);
  }
}

std::vector<std::string> linked_presets() {
  return {"type-i", "type-ii", "type-iii", "type-iv", "rogers-ramanujan", "distinct",
          "gordon-3", "gollnitz-gordon"};
}

} // namespace

TEST_CASE("membership") {
  CHECK(is_member(presets::type_i(), Pt({3, 3})));
  CHECK_FALSE(is_member(presets::type_i(), Pt({2, 2})));
  CHECK(is_member(presets::rogers_ramanujan(), Pt({5, 3, 1})));
  CHECK_FALSE(is_member(presets::rogers_ramanujan(), Pt({5, 4})));
  CHECK(is_member(presets::type_i(), Partition()));
  CHECK_FALSE(is_member(presets::type_i().with_target("min2"), Pt({4, 1})));
  CHECK(is_member(presets::gollnitz_gordon(), Pt({5, 3})));
  CHECK_FALSE(is_member(presets::gollnitz_gordon(), Pt({4, 2})));
}

TEST_CASE("tail_of") {
  CHECK(tail_of(Pt({3, 3, 2, 1, 1, 1}), 2) == Pt({2, 1, 1, 1}));
  CHECK(tail_of(Pt({5, 4}), 3).empty());
  CHECK(tail_of(Partition(), 3).empty());
}

TEST_CASE("tails and linking sets match the reference tables") {
  for (const char* n : {"type-i", "type-ii", "type-iii", "type-iv", "distinct", "rogers-ramanujan"}) {
    CAPTURE(n);
    check_against_golden(n);
  }
  CHECK(compute_tails(presets::type_iii()).size() == 15);
  auto d = compute_tails(presets::distinct());
  CHECK(d == std::vector<Partition>{Partition(), Pt({1})});
}

TEST_CASE("named linking examples") {
  TailTable t1 = compute_linking(presets::type_i());
  std::set<std::vector<int>> got;
  for (int j : t1.linking[t1.index_of(Pt({3, 3}))]) got.insert(t1.tails[j].parts);
  CHECK(got == std::set<std::vector<int>>{{}, {3}, {3, 3}});
  TailTable t2 = compute_linking(presets::type_ii());
  got.clear();
  for (int j : t2.linking[t2.index_of(Pt({2}))]) got.insert(t2.tails[j].parts);
  CHECK(got.size() == 6);
  CHECK(got.count({1, 1}) == 0);
}

TEST_CASE("unbounded multiplicity is rejected") {
  CHECK_THROWS_AS(compute_tails(presets::unrestricted()), TailSetInfinite);
}

TEST_CASE("non-local specifications are caught") {
  // a rule reaching across more than one block of size m
  IdealSpec s = parse_spec("modulus = 1\ndistance = (1,3)\n");
  CHECK_THROWS_AS(compute_linking(s), LocalityViolation);
}

TEST_CASE("enumeration examples") {
  auto t = weight_totals(enumerate(presets::type_i(), 3));
  CHECK(t[3] == 2);
  auto r = weight_totals(enumerate(presets::rogers_ramanujan(), 4));
  CHECK(r[4] == 2);
  auto c = enumerate(presets::type_ii(), 0);
  CHECK(c[0][0] == 1);
}

TEST_CASE("Rogers-Ramanujan counts equal parts congruent to 1 or 4 mod 5") {
  const int N = 40;
  auto rr = weight_totals(enumerate(presets::rogers_ramanujan(), N));
  std::vector<long long> prod(N + 1, 0);
  prod[0] = 1;
  for (int k = 1; k <= N; ++k) {
    if (k % 5 != 1 && k % 5 != 4) continue;
    for (int n = k; n <= N; ++n) prod[n] += prod[n - k];
  }
  CHECK(rr == prod);
}

TEST_CASE("spec files") {
  IdealSpec s = parse_spec(
      "# type one written out\nmodulus = 3\ndistance = (2,3)\njunction = (1,1,3,0)\n"
      "target = min2:min_part=2\n");
  CHECK(enumerate(s, 30) == enumerate(presets::type_i(), 30));
  CHECK(s.target("min2").min_part == 2);
  IdealSpec r = parse_spec("preset = type-iv\nmin_part = 2\nat_most_once = 2\n");
  CHECK(r.restriction == presets::type_iv().target("min2once2"));
  CHECK_THROWS_AS(parse_spec("distance = 3\n"), ParseError);
  CHECK_THROWS_AS(preset("type-v"), UnknownName);
}

TEST_CASE("deletion closure") {
  for (const auto& name : linked_presets()) {
    CAPTURE(name);
    const IdealSpec s = preset(name);
    long bad = 0;
    for_each_member(s, 25, [&](const Partition& p) {
      for (std::size_t i = 0; i < p.parts.size(); ++i) {
        Partition d = p;
        d.parts.erase(d.parts.begin() + static_cast<long>(i));
        if (!is_member(s, d)) ++bad;
      }
    });
    CHECK(bad == 0);
  }
}

TEST_CASE("modulus property") {
  for (const auto& name : linked_presets()) {
    CAPTURE(name);
    const IdealSpec s = preset(name);
    const int m = s.modulus;
    long bad = 0;
    for_each_member(s, 25, [&](const Partition& p) {
      if (!p.empty() && p.smallest() > m && !is_member(s, p.shifted(-m))) ++bad;
      if (p.weight() + m * p.length() <= 25 && !is_member(s, p.shifted(m))) ++bad;
    });
    CHECK(bad == 0);
  }
}

TEST_CASE("block decomposition into linked tails") {
  for (const auto& name : linked_presets()) {
    CAPTURE(name);
    const IdealSpec s = preset(name);
    const TailTable t = compute_linking(s);
    const int m = t.modulus;
    long bad = 0, seen = 0;
    for_each_member(s, 25, [&](const Partition& p) {
      ++seen;
      std::vector<int> blocks;
      Partition rebuilt;
      for (int b = 0; b * m < std::max(1, p.largest()); ++b) {
        Partition blk;
        for (int v : p.parts)
          if (v > b * m && v <= (b + 1) * m) blk.parts.push_back(v - b * m);
        const int idx = t.index_of(blk);
        if (idx < 0) {
          ++bad;
          return;
        }
        if (!blocks.empty()) {
          const auto& l = t.linking[blocks.back()];
          if (std::find(l.begin(), l.end(), idx) == l.end()) ++bad;
        }
        blocks.push_back(idx);
        rebuilt = rebuilt + blk.shifted(b * m);
      }
      if (rebuilt != p) ++bad;
    });
    CHECK(seen > 0);
    CHECK(bad == 0);
  }
}
