#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cstdio>
#include <fstream>

#include "lpi/errors.hpp"
#include "lpi/qseries.hpp"

using namespace lpi;

TEST_CASE("all twelve identities verify") {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& name : identity_names()) {
    CAPTURE(name);
    const VerifyReport rep = verify_identity(name);
    CHECK(rep.error.empty());
    for (const auto& s : rep.stages) {
      CAPTURE(s.stage);
      CAPTURE(s.detail);
      CHECK(s.ok);
    }
    REQUIRE(rep.certificate);
    const Certificate& c = *rep.certificate;
    const int want = name.rfind("type-iii", 0) == 0 || name.rfind("type-iv", 0) == 0 ? 15 : 6;
    CHECK(c.order == want);
    CHECK(static_cast<int>(c.zero_initials.size()) >= c.order);
    CHECK(c.nonvanishing.complete());
    CHECK(c.prefix >= 20);
    CHECK(c.complete());
    CHECK(rep.ok());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  MESSAGE("verification took " << secs << " s");
  CHECK(secs < 300.0);
}

TEST_CASE("a corrupted multi-sum is refuted at an initial value") {
  AndrewsSum s = load_sum("type-i-1");
  s.Q[0][1] = s.Q[1][0] = Rat(1, 2);
  const std::string path = "corrupt-type-i-1.json";
  {
    std::ofstream out(path);
    out << sum_to_json(s);
  }
  VerifyOptions opt;
  opt.sum_file = path;
  const VerifyReport rep = verify_identity("type-i-1", opt);
  CHECK_FALSE(rep.ok());
  CHECK(rep.error_kind == "InitialMismatch");
  std::remove(path.c_str());
}

TEST_CASE("option checks") {
  VerifyOptions opt;
  opt.prefix = 0;
  CHECK_THROWS_AS(verify_identity("type-i-1", opt), InvalidArgument);
  CHECK_THROWS_AS(verify_identity("type-v-1"), UnknownName);
}
