#include <doctest.h>

#include <numeric>

#include "steinhaus/catalog.hpp"
#include "steinhaus/criteria.hpp"

using namespace steinhaus;

TEST_CASE("catalog rows round-trip bit-exactly") {
  std::vector<CatalogRecord> samples;
  samples.push_back({{1, 1, 1}, "steinhaus", 4, {0}, {"period_n1", "period_2n"}, 4, 1});
  samples.push_back({{1, 1, 3}, "jackson", std::nullopt, {}, {"rule_114k3"}, 6, 3});
  samples.push_back({{2, 5}, "jackson", std::nullopt, {}, {}, 40, 17});
  samples.push_back({{9}, "cap", std::nullopt, {}, {}, 0, 0});
  for (const auto& r : samples) {
    std::string row = to_csv(r);
    CHECK(parse_csv(row) == r);
    CHECK(to_csv(parse_csv(row)) == row);
  }
  CHECK_THROWS_AS(parse_csv("too;few;fields"), std::invalid_argument);
}

TEST_CASE("classify_record matches the engine") {
  CatalogRecord r = classify_record(GapTuple::create({1, 3, 1}));
  CHECK(r.status == "steinhaus");
  CHECK(r.min_period == 8);
  CHECK(r.residues == std::vector<int>{0, 2});
  CHECK(r.states == count_window_states(GapTuple::create({1, 3, 1})));

  EngineLimits tiny;
  tiny.max_nodes = 1;
  CHECK(classify_record(GapTuple::create({2, 3, 4}), tiny).status == "cap");
}

TEST_CASE("enumerate_catalog") {
  CHECK_THROWS_AS(enumerate_catalog(9, 9), CapError);
  CHECK_THROWS_AS(enumerate_catalog(0, 3), std::invalid_argument);

  auto rows = enumerate_catalog(3, 4);

  SUBCASE("only canonical tuples, lexicographic order") {
    std::vector<std::vector<int>> gaps;
    for (const auto& r : rows) gaps.push_back(r.gaps);
    CHECK(std::is_sorted(gaps.begin(), gaps.end()));
    for (const auto& r : rows) {
      GapTuple t = GapTuple::create(r.gaps);
      CHECK(canonicalize(t) == t);
    }
  }

  SUBCASE("named rows") {
    auto find = [&](std::vector<int> g) {
      for (const auto& r : rows)
        if (r.gaps == g) return r;
      FAIL("row not found");
      return CatalogRecord{};
    };
    CHECK(find({1, 2, 2}).status == "jackson");
    CHECK(find({1, 1, 3}).status == "jackson");
    CHECK(find({1, 1, 1}).status == "steinhaus");
    CHECK(find({1, 1, 1}).min_period == 4);
  }

  SUBCASE("thread count never changes the bytes") {
    auto serial = enumerate_catalog(3, 4, {}, 1);
    auto parallel = enumerate_catalog(3, 4, {}, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i)
      CHECK(to_csv(serial[i]) == to_csv(parallel[i]));
  }
}

TEST_CASE("arity-2 catalog matches the three-point classification") {
  for (const auto& r : enumerate_catalog(2, 9)) {
    int n = r.gaps[0];
    int m = r.gaps[0] + r.gaps[1];
    if (std::gcd(n, m) != 1) continue;  // canonical filter keeps gcd(gaps)=1 only
    auto rule = classify_three_point_rational(n, m);
    CHECK((rule.verdict == Verdict::Exists) == (r.status == "steinhaus"));
    if (rule.verdict == Verdict::Exists) CHECK(r.min_period == 3);
  }
}
