#include <doctest.h>

#include <set>

#include "steinhaus/engine.hpp"
#include "test_util.hpp"

using namespace steinhaus;

namespace {
GapTuple gt(std::vector<int> g) { return GapTuple::create(std::move(g)); }
}  // namespace

TEST_CASE("window graph of (1,1) is the 3-cycle generating 3Z") {
  WindowGraph g = build_window_graph(gt({1, 1}));
  CHECK(g.states() == std::vector<std::uint64_t>{1, 2, 4});
  CHECK(g.successor(1) == 4);
  CHECK(g.successor(4) == 2);
  CHECK(g.successor(2) == 1);
  CHECK(g.predecessor(1) == 2);
  CHECK(g.has_cycle());
  CHECK(g.girth() == 3);
}

TEST_CASE("window graph shapes") {
  CHECK_FALSE(build_window_graph(gt({1, 1, 3})).has_cycle());
  WindowGraph g = build_window_graph(gt({1, 1, 1}));
  CHECK(g.girth() == 4);
  // The 4-cycle through ...1000 shifted: S = 4Z.
  std::uint64_t w = 1;  // window 1000 (bit 0 set)
  std::set<std::uint64_t> orbit;
  for (int i = 0; i < 4; ++i) {
    orbit.insert(w);
    auto next = g.successor(w);
    REQUIRE(next.has_value());
    w = *next;
  }
  CHECK(w == 1);
  CHECK(orbit.size() == 4);
}

TEST_CASE("state enumeration matches the closed-form count, d <= 9") {
  for (const auto& t : testutil::tuples_up_to_diameter(9)) {
    WindowGraph g = build_window_graph(t);
    CHECK(g.states().size() == count_window_states(t));
    for (std::uint64_t w : g.states()) CHECK(g.is_valid(w));
    // Successor and predecessor are inverse partial bijections.
    for (std::uint64_t w : g.states()) {
      if (auto next = g.successor(w)) CHECK(g.predecessor(*next) == w);
      if (auto prev = g.predecessor(w)) CHECK(g.successor(*prev) == w);
    }
  }
}

TEST_CASE("build_window_graph honors the state cap") {
  EngineLimits limits;
  limits.state_cap = 4;
  CHECK_THROWS_AS(build_window_graph(gt({1, 2, 3}), limits), CapError);
}

TEST_CASE("decide examples") {
  CHECK(decide(gt({1, 1, 3})).status == Status::Jackson);
  auto c111 = decide(gt({1, 1, 1}));
  CHECK(c111.status == Status::Steinhaus);
  CHECK(c111.minimal_period == 4);
  CHECK(c111.witness->residues == std::vector<int>{0});
  CHECK(decide(gt({1, 2, 2})).status == Status::Jackson);
  auto c22 = decide(gt({2, 2}));
  CHECK(c22.status == Status::Steinhaus);
  CHECK(c22.witness == PeriodicSet::create(3, {0}));

  // Two-point sets are never Jackson; the canonical one has period 2.
  auto c1 = decide(gt({1}));
  CHECK(c1.status == Status::Steinhaus);
  CHECK(c1.witness == PeriodicSet::create(2, {0}));
  for (int a = 2; a <= 10; ++a) CHECK(decide(gt({a})).status == Status::Steinhaus);
}

TEST_CASE("provenance lists the fired criteria") {
  auto c = decide(gt({1, 1, 3}));
  CHECK(c.provenance == std::vector<std::string>{"rule_114k3"});
  auto s = decide(gt({1, 1}));
  CHECK(s.provenance == std::vector<std::string>{"three_point_rational", "period_n1",
                                                 "period_2n"});
}

TEST_CASE("minimal_period examples") {
  CHECK(minimal_period(gt({1, 1, 1})) == 4);
  CHECK(minimal_period(gt({1, 3, 1})) == 8);
  CHECK_FALSE(minimal_period(gt({1, 1, 3})).has_value());
  // (8) needs period 2d = 16, twice the naive oracle cap 4(n+1) = 8.
  CHECK(minimal_period(gt({8})) == 16);
}

TEST_CASE("construct") {
  CHECK(construct(gt({1, 1}), 3) == PeriodicSet::create(3, {0}));
  auto w113_8 = construct(gt({1, 1, 3}), 8);
  CHECK_FALSE(w113_8.has_value());

  auto w111_8 = construct(gt({1, 1, 1}), 8);
  REQUIRE(w111_8.has_value());
  CHECK(w111_8->period == 8);
  CHECK(w111_8->residues.size() == 2);
  CHECK(verify_periodic(gt({1, 1, 1}), *w111_8));

  // Periods that are not positive multiples of n+1 yield nothing.
  CHECK_FALSE(construct(gt({1, 1, 1}), 6).has_value());
  CHECK_FALSE(construct(gt({1, 1, 1}), 0).has_value());
  CHECK_FALSE(construct(gt({1, 1, 1}), -4).has_value());

  // Unspecified period falls back to the minimal one.
  CHECK(construct(gt({1, 3, 1})) == PeriodicSet::create(8, {0, 2}));
  CHECK_FALSE(construct(gt({1, 2, 2})).has_value());
}

TEST_CASE("oracle_enumerate examples") {
  CHECK(oracle_enumerate(gt({1, 1, 1}), 8) == PeriodicSet::create(4, {0}));
  CHECK_FALSE(oracle_enumerate(gt({1, 1, 3}), 16).has_value());
  CHECK(oracle_enumerate(gt({1, 3, 1}), 8) == PeriodicSet::create(8, {0, 2}));
}

TEST_CASE("max_witness_interval") {
  CHECK_THROWS_AS(max_witness_interval(gt({1, 1, 1})), std::invalid_argument);
  // Regression constants from the longest-path dynamic program.
  CHECK(max_witness_interval(gt({1, 1, 3})) == 1);
  CHECK(max_witness_interval(gt({1, 2, 2})) == 2);
}

TEST_CASE("decide agrees with materialized girth, d <= 8") {
  for (const auto& t : testutil::tuples_up_to_diameter(8)) {
    WindowGraph g = build_window_graph(t);
    auto girth = g.girth();
    Classification c = decide(t);
    CHECK((c.status == Status::Steinhaus) == girth.has_value());
    if (girth) CHECK(c.minimal_period == girth);
  }
}

TEST_CASE("norms of every engine witness, d <= 9") {
  for (const auto& t : testutil::tuples_up_to_diameter(9)) {
    Classification c = decide(t);
    if (c.status == Status::Jackson) {
      CHECK_FALSE(c.witness.has_value());
      CHECK_FALSE(c.minimal_period.has_value());
      continue;
    }
    REQUIRE(c.witness.has_value());
    REQUIRE(c.minimal_period.has_value());
    CHECK(verify_periodic(t, *c.witness));
    CHECK(c.witness->residues.front() == 0);
    CHECK(c.witness->period == *c.minimal_period);
    CHECK(*c.minimal_period ==
          static_cast<long long>(c.witness->residues.size()) * t.point_count());
    CHECK(*c.minimal_period % t.point_count() == 0);
    CHECK(within_period_bound(*c.minimal_period, t.diameter()));
    // No closed walk strictly one period-slot shorter.
    if (*c.minimal_period > t.point_count())
      CHECK_FALSE(construct(t, *c.minimal_period - t.point_count()).has_value());
  }
}

TEST_CASE("decide is invariant under canonicalization, d <= 8") {
  for (const auto& t : testutil::tuples_up_to_diameter(8)) {
    Status raw = decide(t).status;
    CHECK(raw == decide(canonicalize(t)).status);
    std::vector<int> rev(t.gaps().rbegin(), t.gaps().rend());
    CHECK(raw == decide(gt(rev)).status);
  }
}

TEST_CASE("period bound helper") {
  CHECK(within_period_bound(16, 8));
  CHECK(within_period_bound(8LL * (1LL << 8), 8));
  CHECK_FALSE(within_period_bound(8LL * (1LL << 8) + 1, 8));
  CHECK(within_period_bound(1LL << 62, 62));  // no overflow at the cap
}

TEST_CASE("node budget raises a structured error") {
  EngineLimits limits;
  limits.max_nodes = 1;
  CHECK_THROWS_AS(decide(gt({2, 3, 4}), limits), CapError);
}
