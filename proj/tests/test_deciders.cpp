#include "fixtures.hpp"
#include "kspm/oracle.hpp"

#include <doctest.h>

using namespace kspm;

TEST_CASE("worked 1D examples decide false, false, true") {
  CHECK_FALSE(ap_decide_1d_sim(fx::worked_negative()).answer);
  CHECK_FALSE(ap_decide_1d_sim(fx::worked_no_reach()).answer);
  CHECK(ap_decide_1d_sim(fx::worked_positive()).answer);
  CHECK_FALSE(ap_decide_1d_fast(fx::worked_negative()));
  CHECK_FALSE(ap_decide_1d_fast(fx::worked_no_reach()));
  CHECK(ap_decide_1d_fast(fx::worked_positive()));
}

TEST_CASE("worked example supports") {
  CHECK(support_n(fx::worked_negative().config) == 7);
  CHECK(support_n(fx::worked_no_reach().config) == 14);
  CHECK(support_n(fx::worked_positive().config) == 7);
}

TEST_CASE("1D validation") {
  auto inst = fx::worked_positive();
  inst.k = 7;
  CHECK_THROWS_AS(ap_decide_1d_sim(inst), InvalidInstance);
  inst.k = 10;
  CHECK_THROWS_AS(ap_decide_1d_fast(inst), InvalidInstance);
  ApInstance1D steep{Config1D<int>(2, std::vector<int>{3, 1}), 3};
  CHECK_FALSE(validate_instance(steep).empty());
  ApInstance1D unsorted{Config1D<int>(3, std::vector<int>{1, 2}), 3};
  CHECK_FALSE(validate_instance(unsorted).empty());
}

TEST_CASE("hand instance: a one-grain chain of critical differences reaches k") {
  // p=2, all differences 1: the grain walks to the end
  ApInstance1D inst{Config1D<int>(2, std::vector<int>{4, 3, 2, 1}), 5};
  auto d = ap_decide_1d_sim(inst);
  CHECK(d.answer);
  CHECK(d.trace.size() == 4);
  CHECK(ap_decide_1d_fast(inst));
}

TEST_CASE("fast and simulated deciders agree on a small exhaustive family") {
  auto r = check_fast_decider(6, {2, 3, 4}, 100, 3);
  CHECK(r.exhaustive > 1000);
  CHECK(r.random == 100);
  CHECK(r.pass());
}

TEST_CASE("2D validation") {
  Grid g = Grid::from_rows(2, {{1, 0}, {1, 1}});
  CHECK_FALSE(validate_instance(ApInstance2D{g, 0, 0}).empty());  // origin is occupied and too close
  CHECK(validate_instance(ApInstance2D{g, 2, 0}).empty());
  CHECK_FALSE(validate_instance(ApInstance2D{g, 50, 0}).empty());  // beyond n + Q
  Grid bad = Grid::from_rows(2, {{2, 0}, {1, 0}});
  CHECK_THROWS_AS(ap_decide_2d_sweep(ApInstance2D{bad, 2, 0}), InvalidInstance);
}

TEST_CASE("2D deciders on a wire-like strip") {
  // p=2 row with unit steps plus a start grain: the grain walks east
  Grid g = Grid::from_rows(2, {{4, 3, 2, 1, 0}});
  g.ref(0, 0) += 1;
  ApInstance2D inst{g, 4, 0};
  CHECK(ap_decide_2d_sweep(inst).answer);
  auto s = ap_decide_2d_search(inst);
  CHECK(s.verdict == Verdict::Yes);
  CHECK(replay(g, s.witness).at(4, 0) == 1);
  Grid flat = Grid::from_rows(2, {{4, 3, 3, 2, 1, 0}});
  flat.ref(0, 0) += 1;
  ApInstance2D blocked{flat, 5, 0};
  CHECK_FALSE(ap_decide_2d_sweep(blocked).answer);
  CHECK(ap_decide_2d_search(blocked).verdict == Verdict::No);
}

TEST_CASE("search reports unknown when the state bound is hit") {
  Grid g = Grid::from_rows(2, {{4, 3, 2, 1, 0}});
  g.ref(0, 0) += 1;
  CHECK(ap_decide_2d_search(ApInstance2D{g, 4, 0}, 2).verdict == Verdict::Unknown);
}

TEST_CASE("property: search verdict matches the orbit oracle") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int t = 0; t < 80; ++t) {
    int p = 2 + t % 2;
    Grid g = fx::random_stable_grid(rng, p, 3, 3);
    g.ensure(6, 6);
    g.ref(0, 0) += 1;
    Index k = 3 + t % 2, l = t % 3;
    ApInstance2D inst{g, k, l};
    if (!validate_instance(inst).empty()) continue;
    ++checked;
    auto orbit = explore_orbit(g, k, l);
    REQUIRE_FALSE(orbit.truncated);
    CHECK(ap_decide_2d_search(inst).verdict == orbit.verdict);
  }
  CHECK(checked > 10);
}
