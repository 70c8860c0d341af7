#include "fixtures.hpp"
#include "kspm/oracle.hpp"

#include <doctest.h>

using namespace kspm;

TEST_CASE("stable configuration: one state, one stable configuration") {
  auto rep = explore_orbit(to_height_diffs(Config1D<int>(3, std::vector<int>{4, 2, 1})));
  CHECK(rep.states == 1);
  CHECK(rep.stable.size() == 1);
  CHECK_FALSE(rep.truncated);
  Grid g = Grid::from_rows(3, {{1, 0}, {2, 1}});
  auto r2 = explore_orbit(g);
  CHECK(r2.states == 1);
  CHECK(r2.stable.size() == 1);
}

TEST_CASE("first worked example has an orbit of two states") {
  auto inst = fx::worked_negative();
  auto rep = explore_orbit(add_grain(to_height_diffs(inst.config)), inst.k);
  CHECK(rep.states == 2);
  CHECK(rep.stable.size() == 1);
  CHECK(rep.verdict == Verdict::No);
}

TEST_CASE("hand instance h = [p, 0, ...] is a single orbit path") {
  auto rep = explore_orbit(HeightDiff1D<int>(3, std::vector<int>{0, 3, 0, 0, 0}));
  CHECK(rep.stable.size() == 1);
  CHECK(rep.states == 2);
}

TEST_CASE("positive worked example: single topple per site, verdict yes") {
  auto inst = fx::worked_positive();
  auto rep = explore_orbit(add_grain(to_height_diffs(inst.config)), inst.k);
  CHECK(rep.verdict == Verdict::Yes);
  CHECK(rep.stable.size() == 1);
  for (const auto& [site, n] : rep.max_topples) CHECK(n == 1);
}

TEST_CASE("state limit truncates with a flag") {
  auto inst = fx::worked_positive();
  auto rep = explore_orbit(add_grain(to_height_diffs(inst.config)), inst.k, 2);
  CHECK(rep.truncated);
}

TEST_CASE("confluence and single-topple suites pass on a small sample") {
  auto c = check_confluence_1d(40, 10, {2, 3}, 9);
  CHECK(c.pass());
  CHECK(c.cases.size() == 40);
  auto s = check_single_topple(40, 10, {2, 3}, 9);
  CHECK(s.pass());
}

TEST_CASE("random instances are valid AP inputs") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    int p = 2 + t % 3;
    auto inst = random_sm_instance(rng, 1 + t % 12, p);
    CHECK(validate_instance(inst).empty());
  }
}

TEST_CASE("stable profile enumeration") {
  std::size_t count = 0;
  for_each_stable_profile(2, 2, 4, [&](const Config1D<int>& c) {
    ++count;
    CHECK(is_stable_1d(c));
    CHECK(support_n(c) == 2);
  });
  // x_2 = 1, x_1 in {1, 2}
  CHECK(count == 2);
}

TEST_CASE("reports are seed-deterministic") {
  CHECK(format_report(check_confluence_1d(20, 8, {2, 3}, 4), "c") ==
        format_report(check_confluence_1d(20, 8, {2, 3}, 4), "c"));
}
