#include "fixtures.hpp"

#include <doctest.h>

using namespace kspm;

TEST_CASE("1D heights and differences convert both ways") {
  Config1D<int> c(3, std::vector<int>{9, 7, 5, 5, 3, 1, 0});
  auto d = to_height_diffs(c);
  CHECK(d[1] == 2);
  CHECK(d[3] == 0);
  CHECK(d[6] == 1);
  CHECK(from_height_diffs(d) == c);
  CHECK(is_monotone_1d(c));
  CHECK(is_stable_1d(c));
  CHECK_FALSE(is_stable_1d(add_grain(d)));
}

TEST_CASE("1D boundary conventions") {
  Config1D<int> c(2, std::vector<int>{4, 3});
  CHECK(c[0] == 4);
  CHECK(c[1] == 4);
  CHECK(c[3] == 0);
  CHECK_THROWS_AS(Config1D<int>(1, std::vector<int>{1}), std::invalid_argument);
  CHECK_THROWS_AS(from_height_diffs(HeightDiff1D<int>(2, std::vector<int>{0, -1})), NegativeHeight);
}

TEST_CASE("2D grid orientation: i east, j north, rows printed north-first") {
  Grid g = fx::example_2d();
  CHECK(g.rows() == 4);
  CHECK(g.cols() == 4);
  CHECK(g.at(0, 0) == 8);
  CHECK(g.at(1, 1) == 6);
  CHECK(g.at(0, 2) == 2);
  CHECK(g.at(9, 9) == 0);
  CHECK(g.rows_north_first().front() == std::vector<int>{0, 0, 0, 0});
  CHECK(h_horizontal(g, 1, 1) == 4);
  CHECK(h_vertical(g, 1, 1) == 4);
}

TEST_CASE("2D predicates") {
  Grid ok = Grid::from_rows(3, {{1, 0}, {2, 1}});
  CHECK(is_monotone_2d(ok));
  CHECK(is_stable_2d(ok));
  Grid bad = Grid::from_rows(3, {{2, 0}, {1, 0}});
  CHECK_FALSE(is_monotone_2d(bad));
  Grid steep = Grid::from_rows(2, {{0, 0}, {2, 0}});
  CHECK(is_monotone_2d(steep));
  CHECK_FALSE(is_stable_2d(steep));
}

TEST_CASE("norm sum Q adds every horizontal and vertical difference") {
  Grid g = Grid::from_rows(2, {{1, 0}, {2, 1}});
  // rows: south (2,1), north (1,0); h: 1+1+1+0, v: 1+1+1+0
  CHECK(sum_height_diffs(g) == 6);
}

TEST_CASE("grids grow on demand and compare by content") {
  Grid a = Grid::from_rows(2, {{1}});
  Grid b = a;
  b.ensure(3, 2);
  CHECK(b.cols() >= 3);
  CHECK(b.rows() >= 2);
  CHECK(a.same_content(b));
  CHECK(b.at(2, 1) == 0);
}

TEST_CASE("random stable grids are stable and monotone") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    int p = 2 + t % 3;
    Grid g = fx::random_stable_grid(rng, p, 1 + t % 6, 1 + (t * 7) % 6);
    CHECK(is_monotone_2d(g));
    CHECK(is_stable_2d(g));
  }
}
