#pragma once

#include "kspm/compiler.hpp"

#include <random>

namespace fx {

using namespace kspm;

// 1D instance from the differences h_1..h_n of the stable pre-grain profile
inline ApInstance1D from_diffs(int p, std::vector<int> h, Index k) {
  h.insert(h.begin(), 0);
  return {from_height_diffs(HeightDiff1D<int>(p, h)), k};
}

// the three worked 1D examples, p=3
inline ApInstance1D worked_negative() { return from_diffs(3, {2, 2, 0, 2, 2, 1, 2}, 9); }
inline ApInstance1D worked_no_reach() { return from_diffs(3, {2, 1, 2, 2, 1, 2, 2, 2, 2, 1, 2, 0, 1, 2}, 15); }
inline ApInstance1D worked_positive() { return from_diffs(3, {2, 1, 2, 2, 2, 2, 1}, 8); }

// 2D example: boxed cell (1,1) in a 4x4 grid, rows north-first
inline Grid example_2d() { return Grid::from_rows(3, {{0, 0, 0, 0}, {2, 2, 0, 0}, {8, 6, 2, 2}, {8, 4, 3, 2}}); }

// random stable monotone grid, filled from the north-east corner so every
// difference to the east and north stays in [0, p)
inline Grid random_stable_grid(std::mt19937_64& rng, int p, Index rows, Index cols) {
  Grid g(p, rows, cols);
  for (Index j = rows - 1; j >= 0; --j)
    for (Index i = cols - 1; i >= 0; --i) {
      int e = g.at(i + 1, j), n = g.at(i, j + 1);
      int lo = std::max(e, n), hi = std::min(e, n) + p - 1;
      g.ref(i, j) = lo + (hi > lo ? std::uniform_int_distribution<int>(0, hi - lo)(rng) : 0);
    }
  return g;
}

}  // namespace fx
