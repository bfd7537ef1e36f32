// Seeded random inputs for tests and benchmarks.

#pragma once

#include <cstdint>
#include <random>

#include "gridloc/grid.hpp"

namespace gridloc {

using Rng = std::mt19937_64;

// Each cell is 1 with probability `density`.
BinaryGrid random_binary_grid(int rows, int cols, Rng& rng, double density = 0.5);

// Cells uniform in [lo, hi).
RealGrid random_real_grid(int rows, int cols, Rng& rng, double lo = -10.0, double hi = 10.0);

// `count` points uniform in [0, x_max] x [0, y_max]. With `integral` set the
// coordinates are whole numbers, which makes ties and shared coordinates
// common.
PointSet random_point_set(int count, double x_max, double y_max, Rng& rng,
                          bool integral = false);

}  // namespace gridloc
