#include "gridloc/generate.hpp"

#include <cmath>

namespace gridloc {

BinaryGrid random_binary_grid(int rows, int cols, Rng& rng, double density) {
  BinaryGrid g(rows, cols);
  std::bernoulli_distribution bit(density);
  for (auto& v : g.data()) v = bit(rng) ? 1 : 0;
  return g;
}

RealGrid random_real_grid(int rows, int cols, Rng& rng, double lo, double hi) {
  RealGrid g(rows, cols);
  std::uniform_real_distribution<double> value(lo, hi);
  for (auto& v : g.data()) v = value(rng);
  return g;
}

PointSet random_point_set(int count, double x_max, double y_max, Rng& rng, bool integral) {
  PointSet ps;
  ps.x_max = x_max;
  ps.y_max = y_max;
  ps.points.reserve(count);
  std::uniform_real_distribution<double> ux(0.0, x_max);
  std::uniform_real_distribution<double> uy(0.0, y_max);
  for (int k = 0; k < count; ++k) {
    Point p{ux(rng), uy(rng)};
    if (integral) p = {std::round(p.x), std::round(p.y)};
    ps.points.push_back(p);
  }
  return ps;
}

}  // namespace gridloc
