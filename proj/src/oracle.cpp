#include "gridloc/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <queue>
#include <tuple>

namespace gridloc::oracle {

namespace {

int max_side(const BinaryGrid& g) { return std::max(g.rows(), g.cols()); }

// Largest side s in 1..limit for which pred(s) holds, 0 if none. Every side
// is tried; monotonicity in s is not assumed.
template <typename Pred>
int largest(int limit, Pred&& pred) {
  int best = 0;
  for (int s = 1; s <= limit; ++s)
    if (pred(s)) best = s;
  return best;
}

}  // namespace

bool is_pattern_square(const BinaryGrid& g, Cell corner, int side, SquarePattern p) {
  if (side < 1 || !g.contains(corner) ||
      !g.contains(corner.row + side - 1, corner.col + side - 1)) {
    return false;
  }
  const auto origin = g[corner];
  for (int a = 0; a < side; ++a) {
    for (int b = 0; b < side; ++b) {
      const auto v = g(corner.row + a, corner.col + b);
      switch (p) {
        case SquarePattern::monotone:
          if (v != origin) return false;
          break;
        case SquarePattern::chessboard:
          // Alternating along rows and columns means v depends on a+b parity.
          if (v != ((a + b) % 2 == 0 ? origin : 1 - origin)) return false;
          break;
        case SquarePattern::identity:
          if (v != (a == b ? 1 : 0)) return false;
          break;
      }
    }
  }
  return true;
}

bool is_triangle(const BinaryGrid& g, Cell apex, int side, Direction dir) {
  const int dr = (dir == Direction::nw || dir == Direction::ne) ? -1 : 1;
  const int dc = (dir == Direction::nw || dir == Direction::sw) ? -1 : 1;
  for (int a = 0; a < side; ++a) {
    for (int b = 0; a + b < side; ++b) {
      const int r = apex.row + a * dr;
      const int c = apex.col + b * dc;
      if (!g.contains(r, c) || g(r, c) != 1) return false;
    }
  }
  return side >= 1;
}

bool is_diamond(const BinaryGrid& g, Cell center, int side) {
  if (side < 1) return false;
  for (int p = center.row - side + 1; p <= center.row + side - 1; ++p) {
    for (int q = center.col - side + 1; q <= center.col + side - 1; ++q) {
      if (std::abs(p - center.row) + std::abs(q - center.col) >= side) continue;
      if (!g.contains(p, q) || g(p, q) != 1) return false;
    }
  }
  return true;
}

ValueTable square_table(const BinaryGrid& g, SquarePattern p) {
  ValueTable t(g.rows(), g.cols());
  for (int i = 1; i <= g.rows(); ++i)
    for (int j = 1; j <= g.cols(); ++j)
      t(i, j) = largest(max_side(g), [&](int s) { return is_pattern_square(g, {i, j}, s, p); });
  return t;
}

ValueTable triangle_table(const BinaryGrid& g, Direction dir) {
  ValueTable t(g.rows(), g.cols());
  for (int i = 1; i <= g.rows(); ++i)
    for (int j = 1; j <= g.cols(); ++j)
      t(i, j) = largest(g.rows() + g.cols(), [&](int s) { return is_triangle(g, {i, j}, s, dir); });
  return t;
}

ValueTable diamond_center_table(const BinaryGrid& g) {
  ValueTable t(g.rows(), g.cols());
  for (int i = 1; i <= g.rows(); ++i)
    for (int j = 1; j <= g.cols(); ++j)
      t(i, j) = largest(max_side(g), [&](int s) { return is_diamond(g, {i, j}, s); });
  return t;
}

ValueTable diamond_top_table(const BinaryGrid& g) {
  ValueTable t(g.rows(), g.cols());
  for (int i = 1; i <= g.rows(); ++i)
    for (int j = 1; j <= g.cols(); ++j)
      t(i, j) = largest(max_side(g), [&](int s) { return is_diamond(g, {i + s - 1, j}, s); });
  return t;
}

std::optional<SquareResult> best_square(const BinaryGrid& g, SquarePattern p) {
  std::optional<SquareResult> best;
  for (int i = 1; i <= g.rows(); ++i)
    for (int j = 1; j <= g.cols(); ++j)
      for (int s = 1; s <= max_side(g); ++s)
        if (is_pattern_square(g, {i, j}, s, p) && (!best || s > best->side))
          best = SquareResult{{i, j}, s, p};
  return best;
}

DiamondResult best_diamond(const BinaryGrid& g) {
  DiamondResult best;
  for (int i = 1; i <= g.rows(); ++i) {
    for (int j = 1; j <= g.cols(); ++j) {
      for (int s = 1; s <= max_side(g); ++s) {
        if (s > best.side && is_diamond(g, {i + s - 1, j}, s))
          best = {true, {i, j}, {i + s - 1, j}, s};
      }
    }
  }
  return best;
}

EmptyRectResult empty_rectangle(const PointSet& ps) {
  if (static_cast<int>(ps.points.size()) > kMaxEmptyRectPoints) {
    throw ContractError("empty-rectangle oracle accepts at most " +
                        std::to_string(kMaxEmptyRectPoints) + " points");
  }
  std::vector<double> xs{0.0, ps.x_max};
  std::vector<double> ys{0.0, ps.y_max};
  for (const Point& p : ps.points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  EmptyRectResult best{0.0, 0.0, ps.x_max, ps.y_max, 0.0, true};
  const auto key = [](const EmptyRectResult& r) { return std::tie(r.y2, r.x1, r.x2); };
  for (std::size_t a = 0; a < xs.size(); ++a) {
    for (std::size_t b = a + 1; b < xs.size(); ++b) {
      for (std::size_t c = 0; c < ys.size(); ++c) {
        for (std::size_t e = c + 1; e < ys.size(); ++e) {
          const EmptyRectResult r{xs[a], ys[c], xs[b], ys[e], (xs[b] - xs[a]) * (ys[e] - ys[c]),
                                  false};
          const bool empty = std::none_of(ps.points.begin(), ps.points.end(), [&](const Point& p) {
            return r.x1 < p.x && p.x < r.x2 && r.y1 < p.y && p.y < r.y2;
          });
          if (!empty) continue;
          if (r.area > best.area || (r.area == best.area && !best.degenerate && key(r) < key(best)))
            best = r;
        }
      }
    }
  }
  return best;
}

PerimeterResult perimeter(const RealGrid& b) {
  const int m = b.rows();
  const int n = b.cols();
  if (m < 2 || n < 2) throw ContractError("no valid rectangle: need at least 2 rows and 2 columns");
  if (m > kMaxPerimeterSide || n > kMaxPerimeterSide) {
    throw ContractError("perimeter oracle accepts at most " +
                        std::to_string(kMaxPerimeterSide) + " rows and columns");
  }
  PerimeterResult best{0, 0, 0, 0, -std::numeric_limits<double>::infinity()};
  for (int l1 = 1; l1 <= m; ++l1)
    for (int l2 = l1 + 1; l2 <= m; ++l2)
      for (int c1 = 1; c1 <= n; ++c1)
        for (int c2 = c1 + 1; c2 <= n; ++c2) {
          double sum = 0.0;
          for (int i = l1; i <= l2; ++i)
            for (int j = c1; j <= c2; ++j)
              if (i == l1 || i == l2 || j == c1 || j == c2) sum += b(i, j);
          if (sum > best.value) best = {l1, l2, c1, c2, sum};
        }
  return best;
}

ValueTable depth(const BinaryGrid& g, ConnectivityConvention conv) {
  const int m = g.rows();
  const int n = g.cols();
  constexpr int kInf = std::numeric_limits<int>::max();
  ValueTable dist(m, n, kInf);
  using Entry = std::tuple<int, int, int>;  // distance, row, col
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;

  // Virtual outside node at distance 1 (white): free step onto white border
  // cells, one colour change onto black border cells.
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != 1 && j != 1 && i != m && j != n) continue;
      dist(i, j) = g(i, j) == 0 ? 1 : 2;
      heap.emplace(dist(i, j), i, j);
    }
  }
  while (!heap.empty()) {
    auto [du, r, c] = heap.top();
    heap.pop();
    if (du != dist(r, c)) continue;
    const MovementSet moves = conv.moves_for(g(r, c));
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) {
        if (dr == 0 && dc == 0) continue;
        if (moves == MovementSet::simple && dr != 0 && dc != 0) continue;
        const int r2 = r + dr;
        const int c2 = c + dc;
        if (!g.contains(r2, c2)) continue;
        const int w = g(r2, c2) == g(r, c) ? 0 : 1;
        if (du + w < dist(r2, c2)) {
          dist(r2, c2) = du + w;
          heap.emplace(du + w, r2, c2);
        }
      }
    }
  }
  return dist;
}

}  // namespace gridloc::oracle
