#include "gridloc/diamond_patterns.hpp"

#include <algorithm>

#include "faults.hpp"

namespace gridloc {

namespace {

MaybeBit maybe(const BinaryGrid& g, int i, int j) {
  return g.contains(i, j) ? MaybeBit(g(i, j)) : std::nullopt;
}

struct Legs {
  int dr;
  int dc;
};

Legs legs(Direction d) {
  switch (d) {
    case Direction::nw: return {-1, -1};
    case Direction::ne: return {-1, +1};
    case Direction::sw: return {+1, -1};
    case Direction::se: return {+1, +1};
  }
  return {+1, +1};
}

}  // namespace

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::nw: return "nw";
    case Direction::ne: return "ne";
    case Direction::sw: return "sw";
    case Direction::se: return "se";
  }
  return "?";
}

std::optional<Direction> parse_direction(std::string_view name) {
  for (auto d : {Direction::nw, Direction::ne, Direction::sw, Direction::se})
    if (to_string(d) == name) return d;
  return std::nullopt;
}

ValueTable compute_triangle_table(const BinaryGrid& g, Direction dir) {
  const int m = g.rows();
  const int n = g.cols();
  const auto [dr, dc] = legs(dir);
  ValueTable t(m, n);
  // Visit cells so that (i+dr, j) and (i, j+dc) are already filled.
  const int i0 = dr > 0 ? m : 1, i1 = dr > 0 ? 0 : m + 1, si = dr > 0 ? -1 : 1;
  const int j0 = dc > 0 ? n : 1, j1 = dc > 0 ? 0 : n + 1, sj = dc > 0 ? -1 : 1;
  for (int i = i0; i != i1; i += si) {
    for (int j = j0; j != j1; j += sj) {
      if (g(i, j) == 0) continue;
      int sub = std::min(t.get_or_zero(i + dr, j), t.get_or_zero(i, j + dc));
      if constexpr (detail::kInjectFaults) {
        // Mutant: the three-term recurrence that also demands the diagonal.
        sub = std::min(sub, t.get_or_zero(i + dr, j + dc));
      }
      t(i, j) = 1 + sub;
    }
  }
  return t;
}

ValueTable compute_diamond_center_table(const BinaryGrid& g) {
  ValueTable c = compute_triangle_table(g, Direction::se);
  for (auto dir : {Direction::sw, Direction::ne, Direction::nw}) {
    const ValueTable t = compute_triangle_table(g, dir);
    for (std::size_t k = 0; k < c.size(); ++k) c.data()[k] = std::min(c.data()[k], t.data()[k]);
  }
  return c;
}

ValueTable compute_diamond_top_table(const BinaryGrid& g) {
  const int m = g.rows();
  const int n = g.cols();
  ValueTable d(m, n);
  for (int i = m; i >= 1; --i) {
    for (int j = 1; j <= n; ++j) {
      if (g(i, j) == 0) continue;
      int sub = std::min({d.get_or_zero(i + 1, j - 1), d.get_or_zero(i + 1, j),
                          d.get_or_zero(i + 1, j + 1)});
      // The cell two rows down closes the bottom tip of the diamond.
      if constexpr (!detail::kInjectFaults) sub = std::min(sub, d.get_or_zero(i + 2, j));
      d(i, j) = 1 + sub;
    }
  }
  return d;
}

DiamondRule diamond_top_rule() {
  return {[](const DiamondInputs& in) {
    if (in.here == 0) return 0;
    return 1 + std::min({in.d_below_left, in.d_below, in.d_below_right, in.d_two_below});
  }};
}

ValueTable run_diamond_engine(const BinaryGrid& g, const DiamondRule& rule) {
  const int m = g.rows();
  const int n = g.cols();
  ValueTable d(m, n);
  for (int i = m; i >= 1; --i) {
    for (int j = 1; j <= n; ++j) {
      DiamondInputs in;
      in.here = g(i, j);
      in.below_left = maybe(g, i + 1, j - 1);
      in.below = maybe(g, i + 1, j);
      in.below_right = maybe(g, i + 1, j + 1);
      in.two_below = maybe(g, i + 2, j);
      in.d_below_left = d.get_or_zero(i + 1, j - 1);
      in.d_below = d.get_or_zero(i + 1, j);
      in.d_below_right = d.get_or_zero(i + 1, j + 1);
      in.d_two_below = d.get_or_zero(i + 2, j);
      d(i, j) = rule.f_d(in);
    }
  }
  return d;
}

DiamondResult diamond_from_top_table(const ValueTable& top) {
  const TableMax best = table_argmax(top);
  if (best.value <= 0) return {};
  return {true, best.cell, {best.cell.row + best.value - 1, best.cell.col}, best.value};
}

DiamondResult best_diamond(const BinaryGrid& g) {
  return diamond_from_top_table(compute_diamond_top_table(g));
}

}  // namespace gridloc
