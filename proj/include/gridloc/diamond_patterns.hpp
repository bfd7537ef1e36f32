// Largest all-ones diamonds (squares rotated by 45 degrees).
//
// A diamond of side L centred at (i, j) is the set of cells (p, q) with
// |p - i| + |q - j| < L. Two routes are provided: the minimum of four
// right-triangle tables, and a single table keyed by the diamond's top cell.

#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "gridloc/grid.hpp"
#include "gridloc/square_patterns.hpp"

namespace gridloc {

// Orientation of a triangle's legs from its right-angle cell. North is the
// direction of decreasing row index, west of decreasing column index.
enum class Direction { nw, ne, sw, se };

std::string_view to_string(Direction d);
std::optional<Direction> parse_direction(std::string_view name);

struct DiamondResult {
  bool found = false;
  Cell top_cell;  // uppermost cell
  Cell center;
  int side = 0;

  friend bool operator==(const DiamondResult&, const DiamondResult&) = default;
};

// Inputs of the top-cell rule at (i, j). Table reads outside the grid are 0.
struct DiamondInputs {
  std::uint8_t here = 0;   // A(i, j)
  MaybeBit below_left;     // A(i+1, j-1)
  MaybeBit below;          // A(i+1, j)
  MaybeBit below_right;    // A(i+1, j+1)
  MaybeBit two_below;      // A(i+2, j)
  int d_below_left = 0;    // D(i+1, j-1)
  int d_below = 0;         // D(i+1, j)
  int d_below_right = 0;   // D(i+1, j+1)
  int d_two_below = 0;     // D(i+2, j)
};

struct DiamondRule {
  std::function<int(const DiamondInputs&)> f_d;
};

DiamondRule diamond_top_rule();

// Largest isosceles right triangle of 1s with its right angle at (i, j) and
// its legs running in direction `dir`: all cells (i + a*dr, j + b*dc) with
// a, b >= 0 and a + b <= L - 1.
ValueTable compute_triangle_table(const BinaryGrid& g, Direction dir);

// Side of the largest all-ones diamond centred at each cell.
ValueTable compute_diamond_center_table(const BinaryGrid& g);

// Side of the largest all-ones diamond whose uppermost cell is (i, j); the
// diamond's centre is then (i + side - 1, j).
ValueTable compute_diamond_top_table(const BinaryGrid& g);

// Fills the table bottom-up. Each entry depends only on rows i+1 and i+2, so
// the column order within a row is irrelevant.
ValueTable run_diamond_engine(const BinaryGrid& g, const DiamondRule& rule);

DiamondResult best_diamond(const BinaryGrid& g);
DiamondResult diamond_from_top_table(const ValueTable& top);

}  // namespace gridloc
