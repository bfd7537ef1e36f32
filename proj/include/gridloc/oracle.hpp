// Brute-force reference answers built straight from the geometric
// definitions. Nothing here reuses the recurrences of the fast modules; the
// oracles are slow on purpose and exist to cross-check them.

#pragma once

#include <optional>

#include "gridloc/depth.hpp"
#include "gridloc/diamond_patterns.hpp"
#include "gridloc/empty_rect.hpp"
#include "gridloc/grid.hpp"
#include "gridloc/perimeter_rect.hpp"
#include "gridloc/square_patterns.hpp"

namespace gridloc::oracle {

// Largest point count accepted by empty_rectangle (O(n^5)).
inline constexpr int kMaxEmptyRectPoints = 10;
// Largest side accepted by perimeter.
inline constexpr int kMaxPerimeterSide = 12;

// Checks the square at `corner` with the given side cell by cell. False if
// the square leaves the grid.
bool is_pattern_square(const BinaryGrid& g, Cell corner, int side, SquarePattern p);
bool is_triangle(const BinaryGrid& g, Cell apex, int side, Direction dir);
bool is_diamond(const BinaryGrid& g, Cell center, int side);

// Per-cell largest side, trying every side length.
ValueTable square_table(const BinaryGrid& g, SquarePattern p);
ValueTable triangle_table(const BinaryGrid& g, Direction dir);
ValueTable diamond_center_table(const BinaryGrid& g);
ValueTable diamond_top_table(const BinaryGrid& g);

std::optional<SquareResult> best_square(const BinaryGrid& g, SquarePattern p);
DiamondResult best_diamond(const BinaryGrid& g);

// Enumerates every rectangle whose sides lie on point coordinates or the
// boundary. Ties: smallest y2, then x1, then x2. Throws ContractError above
// kMaxEmptyRectPoints points.
EmptyRectResult empty_rectangle(const PointSet& ps);

// Enumerates every rectangle with at least 2 rows and 2 columns; ties to the
// smallest (l1, l2, c1, c2). Throws ContractError for inputs smaller than
// 2x2 or larger than kMaxPerimeterSide on either side.
PerimeterResult perimeter(const RealGrid& b);

// Shortest paths (Dijkstra) from a virtual white cell outside the map: edges
// follow each cell's own movement set and cost 1 across a colour change.
ValueTable depth(const BinaryGrid& g, ConnectivityConvention conv);

}  // namespace gridloc::oracle
