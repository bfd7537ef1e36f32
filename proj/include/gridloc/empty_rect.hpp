// Largest empty axis-parallel rectangle among points in [0, Xmax] x [0, Ymax].
//
// The points are compressed into a (2n+1) x (2n+1) logical grid whose rows
// and columns carry real heights and widths. Points occupy zero-area cells,
// so a rectangle of free cells corresponds to a rectangle with no point in
// its interior. Each row is then solved as a weighted histogram. O(n^2).

#pragma once

#include <span>
#include <vector>

#include "gridloc/grid.hpp"

namespace gridloc {

// Logical indices run 0..2n on both axes. Row index grows with y.
struct CompressedGrid {
  std::vector<double> col_widths;   // cw_0 .. cw_2n
  std::vector<double> row_heights;  // rh_0 .. rh_2n
  // For each logical row, the occupied column or -1. Only odd rows can hold
  // a point, and each holds at most one.
  std::vector<int> occupied_col;
  // Sorted coordinates with the sentinels 0 and Xmax (Ymax); size n + 2.
  std::vector<double> x_coords;
  std::vector<double> y_coords;

  int size() const { return static_cast<int>(col_widths.size()); }
  bool is_occupied(int row, int col) const { return occupied_col[row] == col; }

  // Continuous extent of logical column/row k, read from the coordinate lists
  // so boundaries coincide exactly with point coordinates.
  double col_begin(int k) const { return x_coords[(k + 1) / 2]; }
  double col_end(int k) const { return x_coords[k / 2 + 1]; }
  double row_begin(int k) const { return y_coords[(k + 1) / 2]; }
  double row_end(int k) const { return y_coords[k / 2 + 1]; }
};

CompressedGrid compress(const PointSet& ps);

struct HistogramSpan {
  double area = 0.0;
  int first = 0;  // 0-based, inclusive
  int last = 0;
  double height = 0.0;
};

// Max over contiguous spans [a..b] of min(heights[a..b]) * sum(widths[a..b]),
// with the smallest a, then smallest b among maximisers. Monotone-stack scan,
// O(c). Empty input gives area 0.
HistogramSpan histogram_max_area(std::span<const double> heights,
                                 std::span<const double> widths);

struct EmptyRectResult {
  double x1 = 0.0;
  double y1 = 0.0;
  double x2 = 0.0;
  double y2 = 0.0;
  double area = 0.0;
  // Set when no rectangle of positive area exists (Xmax or Ymax is 0).
  bool degenerate = false;
};

// Ties go to the smallest top edge y2, then the smallest x1, then x2.
EmptyRectResult max_empty_rectangle(const PointSet& ps);

// True when no point of ps lies strictly inside (x1, x2) x (y1, y2).
bool has_empty_interior(const PointSet& ps, double x1, double y1, double x2, double y2);

}  // namespace gridloc
