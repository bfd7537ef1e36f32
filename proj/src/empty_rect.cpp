#include "gridloc/empty_rect.hpp"

#include <algorithm>
#include <numeric>

#include "faults.hpp"

namespace gridloc {

namespace {

// Sorted coordinates with sentinels 0 and `hi`, plus each point's 1-based
// rank. Equal coordinates keep input order.
struct AxisRanks {
  std::vector<double> sorted;  // size n + 2
  std::vector<int> rank;       // per input point, 1..n
};

AxisRanks rank_axis(const std::vector<Point>& pts, double hi, double Point::*coord) {
  const std::size_t n = pts.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return pts[a].*coord < pts[b].*coord; });
  AxisRanks r;
  r.sorted.resize(n + 2);
  r.rank.resize(n);
  r.sorted.front() = 0.0;
  r.sorted.back() = hi;
  for (std::size_t k = 0; k < n; ++k) {
    r.sorted[k + 1] = pts[order[k]].*coord;
    r.rank[order[k]] = static_cast<int>(k) + 1;
  }
  return r;
}

// Even slots get the gap between consecutive sorted coordinates; odd slots
// (the point lines) are zero-width.
std::vector<double> slot_sizes(const std::vector<double>& sorted) {
  const std::size_t n = sorted.size() - 2;
  std::vector<double> out(2 * n + 1, 0.0);
  for (std::size_t k = 0; k <= n; ++k) out[2 * k] = sorted[k + 1] - sorted[k];
  return out;
}

}  // namespace

CompressedGrid compress(const PointSet& ps) {
  const AxisRanks xr = rank_axis(ps.points, ps.x_max, &Point::x);
  const AxisRanks yr = rank_axis(ps.points, ps.y_max, &Point::y);
  CompressedGrid cg;
  cg.col_widths = slot_sizes(xr.sorted);
  cg.row_heights = slot_sizes(yr.sorted);
  cg.occupied_col.assign(cg.row_heights.size(), -1);
  cg.x_coords = xr.sorted;
  cg.y_coords = yr.sorted;
  for (std::size_t k = 0; k < ps.points.size(); ++k)
    cg.occupied_col[2 * yr.rank[k] - 1] = 2 * xr.rank[k] - 1;
  return cg;
}

namespace {

enum class SpanTie {
  by_index,   // smallest first index, then smallest last index
  by_extent,  // smallest start offset, then smallest end offset
};

HistogramSpan best_span(std::span<const double> heights, std::span<const double> widths,
                        SpanTie tie) {
  const int c = static_cast<int>(heights.size());
  if (c == 0 || widths.size() != heights.size()) return {0.0, 0, -1, 0.0};

  std::vector<double> prefix(c + 1, 0.0);
  for (int k = 0; k < c; ++k) prefix[k + 1] = prefix[k] + widths[k];

  // left[k] / right[k]: widest span around k whose heights are all >= heights[k].
  // Every maximiser shares its offsets and area with one of these spans.
  std::vector<int> left(c), right(c), stack;
  stack.reserve(c);
  for (int k = 0; k < c; ++k) {
    while (!stack.empty() && heights[stack.back()] >= heights[k]) stack.pop_back();
    left[k] = stack.empty() ? 0 : stack.back() + 1;
    stack.push_back(k);
  }
  stack.clear();
  for (int k = c - 1; k >= 0; --k) {
    while (!stack.empty() && heights[stack.back()] >= heights[k]) stack.pop_back();
    right[k] = stack.empty() ? c - 1 : stack.back() - 1;
    stack.push_back(k);
  }

  const auto key = [&](int a, int b) {
    return tie == SpanTie::by_index ? std::pair<double, double>(a, b)
                                    : std::pair(prefix[a], prefix[b + 1]);
  };
  HistogramSpan best{-1.0, 0, 0, 0.0};
  for (int k = 0; k < c; ++k) {
    const double area = heights[k] * (prefix[right[k] + 1] - prefix[left[k]]);
    if (area > best.area ||
        (area == best.area && key(left[k], right[k]) < key(best.first, best.last))) {
      best = {area, left[k], right[k], heights[k]};
    }
  }
  if (best.area <= 0.0) return {0.0, 0, 0, heights[0]};

  // Trailing zero-width columns do not change the area; drop them.
  int last = best.last;
  while (last > best.first && prefix[last] == prefix[best.last + 1]) --last;
  best.last = last;
  best.height = *std::min_element(heights.begin() + best.first, heights.begin() + last + 1);
  return best;
}

}  // namespace

HistogramSpan histogram_max_area(std::span<const double> heights,
                                 std::span<const double> widths) {
  return best_span(heights, widths, SpanTie::by_index);
}

EmptyRectResult max_empty_rectangle(const PointSet& ps) {
  const CompressedGrid cg = compress(ps);
  const int size = cg.size();

  // Empty vertical extent of each column ending at the current row, and the
  // row where that empty run begins.
  std::vector<double> column_height(size, 0.0);
  std::vector<int> run_start(size, 0);
  HistogramSpan best{-1.0, 0, 0, 0.0};
  int top_row = 0;
  int bottom_row = 0;
  for (int row = 0; row < size; ++row) {
    for (int col = 0; col < size; ++col) {
      const bool blocked = cg.is_occupied(row, col) && !detail::kInjectFaults;
      if (blocked) {
        column_height[col] = 0.0;
        run_start[col] = row + 1;
      } else {
        column_height[col] += cg.row_heights[row];
      }
    }
    const HistogramSpan span = best_span(column_height, cg.col_widths, SpanTie::by_extent);
    if (span.area > best.area) {
      best = span;
      top_row = row;
      bottom_row = *std::max_element(run_start.begin() + span.first,
                                     run_start.begin() + span.last + 1);
    }
  }

  EmptyRectResult r;
  if (best.area <= 0.0) {
    r = {0.0, 0.0, ps.x_max, ps.y_max, 0.0, true};
    return r;
  }
  r.x1 = cg.col_begin(best.first);
  r.x2 = cg.col_end(best.last);
  r.y1 = cg.row_begin(bottom_row);
  r.y2 = cg.row_end(top_row);
  r.area = (r.x2 - r.x1) * (r.y2 - r.y1);
  return r;
}

bool has_empty_interior(const PointSet& ps, double x1, double y1, double x2, double y2) {
  return std::none_of(ps.points.begin(), ps.points.end(), [&](const Point& p) {
    return x1 < p.x && p.x < x2 && y1 < p.y && p.y < y2;
  });
}

}  // namespace gridloc
