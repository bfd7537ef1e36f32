#include "gridloc/perimeter_rect.hpp"

#include <tuple>

#include "faults.hpp"

namespace gridloc {

ColumnPrefixSums::ColumnPrefixSums(const RealGrid& b)
    : rows_(b.rows()), cols_(b.cols()),
      sums_(static_cast<std::size_t>(b.rows() + 1) * static_cast<std::size_t>(b.cols()), 0.0) {
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j)
      sums_[static_cast<std::size_t>(i) * cols_ + (j - 1)] = b(i, j) + (*this)(i - 1, j);
}

ColumnPrefixSums column_prefix_sums(const RealGrid& b) { return ColumnPrefixSums(b); }

PerimeterResult max_perimeter_rectangle(const RealGrid& b) {
  const int m = b.rows();
  const int n = b.cols();
  if (m < 2 || n < 2) {
    throw ContractError("no valid rectangle: need at least 2 rows and 2 columns");
  }
  const ColumnPrefixSums s(b);
  const auto key = [](const PerimeterResult& r) { return std::tie(r.l1, r.l2, r.c1, r.c2); };

  PerimeterResult best{0, 0, 0, 0, 0.0};
  bool have_best = false;
  for (int l1 = 1; l1 < m; ++l1) {
    for (int l2 = l1 + 1; l2 <= m; ++l2) {
      // open/open_start: best quasi-rectangle ending at column j-1 (no right
      // side yet) and the left column achieving it.
      double open = s.span(l1, l2, 1);
      int open_start = 1;
      for (int j = 2; j <= n; ++j) {
        const double closed = open + s.span(l1, l2, j);
        const PerimeterResult cand{l1, l2, open_start, j, closed};
        if (!have_best || closed > best.value ||
            (closed == best.value && key(cand) < key(best))) {
          best = cand;
          have_best = true;
        }
        const double boundary = detail::kInjectFaults ? b(l1, j) : b(l1, j) + b(l2, j);
        const double extended = open + boundary;
        const double fresh = s.span(l1, l2, j);
        // On a tie keep the earlier start.
        if (fresh > extended) {
          open = fresh;
          open_start = j;
        } else {
          open = extended;
        }
      }
    }
  }
  return best;
}

double perimeter_sum(const RealGrid& b, int l1, int l2, int c1, int c2) {
  double sum = 0.0;
  for (int j = c1; j <= c2; ++j) sum += b(l1, j) + b(l2, j);
  for (int i = l1 + 1; i < l2; ++i) sum += b(i, c1) + b(i, c2);
  return sum;
}

}  // namespace gridloc
