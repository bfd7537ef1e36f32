// Maximum perimeter-sum subrectangle of a real matrix.
//
// For each pair of rows (l1, l2) the problem collapses to one dimension:
// a left column contributes its full column sum, interior columns only their
// two boundary cells, and the right column closes the rectangle with its full
// column sum. O(m^2 * n) time, O(m * n) memory.

#pragma once

#include "gridloc/grid.hpp"

namespace gridloc {

struct PerimeterResult {
  int l1 = 0;  // top row
  int l2 = 0;  // bottom row, l2 > l1
  int c1 = 0;  // left column
  int c2 = 0;  // right column, c2 > c1
  double value = 0.0;

  friend bool operator==(const PerimeterResult&, const PerimeterResult&) = default;
};

// S(i, j) = B(1, j) + ... + B(i, j), with S(0, j) = 0.
class ColumnPrefixSums {
 public:
  explicit ColumnPrefixSums(const RealGrid& b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int i, int j) const {
    return sums_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(j - 1)];
  }
  // Sum of column j over rows l1..l2.
  double span(int l1, int l2, int j) const { return (*this)(l2, j) - (*this)(l1 - 1, j); }

 private:
  int rows_;
  int cols_;
  std::vector<double> sums_;
};

ColumnPrefixSums column_prefix_sums(const RealGrid& b);

// Ties go to the lexicographically smallest (l1, l2, c1, c2). Throws
// ContractError when the matrix has fewer than 2 rows or 2 columns.
PerimeterResult max_perimeter_rectangle(const RealGrid& b);

// Sum of the boundary cells of rows l1..l2, columns c1..c2, each cell once.
double perimeter_sum(const RealGrid& b, int l1, int l2, int c1, int c2);

}  // namespace gridloc
