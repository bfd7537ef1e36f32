// Core grid types shared by every gridloc module.
//
// All public indices are 1-based: a Grid with m rows and n columns is
// addressed as (1..m, 1..n). Reads through get_or_zero() may step outside
// the grid and return the value type's zero; the recurrences rely on this
// to avoid separate boundary cases.

#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gridloc {

struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

template <typename T>
class Grid {
 public:
  using value_type = T;

  Grid() = default;
  Grid(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
    if (rows < 1 || cols < 1) {
      throw std::invalid_argument("grid dimensions must be positive");
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  bool contains(int row, int col) const {
    return row >= 1 && row <= rows_ && col >= 1 && col <= cols_;
  }
  bool contains(Cell c) const { return contains(c.row, c.col); }

  T& operator()(int row, int col) { return data_[index(row, col)]; }
  const T& operator()(int row, int col) const { return data_[index(row, col)]; }
  T& operator[](Cell c) { return (*this)(c.row, c.col); }
  const T& operator[](Cell c) const { return (*this)(c.row, c.col); }

  T get_or(int row, int col, T fallback) const {
    return contains(row, col) ? (*this)(row, col) : fallback;
  }
  T get_or_zero(int row, int col) const { return get_or(row, col, T{}); }

  // Row-major storage; element (r, c) lives at (r-1)*cols + (c-1).
  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(col - 1);
  }
  Cell cell_at(std::size_t index) const {
    return {static_cast<int>(index / static_cast<std::size_t>(cols_)) + 1,
            static_cast<int>(index % static_cast<std::size_t>(cols_)) + 1};
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using BinaryGrid = Grid<std::uint8_t>;
using ValueTable = Grid<int>;
using RealGrid = Grid<double>;

template <typename T>
Grid<T> transpose(const Grid<T>& g) {
  Grid<T> out(g.cols(), g.rows());
  for (int i = 1; i <= g.rows(); ++i)
    for (int j = 1; j <= g.cols(); ++j) out(j, i) = g(i, j);
  return out;
}

template <typename T>
Grid<T> flip_rows(const Grid<T>& g) {
  Grid<T> out(g.rows(), g.cols());
  for (int i = 1; i <= g.rows(); ++i)
    for (int j = 1; j <= g.cols(); ++j) out(g.rows() - i + 1, j) = g(i, j);
  return out;
}

template <typename T>
Grid<T> flip_cols(const Grid<T>& g) {
  Grid<T> out(g.rows(), g.cols());
  for (int i = 1; i <= g.rows(); ++i)
    for (int j = 1; j <= g.cols(); ++j) out(i, g.cols() - j + 1) = g(i, j);
  return out;
}

template <typename T>
Grid<T> flip_both(const Grid<T>& g) {
  return flip_rows(flip_cols(g));
}

BinaryGrid invert(const BinaryGrid& g);

struct TableMax {
  Cell cell;
  int value = 0;
};

// Largest entry; ties go to the smallest row, then the smallest column.
TableMax table_argmax(const ValueTable& t);

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct PointSet {
  double x_max = 0.0;
  double y_max = 0.0;
  std::vector<Point> points;

  friend bool operator==(const PointSet&, const PointSet&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Raised when an operation is called outside its documented domain.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

BinaryGrid parse_binary_grid(std::istream& in);
BinaryGrid parse_binary_grid(std::string_view text);
RealGrid parse_real_grid(std::istream& in);
RealGrid parse_real_grid(std::string_view text);
PointSet parse_points(std::istream& in);
PointSet parse_points(std::string_view text);

std::string serialize(const BinaryGrid& g);
std::string serialize(const RealGrid& g);
std::string serialize(const ValueTable& t);
std::string serialize(const PointSet& ps);

// Shortest decimal text that reads back to the same double.
std::string format_real(double value);

}  // namespace gridloc
