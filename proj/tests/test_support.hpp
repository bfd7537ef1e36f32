#pragma once

#include <initializer_list>
#include <numeric>
#include <vector>

#include "gridloc/grid.hpp"

namespace gridloc::test {

template <typename T>
Grid<T> make(std::initializer_list<std::initializer_list<T>> rows) {
  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(rows.begin()->size());
  Grid<T> g(m, n);
  int i = 1;
  for (const auto& row : rows) {
    int j = 1;
    for (T v : row) g(i, j++) = v;
    ++i;
  }
  return g;
}

inline BinaryGrid bits(std::initializer_list<std::initializer_list<std::uint8_t>> rows) {
  return make<std::uint8_t>(rows);
}

inline ValueTable table(std::initializer_list<std::initializer_list<int>> rows) {
  return make<int>(rows);
}

inline BinaryGrid filled(int m, int n, std::uint8_t v) { return BinaryGrid(m, n, v); }

// Every binary grid of every shape up to max_rows x max_cols.
template <typename F>
void for_each_grid(int max_rows, int max_cols, F&& f) {
  for (int m = 1; m <= max_rows; ++m) {
    for (int n = 1; n <= max_cols; ++n) {
      const int cells = m * n;
      for (long mask = 0; mask < (1L << cells); ++mask) {
        BinaryGrid g(m, n);
        for (int k = 0; k < cells; ++k) g.data()[k] = static_cast<std::uint8_t>((mask >> k) & 1);
        f(g);
      }
    }
  }
}

// Disjoint-set forest, used as an independent component counter.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace gridloc::test
