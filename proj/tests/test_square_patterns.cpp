#include "doctest.h"

#include "gridloc/generate.hpp"
#include "gridloc/oracle.hpp"
#include "gridloc/square_patterns.hpp"
#include "test_support.hpp"

using namespace gridloc;
using gridloc::test::bits;
using gridloc::test::table;

namespace {

constexpr SquarePattern kPatterns[] = {SquarePattern::monotone, SquarePattern::chessboard,
                                       SquarePattern::identity};

BinaryGrid identity_grid(int n) {
  BinaryGrid g(n, n);
  for (int k = 1; k <= n; ++k) g(k, k) = 1;
  return g;
}

}  // namespace

TEST_CASE("RM and DM runs") {
  CHECK(compute_rm_table(bits({{0, 0, 1}})) == table({{2, 1, 0}}));
  CHECK(compute_rm_table(bits({{1}})) == table({{0}}));
  CHECK(compute_rm_table(bits({{0, 0, 0, 0}})) == table({{4, 3, 2, 1}}));
  CHECK(compute_dm_table(bits({{0}, {0}, {1}})) == table({{2}, {1}, {0}}));
  CHECK(compute_dm_table(bits({{1}})) == table({{0}}));

  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const BinaryGrid g = random_binary_grid(1 + t % 7, 1 + t % 5, rng, 0.3);
    CHECK(compute_dm_table(g) == transpose(compute_rm_table(transpose(g))));
    const ValueTable rm = compute_rm_table(g);
    for (int i = 1; i <= g.rows(); ++i) {
      for (int j = 1; j <= g.cols(); ++j) {
        for (int k = 0; k < rm(i, j); ++k) CHECK(g(i, j + k) == 0);
        const int stop = j + rm(i, j);
        CHECK((stop > g.cols() || g(i, stop) == 1));
      }
    }
  }
}

TEST_CASE("monotone squares") {
  CHECK(compute_sq_table(bits({{1, 1}, {1, 1}})) == table({{2, 1}, {1, 1}}));
  CHECK(compute_sq_table(bits({{0}})) == table({{1}}));
  const ValueTable t = compute_sq_table(bits({{1, 1, 0}, {1, 1, 0}, {0, 0, 0}}));
  CHECK(t == table({{2, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  CHECK(best_square(t, SquarePattern::monotone)->side == 2);
}

TEST_CASE("chessboard squares") {
  CHECK(compute_cb_table(bits({{1, 0}, {0, 1}}))(1, 1) == 2);
  CHECK(compute_cb_table(bits({{1, 1}, {1, 1}})) == table({{1, 1}, {1, 1}}));
  CHECK(compute_cb_table(bits({{1, 0, 1}, {0, 1, 0}, {1, 0, 1}}))(1, 1) == 3);
}

TEST_CASE("identity squares include the full run length") {
  // The run terms need a +1: a square of side L needs L-1 zeros to the right
  // of and below the corner.
  CHECK(compute_im_table(identity_grid(2))(1, 1) == 2);
  CHECK(compute_im_table(identity_grid(3))(1, 1) == 3);
  CHECK(compute_im_table(bits({{0}})) == table({{0}}));
  CHECK(compute_im_table(bits({{1, 1}, {0, 1}}))(1, 1) == 1);
}

TEST_CASE("engine reproduces the dedicated tables") {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const BinaryGrid g = random_binary_grid(1 + t % 9, 1 + (t * 7) % 8, rng);
    CHECK(run_pattern_engine(g, monotone_rule()) == compute_sq_table(g));
    CHECK(run_pattern_engine(g, chessboard_rule()) == compute_cb_table(g));
    CHECK(run_pattern_engine(g, identity_rule()) == compute_im_table(g));
  }
  PatternRule zero = monotone_rule();
  zero.f_best = [](const BestInputs&) { return 0; };
  CHECK(run_pattern_engine(bits({{1, 0}, {0, 1}}), zero) == ValueTable(2, 2));
}

TEST_CASE("engine passes absent neighbours outside the grid") {
  PatternRule probe = monotone_rule();
  probe.f_best = [](const BestInputs& in) {
    return (in.down ? 1 : 0) + (in.right ? 2 : 0) + (in.diag ? 4 : 0);
  };
  CHECK(run_pattern_engine(BinaryGrid(2, 2), probe) == table({{7, 1}, {2, 0}}));
}

TEST_CASE("best_square tie rule and empty identity") {
  CHECK(best_square(table({{0, 0, 2}, {2, 0, 0}}), SquarePattern::monotone)->corner == Cell{1, 3});
  const auto r = best_square(compute_sq_table(bits({{1, 1}, {1, 1}})), SquarePattern::monotone);
  REQUIRE(r);
  CHECK(r->corner == Cell{1, 1});
  CHECK(r->side == 2);
  CHECK_FALSE(best_square(compute_im_table(BinaryGrid(3, 4)), SquarePattern::identity));
}

TEST_CASE("tables stay within bounds and witnesses are tight") {
  Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    const BinaryGrid g = random_binary_grid(1 + t % 10, 1 + (t * 3) % 10, rng, t % 2 ? 0.2 : 0.8);
    for (SquarePattern p : kPatterns) {
      const ValueTable table = compute_square_table(g, p);
      for (int i = 1; i <= g.rows(); ++i) {
        for (int j = 1; j <= g.cols(); ++j) {
          const int bound = std::min(g.rows() - i + 1, g.cols() - j + 1);
          CHECK(table(i, j) <= bound);
          CHECK(table(i, j) >= (p == SquarePattern::identity ? 0 : 1));
        }
      }
      const auto r = best_square(table, p);
      if (!r) continue;
      CHECK(oracle::is_pattern_square(g, r->corner, r->side, p));
      CHECK_FALSE(oracle::is_pattern_square(g, r->corner, r->side + 1, p));
    }
  }
}

TEST_CASE("pattern names round-trip") {
  for (SquarePattern p : kPatterns) CHECK(parse_square_pattern(to_string(p)) == p);
  CHECK_FALSE(parse_square_pattern("diagonal"));
}
