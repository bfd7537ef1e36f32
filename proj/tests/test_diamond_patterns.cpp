#include "doctest.h"

#include "gridloc/diamond_patterns.hpp"
#include "gridloc/generate.hpp"
#include "gridloc/oracle.hpp"
#include "test_support.hpp"

using namespace gridloc;
using gridloc::test::bits;
using gridloc::test::filled;
using gridloc::test::table;

TEST_CASE("south-east triangles") {
  // The corner cell (2,2) lies outside the side-2 triangle, so it may be 0.
  CHECK(compute_triangle_table(bits({{1, 1}, {1, 0}}), Direction::se)(1, 1) == 2);
  for (auto d : {Direction::nw, Direction::ne, Direction::sw, Direction::se})
    CHECK(compute_triangle_table(bits({{0}}), d) == table({{0}}));
  const ValueTable t = compute_triangle_table(filled(3, 3, 1), Direction::se);
  CHECK(t(1, 1) == 3);
  CHECK(t(2, 2) == 2);
  CHECK(t(3, 3) == 1);
}

TEST_CASE("triangle tables are reflections of each other") {
  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    const BinaryGrid g = random_binary_grid(1 + t % 8, 1 + (t * 5) % 9, rng, 0.7);
    const auto se = [](const BinaryGrid& x) { return compute_triangle_table(x, Direction::se); };
    CHECK(compute_triangle_table(g, Direction::nw) == flip_both(se(flip_both(g))));
    CHECK(compute_triangle_table(g, Direction::ne) == flip_rows(se(flip_rows(g))));
    CHECK(compute_triangle_table(g, Direction::sw) == flip_cols(se(flip_cols(g))));
  }
}

TEST_CASE("diamond centre table") {
  CHECK(compute_diamond_center_table(filled(3, 3, 1))(2, 2) == 2);
  BinaryGrid lone(4, 5);
  lone(2, 3) = 1;
  ValueTable expect(4, 5);
  expect(2, 3) = 1;
  CHECK(compute_diamond_center_table(lone) == expect);
  CHECK(compute_diamond_center_table(filled(3, 4, 0)) == ValueTable(3, 4));
}

TEST_CASE("diamond top table") {
  const ValueTable d = compute_diamond_top_table(filled(3, 3, 1));
  CHECK(d(1, 2) == 2);
  CHECK(d(2, 1) == 1);
  CHECK(compute_diamond_top_table(bits({{0, 1}, {1, 1}})) == table({{0, 1}, {1, 1}}));
  // Row 2 alone cannot hold the bottom tip of a side-2 diamond.
  CHECK(compute_diamond_top_table(filled(2, 3, 1)) == table({{1, 1, 1}, {1, 1, 1}}));
}

TEST_CASE("diamond engine") {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const BinaryGrid g = random_binary_grid(1 + t % 10, 1 + (t * 3) % 10, rng, 0.75);
    CHECK(run_diamond_engine(g, diamond_top_rule()) == compute_diamond_top_table(g));
  }
  const BinaryGrid g = bits({{1, 0, 1}, {0, 1, 1}});
  CHECK(run_diamond_engine(g, {[](const DiamondInputs&) { return 0; }}) == ValueTable(2, 3));
  const ValueTable copy = run_diamond_engine(g, {[](const DiamondInputs& in) { return int(in.here); }});
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(copy(i, j) == g(i, j));
}

TEST_CASE("best_diamond") {
  const DiamondResult five = best_diamond(filled(5, 5, 1));
  CHECK(five.found);
  CHECK(five.side == 3);
  CHECK(five.top_cell == Cell{1, 3});
  CHECK(five.center == Cell{3, 3});

  const DiamondResult none = best_diamond(filled(3, 3, 0));
  CHECK_FALSE(none.found);
  CHECK(none.side == 0);

  BinaryGrid lone(3, 3);
  lone(2, 2) = 1;
  const DiamondResult one = best_diamond(lone);
  CHECK(one.side == 1);
  CHECK(one.top_cell == Cell{2, 2});
}

TEST_CASE("both diamond formulations agree and witnesses are tight") {
  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const BinaryGrid g = random_binary_grid(1 + t % 12, 1 + (t * 7) % 12, rng, 0.85);
    const ValueTable centre = compute_diamond_center_table(g);
    const DiamondResult r = best_diamond(g);
    CHECK(table_argmax(centre).value == r.side);
    if (!r.found) continue;
    CHECK(r.center.row == r.top_cell.row + r.side - 1);
    CHECK(r.center.col == r.top_cell.col);
    CHECK(oracle::is_diamond(g, r.center, r.side));
    CHECK_FALSE(oracle::is_diamond(g, {r.center.row + 1, r.center.col}, r.side + 1));
  }
}

TEST_CASE("direction names round-trip") {
  for (auto d : {Direction::nw, Direction::ne, Direction::sw, Direction::se})
    CHECK(parse_direction(to_string(d)) == d);
  CHECK_FALSE(parse_direction("n"));
}
