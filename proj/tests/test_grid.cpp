#include "doctest.h"

#include "gridloc/generate.hpp"
#include "gridloc/grid.hpp"
#include "test_support.hpp"

using namespace gridloc;
using gridloc::test::bits;

TEST_CASE("parse_binary_grid accepts contiguous and spaced rows") {
  CHECK(parse_binary_grid("1 1\n1") == bits({{1}}));
  CHECK(parse_binary_grid("2 3\n101\n010") == bits({{1, 0, 1}, {0, 1, 0}}));
  CHECK(parse_binary_grid("2 3\n1 0 1\n0 1 0\n") == bits({{1, 0, 1}, {0, 1, 0}}));
  CHECK(parse_binary_grid("2 2\r\n10\r\n\n01\n\n") == bits({{1, 0}, {0, 1}}));
}

TEST_CASE("parse_binary_grid errors name the line") {
  const auto line_of = [](std::string_view text) {
    try {
      parse_binary_grid(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("2 2\n10\n1") == 3);
  CHECK(line_of("") == 1);
  CHECK(line_of("2 2\n10\n") == 3);
  CHECK(line_of("1 2\n12") == 2);
  CHECK(line_of("1 2\n1x") == 2);
  CHECK(line_of("0 2\n") == 1);
  CHECK(line_of("2\n") == 1);
  CHECK(line_of("1 1\n1\n0\n") == 3);
  CHECK_THROWS_WITH_AS(parse_binary_grid("2 2\n10\n1"),
                       "line 3: row 2 has 1 cells, expected 2", ParseError);
}

TEST_CASE("parse_real_grid") {
  RealGrid g = parse_real_grid("1 2\n1.5 -2.0");
  CHECK(g(1, 1) == 1.5);
  CHECK(g(1, 2) == -2.0);
  CHECK(parse_real_grid("1 1\n0")(1, 1) == 0.0);
  CHECK(parse_real_grid("1 2\n+3 1e2")(1, 2) == 100.0);
  CHECK_THROWS_AS(parse_real_grid("1 1\nabc"), ParseError);
  CHECK_THROWS_AS(parse_real_grid("1 1\nnan"), ParseError);
  CHECK_THROWS_AS(parse_real_grid("1 1\ninf"), ParseError);
  CHECK_THROWS_AS(parse_real_grid("1 2\n1"), ParseError);
  CHECK_THROWS_AS(parse_real_grid("2 1\n1"), ParseError);
}

TEST_CASE("parse_points") {
  PointSet empty = parse_points("0 10 5");
  CHECK(empty.points.empty());
  CHECK(empty.x_max == 10.0);
  CHECK(empty.y_max == 5.0);

  PointSet one = parse_points("1 1 1\n0.5 0.5");
  REQUIRE(one.points.size() == 1);
  CHECK(one.points[0] == Point{0.5, 0.5});

  CHECK_THROWS_WITH_AS(parse_points("1 1 1\n2 0"), "line 2: x=2 outside [0, 1]", ParseError);
  CHECK_THROWS_AS(parse_points("1 1 1\n0 -1"), ParseError);
  CHECK_THROWS_AS(parse_points("0 -1 5"), ParseError);
  CHECK_THROWS_AS(parse_points("2 1 1\n0 0"), ParseError);
  CHECK_THROWS_AS(parse_points("1 1 1\n0 0\n1 1"), ParseError);
  CHECK_THROWS_AS(parse_points("x 1 1"), ParseError);
}

TEST_CASE("serialize then parse is the identity") {
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    std::uniform_int_distribution<int> dim(1, 9);
    const int m = dim(rng), n = dim(rng);
    const BinaryGrid b = random_binary_grid(m, n, rng);
    CHECK(parse_binary_grid(serialize(b)) == b);
    const RealGrid r = random_real_grid(m, n, rng, -1e6, 1e6);
    CHECK(parse_real_grid(serialize(r)) == r);
    const PointSet ps = random_point_set(dim(rng) - 1, 3.7, 11.25, rng);
    CHECK(parse_points(serialize(ps)) == ps);
  }
}

TEST_CASE("out-of-grid reads are zero") {
  const ValueTable t = test::table({{5, 6}, {7, 8}});
  CHECK(t.get_or_zero(0, 1) == 0);
  CHECK(t.get_or_zero(3, 1) == 0);
  CHECK(t.get_or_zero(1, 3) == 0);
  CHECK(t.get_or_zero(2, 2) == 8);
}

TEST_CASE("table_argmax prefers the smallest row, then column") {
  const ValueTable t = test::table({{0, 0, 3}, {3, 0, 0}});
  const TableMax top = table_argmax(t);
  CHECK(top.value == 3);
  CHECK(top.cell == Cell{1, 3});
}

TEST_CASE("grid reflections") {
  const BinaryGrid g = bits({{1, 0, 0}, {0, 0, 1}});
  CHECK(transpose(transpose(g)) == g);
  CHECK(flip_both(g) == bits({{1, 0, 0}, {0, 0, 1}}));
  CHECK(flip_rows(g) == bits({{0, 0, 1}, {1, 0, 0}}));
  CHECK(invert(g) == bits({{0, 1, 1}, {1, 1, 0}}));
}
