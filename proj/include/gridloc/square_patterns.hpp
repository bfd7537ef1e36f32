// Largest patterned squares on a binary map.
//
// Every table holds, at (i, j), the side of the largest square of the given
// pattern whose UPPER-LEFT corner is (i, j). Tables are filled bottom-up
// (rows m..1, columns n..1) in O(m*n).

#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "gridloc/grid.hpp"

namespace gridloc {

enum class SquarePattern { monotone, chessboard, identity };

std::string_view to_string(SquarePattern p);
std::optional<SquarePattern> parse_square_pattern(std::string_view name);

struct SquareResult {
  Cell corner;
  int side = 0;
  SquarePattern pattern = SquarePattern::monotone;

  friend bool operator==(const SquareResult&, const SquareResult&) = default;
};

// A cell value that may lie outside the grid.
using MaybeBit = std::optional<std::uint8_t>;

// Everything f_best may look at for cell (i, j). Neighbour tables read 0
// outside the grid.
struct BestInputs {
  std::uint8_t here = 0;  // A(i, j)
  MaybeBit down;          // A(i+1, j)
  MaybeBit right;         // A(i, j+1)
  MaybeBit diag;          // A(i+1, j+1)
  int best_down = 0;      // BEST(i+1, j)
  int best_right = 0;     // BEST(i, j+1)
  int best_diag = 0;      // BEST(i+1, j+1)
  int rm_here = 0;        // RM(i, j)
  int rm_right = 0;       // RM(i, j+1)
  int dm_here = 0;        // DM(i, j)
  int dm_down = 0;        // DM(i+1, j)
};

// Local rules driving run_pattern_engine. RM and DM are filled first
// (right-to-left and bottom-to-top), then BEST.
struct PatternRule {
  std::function<int(std::uint8_t value, int rm_right)> f_rm;
  std::function<int(std::uint8_t value, int dm_down)> f_dm;
  std::function<int(const BestInputs&)> f_best;
};

PatternRule monotone_rule();
PatternRule chessboard_rule();
PatternRule identity_rule();
PatternRule rule_for(SquarePattern p);

// Length of the run of 0s starting at (i, j) going right.
ValueTable compute_rm_table(const BinaryGrid& g);
// Length of the run of 0s starting at (i, j) going down.
ValueTable compute_dm_table(const BinaryGrid& g);

ValueTable compute_sq_table(const BinaryGrid& g);
ValueTable compute_cb_table(const BinaryGrid& g);
// Largest square with 1s on its main diagonal and 0s elsewhere; 0 where
// A(i, j) = 0.
ValueTable compute_im_table(const BinaryGrid& g);
ValueTable compute_square_table(const BinaryGrid& g, SquarePattern p);

ValueTable run_pattern_engine(const BinaryGrid& g, const PatternRule& rule);

// Argmax of a square table, ties to the smallest row then column. Empty
// when the table is all zeros (only possible for the identity pattern).
std::optional<SquareResult> best_square(const ValueTable& t, SquarePattern p);

}  // namespace gridloc
