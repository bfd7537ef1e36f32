// Nesting depth of black (1) and white (0) connected components.
//
// The map is treated as if surrounded by white. A 0-1 traversal with a
// double-ended queue assigns every cell D = 1 + the number of colour changes
// on the cheapest path from outside; moving between same-coloured cells is
// free. White cells end up with odd D, black cells with even D, and a black
// component's depth (1 + number of enclosing black components) is D / 2.

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "gridloc/grid.hpp"

namespace gridloc {

enum class MovementSet {
  simple,    // 4 axis-aligned neighbours
  extended,  // 8 neighbours including diagonals
};

std::string_view to_string(MovementSet s);

// Black and white must use different movement sets, otherwise the two
// colours' components could cross each other.
class ConnectivityConvention {
 public:
  // Black uses simple moves, white uses extended moves.
  static ConnectivityConvention standard() { return {MovementSet::simple, MovementSet::extended}; }
  static ConnectivityConvention alternate() { return {MovementSet::extended, MovementSet::simple}; }

  MovementSet black() const { return black_; }
  MovementSet white() const { return white_; }
  MovementSet moves_for(std::uint8_t color) const { return color == 1 ? black_ : white_; }
  ConnectivityConvention swapped() const { return {white_, black_}; }

  friend bool operator==(const ConnectivityConvention&, const ConnectivityConvention&) = default;

 private:
  ConnectivityConvention(MovementSet black, MovementSet white) : black_(black), white_(white) {}
  MovementSet black_;
  MovementSet white_;
};

enum class Color { white, black };

std::string_view to_string(Color c);

struct Component {
  int id = 0;  // 1-based, in raster order of each component's first cell
  Color color = Color::white;
  std::vector<Cell> cells;
  int depth_value = 0;      // the shared D of its cells; 0 until depths are computed
  int component_depth = 0;  // black only: depth_value / 2
  bool encloses_white = false;  // black only
};

struct DepthResult {
  ValueTable depth_table;  // D; all zeros from label_components
  ValueTable labels;       // component id per cell
  std::vector<Component> components;
};

// Counters for the deque discipline: values in the deque must stay sorted
// and span at most two consecutive values.
struct DequeAudit {
  long long pushes = 0;
  long long violations = 0;
  std::size_t max_size = 0;
};

ValueTable compute_depth_map(const BinaryGrid& g, ConnectivityConvention conv,
                             DequeAudit* audit = nullptr);

DepthResult label_components(const BinaryGrid& g, ConnectivityConvention conv);

DepthResult analyze_depth(const BinaryGrid& g, ConnectivityConvention conv);

// Labels components and fills their depth fields from an existing depth
// table (e.g. one produced by the oracle).
DepthResult summarize_depth(const BinaryGrid& g, ConnectivityConvention conv,
                            ValueTable depth_table);

// Neighbour offsets for a movement set, as (row, col) pairs.
struct Offset {
  int dr;
  int dc;
};
std::span<const Offset> offsets(MovementSet s);

}  // namespace gridloc
