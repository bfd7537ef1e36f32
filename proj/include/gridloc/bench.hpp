// Timing harness for the fast algorithms on seeded random inputs.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <optional>
#include <span>
#include <string_view>

namespace gridloc {

enum class BenchKind {
  square_monotone,
  square_chessboard,
  square_identity,
  triangle,         // all four directions
  diamond_center,
  diamond_top,
  depth,            // analyze_depth, standard convention
  empty_rect,       // size = number of points
  perimeter,
};

std::string_view to_string(BenchKind k);
std::optional<BenchKind> parse_bench_kind(std::string_view name);
std::span<const BenchKind> all_bench_kinds();

// Growth of the work with `size` (side length, or point count): the runtime
// ratio expected when size doubles.
double doubling_ratio(BenchKind k);

struct BenchResult {
  BenchKind kind;
  int size = 0;
  std::uint64_t seed = 0;
  int reps = 0;
  double best_seconds = 0.0;  // fastest repetition
  long long checksum = 0;     // keeps the work observable
};

// Grid kinds use a size x size input; empty_rect uses `size` points in a
// 1000 x 1000 box. Input generation is not timed.
BenchResult run_bench(BenchKind kind, int size, std::uint64_t seed, int reps = 3);

}  // namespace gridloc
