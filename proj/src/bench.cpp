#include "gridloc/bench.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>

#include "gridloc/depth.hpp"
#include "gridloc/diamond_patterns.hpp"
#include "gridloc/empty_rect.hpp"
#include "gridloc/generate.hpp"
#include "gridloc/perimeter_rect.hpp"
#include "gridloc/square_patterns.hpp"

namespace gridloc {

namespace {

constexpr std::array<BenchKind, 9> kAll{
    BenchKind::square_monotone, BenchKind::square_chessboard, BenchKind::square_identity,
    BenchKind::triangle,        BenchKind::diamond_center,    BenchKind::diamond_top,
    BenchKind::depth,           BenchKind::empty_rect,        BenchKind::perimeter};

long long table_sum(const ValueTable& t) {
  long long s = 0;
  for (int v : t.data()) s += v;
  return s;
}

}  // namespace

std::string_view to_string(BenchKind k) {
  switch (k) {
    case BenchKind::square_monotone: return "square-monotone";
    case BenchKind::square_chessboard: return "square-chessboard";
    case BenchKind::square_identity: return "square-identity";
    case BenchKind::triangle: return "triangle";
    case BenchKind::diamond_center: return "diamond-center";
    case BenchKind::diamond_top: return "diamond-top";
    case BenchKind::depth: return "depth";
    case BenchKind::empty_rect: return "empty-rect";
    case BenchKind::perimeter: return "perimeter";
  }
  return "?";
}

std::optional<BenchKind> parse_bench_kind(std::string_view name) {
  for (auto k : kAll)
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::span<const BenchKind> all_bench_kinds() { return kAll; }

double doubling_ratio(BenchKind k) {
  switch (k) {
    case BenchKind::perimeter: return 8.0;  // m^2 * n
    default: return 4.0;                    // m * n, or n^2 points
  }
}

BenchResult run_bench(BenchKind kind, int size, std::uint64_t seed, int reps) {
  if (size < 2) throw std::invalid_argument("bench size must be at least 2");
  if (reps < 1) reps = 1;
  Rng rng(seed);

  std::function<long long()> work;
  BinaryGrid grid;
  RealGrid real;
  PointSet points;
  switch (kind) {
    case BenchKind::empty_rect:
      points = random_point_set(size, 1000.0, 1000.0, rng);
      work = [&] { return std::llround(max_empty_rectangle(points).area); };
      break;
    case BenchKind::perimeter:
      real = random_real_grid(size, size, rng);
      work = [&] { return std::llround(max_perimeter_rectangle(real).value); };
      break;
    default:
      grid = random_binary_grid(size, size, rng);
      break;
  }
  switch (kind) {
    case BenchKind::square_monotone:
      work = [&] { return table_sum(compute_sq_table(grid)); };
      break;
    case BenchKind::square_chessboard:
      work = [&] { return table_sum(compute_cb_table(grid)); };
      break;
    case BenchKind::square_identity:
      work = [&] { return table_sum(compute_im_table(grid)); };
      break;
    case BenchKind::triangle:
      work = [&] {
        long long s = 0;
        for (auto d : {Direction::nw, Direction::ne, Direction::sw, Direction::se})
          s += table_sum(compute_triangle_table(grid, d));
        return s;
      };
      break;
    case BenchKind::diamond_center:
      work = [&] { return table_sum(compute_diamond_center_table(grid)); };
      break;
    case BenchKind::diamond_top:
      work = [&] { return table_sum(compute_diamond_top_table(grid)); };
      break;
    case BenchKind::depth:
      work = [&] {
        return static_cast<long long>(
            analyze_depth(grid, ConnectivityConvention::standard()).components.size());
      };
      break;
    default:
      break;
  }

  BenchResult r{kind, size, seed, reps, std::numeric_limits<double>::infinity(), 0};
  for (int k = 0; k < reps; ++k) {
    const auto start = std::chrono::steady_clock::now();
    r.checksum = work();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    r.best_seconds = std::min(r.best_seconds, elapsed.count());
  }
  return r;
}

}  // namespace gridloc
