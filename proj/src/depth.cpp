#include "gridloc/depth.hpp"

#include <array>
#include <deque>

#include "faults.hpp"

namespace gridloc {

namespace {

constexpr std::array<Offset, 4> kSimple{{{-1, 0}, {0, -1}, {0, 1}, {1, 0}}};
constexpr std::array<Offset, 8> kExtended{
    {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}}};

bool on_border(const BinaryGrid& g, int i, int j) {
  return i == 1 || j == 1 || i == g.rows() || j == g.cols();
}

}  // namespace

std::string_view to_string(MovementSet s) {
  return s == MovementSet::simple ? "simple" : "extended";
}

std::string_view to_string(Color c) { return c == Color::black ? "black" : "white"; }

std::span<const Offset> offsets(MovementSet s) {
  if (s == MovementSet::simple) return kSimple;
  return kExtended;
}

ValueTable compute_depth_map(const BinaryGrid& g, ConnectivityConvention conv,
                             DequeAudit* audit) {
  const int m = g.rows();
  const int n = g.cols();
  ValueTable d(m, n);  // 0 = not yet discovered
  std::deque<std::size_t> queue;

  const auto check = [&] {
    if (!audit) return;
    ++audit->pushes;
    audit->max_size = std::max(audit->max_size, queue.size());
    if (d.data()[queue.back()] - d.data()[queue.front()] > 1) ++audit->violations;
  };
  const auto push_front = [&](std::size_t idx) {
    if (audit && !queue.empty() && d.data()[idx] > d.data()[queue.front()]) ++audit->violations;
    queue.push_front(idx);
    check();
  };
  const auto push_back = [&](std::size_t idx) {
    if (audit && !queue.empty() && d.data()[idx] < d.data()[queue.back()]) ++audit->violations;
    queue.push_back(idx);
    check();
  };

  // Border seeds: white cells touch the outside directly (D = 1); black cells
  // are one colour change away (D = 2). Whites go in first to keep the deque
  // sorted.
  const int black_seed = detail::kInjectFaults ? 1 : 2;
  for (std::uint8_t color : {std::uint8_t{0}, std::uint8_t{1}}) {
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (!on_border(g, i, j) || g(i, j) != color) continue;
        d(i, j) = color == 0 ? 1 : black_seed;
        push_back(d.index(i, j));
      }
    }
  }

  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    const Cell c = d.cell_at(idx);
    const std::uint8_t color = g(c.row, c.col);
    const int here = d.data()[idx];
    for (const Offset& o : offsets(conv.moves_for(color))) {
      const int r = c.row + o.dr;
      const int q = c.col + o.dc;
      if (!g.contains(r, q) || d(r, q) != 0) continue;
      const std::size_t next = d.index(r, q);
      if (g(r, q) == color) {
        d(r, q) = here;
        push_front(next);
      } else {
        d(r, q) = here + 1;
        push_back(next);
      }
    }
  }
  return d;
}

DepthResult label_components(const BinaryGrid& g, ConnectivityConvention conv) {
  const int m = g.rows();
  const int n = g.cols();
  DepthResult res{ValueTable(m, n), ValueTable(m, n), {}};
  std::vector<std::size_t> stack;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (res.labels(i, j) != 0) continue;
      const std::uint8_t color = g(i, j);
      Component comp;
      comp.id = static_cast<int>(res.components.size()) + 1;
      comp.color = color == 1 ? Color::black : Color::white;
      res.labels(i, j) = comp.id;
      stack.assign(1, g.index(i, j));
      while (!stack.empty()) {
        const Cell c = g.cell_at(stack.back());
        stack.pop_back();
        comp.cells.push_back(c);
        for (const Offset& o : offsets(conv.moves_for(color))) {
          const int r = c.row + o.dr;
          const int q = c.col + o.dc;
          if (!g.contains(r, q) || g(r, q) != color || res.labels(r, q) != 0) continue;
          res.labels(r, q) = comp.id;
          stack.push_back(g.index(r, q));
        }
      }
      res.components.push_back(std::move(comp));
    }
  }
  return res;
}

DepthResult analyze_depth(const BinaryGrid& g, ConnectivityConvention conv) {
  return summarize_depth(g, conv, compute_depth_map(g, conv));
}

DepthResult summarize_depth(const BinaryGrid& g, ConnectivityConvention conv,
                            ValueTable depth_table) {
  DepthResult res = label_components(g, conv);
  res.depth_table = std::move(depth_table);
  const ValueTable& d = res.depth_table;
  for (Component& comp : res.components) {
    const Cell first = comp.cells.front();
    comp.depth_value = d[first];
    if (comp.color != Color::black) continue;
    comp.component_depth = comp.depth_value / 2;
    for (const Cell& c : comp.cells) {
      for (const Offset& o : offsets(conv.black())) {
        const int r = c.row + o.dr;
        const int q = c.col + o.dc;
        if (g.contains(r, q) && g(r, q) == 0 && d(r, q) == d[c] + 1) {
          comp.encloses_white = true;
          break;
        }
      }
      if (comp.encloses_white) break;
    }
  }
  return res;
}

}  // namespace gridloc
