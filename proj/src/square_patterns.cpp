#include "gridloc/square_patterns.hpp"

#include <algorithm>

#include "faults.hpp"

namespace gridloc {

namespace {

// An out-of-grid neighbour never matches.
bool same(const BinaryGrid& g, int i, int j, std::uint8_t v) {
  return g.contains(i, j) && g(i, j) == v;
}

bool differs(const BinaryGrid& g, int i, int j, std::uint8_t v) {
  return g.contains(i, j) && g(i, j) != v;
}

int min3(int a, int b, int c) { return std::min({a, b, c}); }

MaybeBit maybe(const BinaryGrid& g, int i, int j) {
  return g.contains(i, j) ? MaybeBit(g(i, j)) : std::nullopt;
}

}  // namespace

std::string_view to_string(SquarePattern p) {
  switch (p) {
    case SquarePattern::monotone: return "monotone";
    case SquarePattern::chessboard: return "chessboard";
    case SquarePattern::identity: return "identity";
  }
  return "?";
}

std::optional<SquarePattern> parse_square_pattern(std::string_view name) {
  for (auto p : {SquarePattern::monotone, SquarePattern::chessboard, SquarePattern::identity})
    if (to_string(p) == name) return p;
  return std::nullopt;
}

ValueTable compute_rm_table(const BinaryGrid& g) {
  ValueTable rm(g.rows(), g.cols());
  for (int i = 1; i <= g.rows(); ++i)
    for (int j = g.cols(); j >= 1; --j)
      rm(i, j) = g(i, j) == 1 ? 0 : 1 + rm.get_or_zero(i, j + 1);
  return rm;
}

ValueTable compute_dm_table(const BinaryGrid& g) {
  ValueTable dm(g.rows(), g.cols());
  for (int i = g.rows(); i >= 1; --i)
    for (int j = 1; j <= g.cols(); ++j)
      dm(i, j) = g(i, j) == 1 ? 0 : 1 + dm.get_or_zero(i + 1, j);
  return dm;
}

ValueTable compute_sq_table(const BinaryGrid& g) {
  ValueTable sq(g.rows(), g.cols());
  for (int i = g.rows(); i >= 1; --i) {
    for (int j = g.cols(); j >= 1; --j) {
      const auto v = g(i, j);
      if (!same(g, i + 1, j, v) || !same(g, i, j + 1, v) || !same(g, i + 1, j + 1, v)) {
        sq(i, j) = 1;
      } else {
        sq(i, j) = 1 + min3(sq(i + 1, j), sq(i, j + 1), sq(i + 1, j + 1));
      }
    }
  }
  return sq;
}

ValueTable compute_cb_table(const BinaryGrid& g) {
  ValueTable cb(g.rows(), g.cols());
  for (int i = g.rows(); i >= 1; --i) {
    for (int j = g.cols(); j >= 1; --j) {
      const auto v = g(i, j);
      if (!differs(g, i + 1, j, v) || !differs(g, i, j + 1, v) || !same(g, i + 1, j + 1, v)) {
        cb(i, j) = 1;
      } else {
        cb(i, j) = 1 + min3(cb(i + 1, j), cb(i, j + 1), cb(i + 1, j + 1));
      }
    }
  }
  return cb;
}

ValueTable compute_im_table(const BinaryGrid& g) {
  const ValueTable rm = compute_rm_table(g);
  const ValueTable dm = compute_dm_table(g);
  // The mutant reproduces the off-by-one on the run terms.
  const int run_bonus = detail::kInjectFaults ? 0 : 1;
  ValueTable im(g.rows(), g.cols());
  for (int i = g.rows(); i >= 1; --i) {
    for (int j = g.cols(); j >= 1; --j) {
      if (g(i, j) == 0) continue;
      im(i, j) = min3(1 + im.get_or_zero(i + 1, j + 1), run_bonus + rm.get_or_zero(i, j + 1),
                      run_bonus + dm.get_or_zero(i + 1, j));
      if constexpr (detail::kInjectFaults) im(i, j) = std::max(im(i, j), 1);
    }
  }
  return im;
}

ValueTable compute_square_table(const BinaryGrid& g, SquarePattern p) {
  switch (p) {
    case SquarePattern::monotone: return compute_sq_table(g);
    case SquarePattern::chessboard: return compute_cb_table(g);
    case SquarePattern::identity: return compute_im_table(g);
  }
  throw ContractError("unknown square pattern");
}

PatternRule monotone_rule() {
  PatternRule r;
  r.f_rm = [](std::uint8_t v, int rm_right) { return v == 1 ? 0 : 1 + rm_right; };
  r.f_dm = [](std::uint8_t v, int dm_down) { return v == 1 ? 0 : 1 + dm_down; };
  r.f_best = [](const BestInputs& in) {
    if (in.down != in.here || in.right != in.here || in.diag != in.here) return 1;
    return 1 + min3(in.best_down, in.best_right, in.best_diag);
  };
  return r;
}

PatternRule chessboard_rule() {
  PatternRule r = monotone_rule();
  r.f_best = [](const BestInputs& in) {
    const bool alternates = in.down && *in.down != in.here && in.right &&
                            *in.right != in.here && in.diag == in.here;
    if (!alternates) return 1;
    return 1 + min3(in.best_down, in.best_right, in.best_diag);
  };
  return r;
}

PatternRule identity_rule() {
  PatternRule r = monotone_rule();
  r.f_best = [](const BestInputs& in) {
    if (in.here == 0) return 0;
    return 1 + min3(in.best_diag, in.rm_right, in.dm_down);
  };
  return r;
}

PatternRule rule_for(SquarePattern p) {
  switch (p) {
    case SquarePattern::monotone: return monotone_rule();
    case SquarePattern::chessboard: return chessboard_rule();
    case SquarePattern::identity: return identity_rule();
  }
  throw ContractError("unknown square pattern");
}

ValueTable run_pattern_engine(const BinaryGrid& g, const PatternRule& rule) {
  const int m = g.rows();
  const int n = g.cols();
  ValueTable rm(m, n);
  ValueTable dm(m, n);
  for (int i = 1; i <= m; ++i)
    for (int j = n; j >= 1; --j) rm(i, j) = rule.f_rm(g(i, j), rm.get_or_zero(i, j + 1));
  for (int i = m; i >= 1; --i)
    for (int j = 1; j <= n; ++j) dm(i, j) = rule.f_dm(g(i, j), dm.get_or_zero(i + 1, j));

  ValueTable best(m, n);
  for (int i = m; i >= 1; --i) {
    for (int j = n; j >= 1; --j) {
      BestInputs in;
      in.here = g(i, j);
      in.down = maybe(g, i + 1, j);
      in.right = maybe(g, i, j + 1);
      in.diag = maybe(g, i + 1, j + 1);
      in.best_down = best.get_or_zero(i + 1, j);
      in.best_right = best.get_or_zero(i, j + 1);
      in.best_diag = best.get_or_zero(i + 1, j + 1);
      in.rm_here = rm(i, j);
      in.rm_right = rm.get_or_zero(i, j + 1);
      in.dm_here = dm(i, j);
      in.dm_down = dm.get_or_zero(i + 1, j);
      best(i, j) = rule.f_best(in);
    }
  }
  return best;
}

std::optional<SquareResult> best_square(const ValueTable& t, SquarePattern p) {
  const TableMax top = table_argmax(t);
  if (top.value <= 0) return std::nullopt;
  return SquareResult{top.cell, top.value, p};
}

}  // namespace gridloc
