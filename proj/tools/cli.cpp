#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gridloc/bench.hpp"
#include "gridloc/depth.hpp"
#include "gridloc/diamond_patterns.hpp"
#include "gridloc/empty_rect.hpp"
#include "gridloc/grid.hpp"
#include "gridloc/oracle.hpp"
#include "gridloc/perimeter_rect.hpp"
#include "gridloc/square_patterns.hpp"

namespace gridloc::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kRelTol = 1e-9;

struct Options {
  std::string input;
  std::string format = "text";
  bool table = false;
  std::string pattern = "monotone";
  std::string dir = "se";
  bool swap_connectivity = false;
  std::string method = "top";
  int size = 1000;
  std::uint64_t seed = 1;
  int reps = 3;
  bool doubling = false;
};

// A result rendered both ways.
struct Answer {
  json data;
  std::string text;
};

bool close(double a, double b) {
  return std::abs(a - b) <= kRelTol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string cell_text(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

json cell_json(Cell c) { return {{"row", c.row}, {"col", c.col}}; }

json table_json(const ValueTable& t) {
  json rows = json::array();
  for (int i = 1; i <= t.rows(); ++i) {
    json row = json::array();
    for (int j = 1; j <= t.cols(); ++j) row.push_back(t(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string table_text(const ValueTable& t) {
  std::string out;
  for (int i = 1; i <= t.rows(); ++i) {
    for (int j = 1; j <= t.cols(); ++j) {
      if (j > 1) out += ' ';
      out += std::to_string(t(i, j));
    }
    out += '\n';
  }
  return out;
}

void attach_table(Answer& a, const std::string& name, const ValueTable& t) {
  a.data[name] = table_json(t);
  a.text += name + ":\n" + table_text(t);
}

std::string reals_text(const std::vector<double>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) out += ' ';
    out += format_real(v[k]);
  }
  return out;
}

// ---- per-problem renderers ----

Answer square_answer(const std::optional<SquareResult>& r, SquarePattern p) {
  Answer a;
  a.data["command"] = "square";
  a.data["pattern"] = std::string(to_string(p));
  a.data["found"] = r.has_value();
  a.data["side"] = r ? r->side : 0;
  a.data["corner"] = r ? cell_json(r->corner) : json(nullptr);
  a.text = r ? "side=" + std::to_string(r->side) + " corner=" + cell_text(r->corner) + "\n"
             : "no such square\n";
  return a;
}

Answer triangle_answer(const ValueTable& t, Direction d) {
  const TableMax top = table_argmax(t);
  const bool found = top.value > 0;
  Answer a;
  a.data["command"] = "triangle";
  a.data["direction"] = std::string(to_string(d));
  a.data["found"] = found;
  a.data["side"] = top.value;
  a.data["corner"] = found ? cell_json(top.cell) : json(nullptr);
  a.text = found ? "side=" + std::to_string(top.value) + " corner=" + cell_text(top.cell) + "\n"
                 : "no triangle found\n";
  return a;
}

Answer diamond_answer(const DiamondResult& r) {
  Answer a;
  a.data["command"] = "diamond";
  a.data["found"] = r.found;
  a.data["side"] = r.side;
  a.data["top"] = r.found ? cell_json(r.top_cell) : json(nullptr);
  a.data["center"] = r.found ? cell_json(r.center) : json(nullptr);
  a.text = r.found ? "side=" + std::to_string(r.side) + " top=" + cell_text(r.top_cell) +
                         " center=" + cell_text(r.center) + "\n"
                   : "no diamond found\n";
  return a;
}

Answer empty_rect_answer(const EmptyRectResult& r) {
  Answer a;
  a.data["command"] = "empty-rect";
  a.data["x1"] = r.x1;
  a.data["y1"] = r.y1;
  a.data["x2"] = r.x2;
  a.data["y2"] = r.y2;
  a.data["area"] = r.area;
  a.data["degenerate"] = r.degenerate;
  a.text = "area=" + format_real(r.area) + " x1=" + format_real(r.x1) + " y1=" +
           format_real(r.y1) + " x2=" + format_real(r.x2) + " y2=" + format_real(r.y2) +
           (r.degenerate ? " degenerate" : "") + "\n";
  return a;
}

Answer perimeter_answer(const PerimeterResult& r) {
  Answer a;
  a.data["command"] = "perimeter";
  a.data["l1"] = r.l1;
  a.data["l2"] = r.l2;
  a.data["c1"] = r.c1;
  a.data["c2"] = r.c2;
  a.data["value"] = r.value;
  a.text = "value=" + format_real(r.value) + " l1=" + std::to_string(r.l1) +
           " l2=" + std::to_string(r.l2) + " c1=" + std::to_string(r.c1) +
           " c2=" + std::to_string(r.c2) + "\n";
  return a;
}

Answer depth_answer(const DepthResult& r, ConnectivityConvention conv) {
  Answer a;
  a.data["command"] = "depth";
  a.data["convention"] = {{"black", std::string(to_string(conv.black()))},
                          {"white", std::string(to_string(conv.white()))}};
  json comps = json::array();
  a.text = "components=" + std::to_string(r.components.size()) + "\n";
  for (const Component& c : r.components) {
    const bool black = c.color == Color::black;
    const int depth = black ? c.component_depth : c.depth_value;
    comps.push_back({{"id", c.id},
                     {"color", std::string(to_string(c.color))},
                     {"depth", depth},
                     {"d", c.depth_value},
                     {"size", c.cells.size()},
                     {"first", cell_json(c.cells.front())},
                     {"encloses_white", c.encloses_white}});
    a.text += "id=" + std::to_string(c.id) + " color=" + std::string(to_string(c.color)) +
              " depth=" + std::to_string(depth) + " d=" + std::to_string(c.depth_value) +
              " size=" + std::to_string(c.cells.size()) +
              " first=" + cell_text(c.cells.front());
    if (black) a.text += c.encloses_white ? " encloses_white=yes" : " encloses_white=no";
    a.text += "\n";
  }
  a.data["components"] = std::move(comps);
  return a;
}

// ---- I/O ----

std::string read_input(const Options& opt, std::istream& in) {
  std::ostringstream buf;
  if (opt.input.empty() || opt.input == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(opt.input);
    if (!file) throw std::runtime_error("cannot open input file '" + opt.input + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

void emit(const Answer& a, const Options& opt, std::ostream& out) {
  if (opt.format == "json") {
    out << a.data.dump(2) << "\n";
  } else {
    out << a.text;
  }
}

int emit_check(bool agree, const Answer& fast, const Answer& ref, const std::string& input,
               const Options& opt, std::ostream& out) {
  if (opt.format == "json") {
    json j;
    j["agree"] = agree;
    j["fast"] = fast.data;
    j["oracle"] = ref.data;
    if (!agree) j["input"] = input;
    out << j.dump(2) << "\n";
  } else if (agree) {
    out << "ok: fast and oracle agree\n" << fast.text;
  } else {
    out << "MISMATCH\nfast:\n" << fast.text << "oracle:\n" << ref.text << "input:\n" << input;
    if (!input.empty() && input.back() != '\n') out << "\n";
  }
  return agree ? kExitOk : kExitMismatch;
}

ConnectivityConvention convention(const Options& opt) {
  return opt.swap_connectivity ? ConnectivityConvention::alternate()
                               : ConnectivityConvention::standard();
}

// ---- commands ----

enum class Mode { solve, oracle, check };

int cmd_square(Mode mode, const Options& opt, const std::string& text, std::ostream& out) {
  const BinaryGrid g = parse_binary_grid(text);
  const SquarePattern p = *parse_square_pattern(opt.pattern);
  const auto solve_fast = [&] {
    ValueTable t = compute_square_table(g, p);
    Answer a = square_answer(best_square(t, p), p);
    return std::pair(std::move(a), std::move(t));
  };
  const auto solve_oracle = [&] {
    ValueTable t = oracle::square_table(g, p);
    Answer a = square_answer(oracle::best_square(g, p), p);
    return std::pair(std::move(a), std::move(t));
  };
  if (mode != Mode::check) {
    auto [a, t] = mode == Mode::solve ? solve_fast() : solve_oracle();
    if (opt.table) attach_table(a, "table", t);
    emit(a, opt, out);
    return kExitOk;
  }
  auto [fa, ft] = solve_fast();
  auto [oa, ot] = solve_oracle();
  const bool agree = ft == ot && fa.data == oa.data;
  if (opt.table) {
    attach_table(fa, "table", ft);
    attach_table(oa, "table", ot);
  }
  return emit_check(agree, fa, oa, text, opt, out);
}

int cmd_triangle(Mode mode, const Options& opt, const std::string& text, std::ostream& out) {
  const BinaryGrid g = parse_binary_grid(text);
  const Direction d = *parse_direction(opt.dir);
  if (mode != Mode::check) {
    const ValueTable t =
        mode == Mode::solve ? compute_triangle_table(g, d) : oracle::triangle_table(g, d);
    Answer a = triangle_answer(t, d);
    if (opt.table) attach_table(a, "table", t);
    emit(a, opt, out);
    return kExitOk;
  }
  const ValueTable ft = compute_triangle_table(g, d);
  const ValueTable ot = oracle::triangle_table(g, d);
  Answer fa = triangle_answer(ft, d);
  Answer oa = triangle_answer(ot, d);
  if (opt.table) {
    attach_table(fa, "table", ft);
    attach_table(oa, "table", ot);
  }
  return emit_check(ft == ot, fa, oa, text, opt, out);
}

int cmd_diamond(Mode mode, const Options& opt, const std::string& text, std::ostream& out) {
  const BinaryGrid g = parse_binary_grid(text);
  struct Solved {
    ValueTable top, center;
    DiamondResult best;
  };
  const auto solve_fast = [&] {
    Solved s{compute_diamond_top_table(g), compute_diamond_center_table(g), {}};
    s.best = diamond_from_top_table(s.top);
    return s;
  };
  const auto solve_oracle = [&] {
    return Solved{oracle::diamond_top_table(g), oracle::diamond_center_table(g),
                  oracle::best_diamond(g)};
  };
  const auto render = [&](const Solved& s) {
    Answer a = diamond_answer(s.best);
    if (opt.table) {
      attach_table(a, "top_table", s.top);
      attach_table(a, "center_table", s.center);
    }
    return a;
  };
  if (mode != Mode::check) {
    emit(render(mode == Mode::solve ? solve_fast() : solve_oracle()), opt, out);
    return kExitOk;
  }
  const Solved f = solve_fast();
  const Solved o = solve_oracle();
  const bool agree = f.top == o.top && f.center == o.center && f.best == o.best;
  return emit_check(agree, render(f), render(o), text, opt, out);
}

int cmd_empty_rect(Mode mode, const Options& opt, const std::string& text, std::ostream& out) {
  const PointSet ps = parse_points(text);
  const auto render = [&](const EmptyRectResult& r) {
    Answer a = empty_rect_answer(r);
    if (opt.table) {
      const CompressedGrid cg = compress(ps);
      a.data["col_widths"] = cg.col_widths;
      a.data["row_heights"] = cg.row_heights;
      a.text += "col_widths: " + reals_text(cg.col_widths) + "\n";
      a.text += "row_heights: " + reals_text(cg.row_heights) + "\n";
    }
    return a;
  };
  if (mode != Mode::check) {
    emit(render(mode == Mode::solve ? max_empty_rectangle(ps) : oracle::empty_rectangle(ps)),
         opt, out);
    return kExitOk;
  }
  const EmptyRectResult f = max_empty_rectangle(ps);
  const EmptyRectResult o = oracle::empty_rectangle(ps);
  const bool inside = 0.0 <= f.x1 && f.x1 <= f.x2 && f.x2 <= ps.x_max && 0.0 <= f.y1 &&
                      f.y1 <= f.y2 && f.y2 <= ps.y_max;
  const bool agree = close(f.area, o.area) && f.degenerate == o.degenerate && inside &&
                     has_empty_interior(ps, f.x1, f.y1, f.x2, f.y2);
  return emit_check(agree, render(f), render(o), text, opt, out);
}

int cmd_perimeter(Mode mode, const Options& opt, const std::string& text, std::ostream& out) {
  const RealGrid b = parse_real_grid(text);
  const auto render = [&](const PerimeterResult& r) {
    Answer a = perimeter_answer(r);
    if (opt.table) {
      const ColumnPrefixSums s(b);
      json rows = json::array();
      a.text += "column_prefix_sums:\n";
      for (int i = 0; i <= s.rows(); ++i) {
        std::vector<double> row;
        for (int j = 1; j <= s.cols(); ++j) row.push_back(s(i, j));
        rows.push_back(row);
        a.text += reals_text(row) + "\n";
      }
      a.data["column_prefix_sums"] = std::move(rows);
    }
    return a;
  };
  if (mode != Mode::check) {
    emit(render(mode == Mode::solve ? max_perimeter_rectangle(b) : oracle::perimeter(b)), opt,
         out);
    return kExitOk;
  }
  const PerimeterResult f = max_perimeter_rectangle(b);
  const PerimeterResult o = oracle::perimeter(b);
  const bool agree =
      close(f.value, o.value) && close(perimeter_sum(b, f.l1, f.l2, f.c1, f.c2), f.value);
  return emit_check(agree, render(f), render(o), text, opt, out);
}

int cmd_depth(Mode mode, const Options& opt, const std::string& text, std::ostream& out) {
  const BinaryGrid g = parse_binary_grid(text);
  const ConnectivityConvention conv = convention(opt);
  const auto render = [&](const DepthResult& r) {
    Answer a = depth_answer(r, conv);
    if (opt.table) attach_table(a, "table", r.depth_table);
    return a;
  };
  if (mode != Mode::check) {
    const DepthResult r = mode == Mode::solve
                              ? analyze_depth(g, conv)
                              : summarize_depth(g, conv, oracle::depth(g, conv));
    emit(render(r), opt, out);
    return kExitOk;
  }
  const DepthResult f = analyze_depth(g, conv);
  const DepthResult o = summarize_depth(g, conv, oracle::depth(g, conv));
  return emit_check(f.depth_table == o.depth_table, render(f), render(o), text, opt, out);
}

BenchKind bench_kind(const std::string& problem, const Options& opt) {
  if (problem == "square") return *parse_bench_kind("square-" + opt.pattern);
  if (problem == "diamond") return *parse_bench_kind("diamond-" + opt.method);
  return *parse_bench_kind(problem);
}

json bench_json(const BenchResult& r) {
  return {{"kind", std::string(to_string(r.kind))},
          {"size", r.size},
          {"seed", r.seed},
          {"reps", r.reps},
          {"seconds", r.best_seconds},
          {"checksum", r.checksum}};
}

std::string bench_text(const BenchResult& r) {
  return "bench " + std::string(to_string(r.kind)) + " size=" + std::to_string(r.size) +
         " seed=" + std::to_string(r.seed) + " reps=" + std::to_string(r.reps) +
         " seconds=" + format_real(r.best_seconds) + "\n";
}

int cmd_bench(const std::string& problem, const Options& opt, std::ostream& out) {
  const BenchKind kind = bench_kind(problem, opt);
  const BenchResult small = run_bench(kind, opt.size, opt.seed, opt.reps);
  Answer a{bench_json(small), bench_text(small)};
  if (opt.doubling) {
    const BenchResult large = run_bench(kind, 2 * opt.size, opt.seed, opt.reps);
    const double ratio = large.best_seconds / std::max(small.best_seconds, 1e-9);
    const double predicted = doubling_ratio(kind);
    const bool consistent = ratio >= predicted / 3.0 && ratio <= predicted * 3.0;
    a.data = {{"small", bench_json(small)},
              {"large", bench_json(large)},
              {"ratio", ratio},
              {"predicted_ratio", predicted},
              {"consistent", consistent}};
    a.text += bench_text(large) + "ratio=" + format_real(ratio) +
              " predicted=" + format_real(predicted) +
              (consistent ? " consistent=yes\n" : " consistent=no\n");
  }
  emit(a, opt, out);
  return kExitOk;
}

void add_io_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--input", opt.input, "Input file (default: stdin)");
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--table", opt.table, "Also dump the full table");
}

void add_problem_options(const std::string& problem, CLI::App* cmd, Options& opt) {
  if (problem == "square") {
    cmd->add_option("--pattern", opt.pattern, "Square pattern")
        ->check(CLI::IsMember({"monotone", "chessboard", "identity"}));
  } else if (problem == "triangle") {
    cmd->add_option("--dir", opt.dir, "Triangle orientation")
        ->check(CLI::IsMember({"nw", "ne", "sw", "se"}));
  } else if (problem == "depth") {
    cmd->add_flag("--swap-connectivity", opt.swap_connectivity,
                  "Black uses 8-neighbour moves and white 4-neighbour moves");
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Optimal facility shapes and component depth on grid maps", "gridloc"};
  app.require_subcommand(1);
  Options opt;

  const std::vector<std::string> problems{"square", "diamond", "triangle",
                                          "empty-rect", "perimeter", "depth"};
  const std::map<std::string, std::string> blurbs{
      {"square", "Largest patterned square"},
      {"diamond", "Largest all-ones diamond"},
      {"triangle", "Largest all-ones right triangle in one orientation"},
      {"empty-rect", "Largest empty rectangle among points"},
      {"perimeter", "Maximum perimeter-sum subrectangle"},
      {"depth", "Depth of nested connected components"}};
  using Handler = std::function<int(const std::string&)>;
  std::vector<std::pair<CLI::App*, Handler>> leaves;

  const auto dispatch = [&](Mode mode, const std::string& problem) -> Handler {
    return [&, mode, problem](const std::string& text) {
      if (problem == "square") return cmd_square(mode, opt, text, out);
      if (problem == "diamond") return cmd_diamond(mode, opt, text, out);
      if (problem == "triangle") return cmd_triangle(mode, opt, text, out);
      if (problem == "empty-rect") return cmd_empty_rect(mode, opt, text, out);
      if (problem == "perimeter") return cmd_perimeter(mode, opt, text, out);
      return cmd_depth(mode, opt, text, out);
    };
  };

  for (const auto& p : problems) {
    CLI::App* cmd = app.add_subcommand(p, blurbs.at(p));
    add_io_options(cmd, opt);
    add_problem_options(p, cmd, opt);
    leaves.emplace_back(cmd, dispatch(Mode::solve, p));
  }
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference answer");
  CLI::App* check_cmd = app.add_subcommand("check", "Compare the fast algorithm with the oracle");
  for (auto [parent, mode] : {std::pair(oracle_cmd, Mode::oracle), std::pair(check_cmd, Mode::check)}) {
    parent->require_subcommand(1);
    for (const auto& p : problems) {
      CLI::App* cmd = parent->add_subcommand(p, blurbs.at(p));
      add_io_options(cmd, opt);
      add_problem_options(p, cmd, opt);
      leaves.emplace_back(cmd, dispatch(mode, p));
    }
  }

  CLI::App* bench_cmd = app.add_subcommand("bench", "Time a fast algorithm on random input");
  bench_cmd->require_subcommand(1);
  std::vector<std::pair<CLI::App*, std::string>> bench_leaves;
  for (const auto& p : problems) {
    CLI::App* cmd = bench_cmd->add_subcommand(p, blurbs.at(p));
    cmd->add_option("--size", opt.size, "Grid side, or point count for empty-rect")
        ->check(CLI::Range(2, 1 << 15));
    cmd->add_option("--seed", opt.seed, "Random seed");
    cmd->add_option("--reps", opt.reps, "Repetitions (fastest is reported)")
        ->check(CLI::Range(1, 1000));
    cmd->add_flag("--doubling", opt.doubling, "Also run at twice the size and report the ratio");
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    if (p == "square") {
      cmd->add_option("--pattern", opt.pattern, "Square pattern")
          ->check(CLI::IsMember({"monotone", "chessboard", "identity"}));
    } else if (p == "diamond") {
      cmd->add_option("--method", opt.method, "Diamond formulation")
          ->check(CLI::IsMember({"top", "center"}));
    }
    bench_leaves.emplace_back(cmd, p);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    for (auto& [cmd, problem] : bench_leaves)
      if (cmd->parsed()) return cmd_bench(problem, opt, out);
    for (auto& [cmd, handler] : leaves)
      if (cmd->parsed()) return handler(read_input(opt, in));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  err << app.help();
  return kExitError;
}

}  // namespace gridloc::cli
