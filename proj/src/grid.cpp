#include "gridloc/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace gridloc {

namespace {

// Grids beyond this many cells are rejected at parse time.
constexpr long long kMaxCells = 1LL << 28;

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

// Reads non-blank lines while tracking 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!is_blank(line)) return true;
    }
    return false;
  }

  int line_no() const { return line_no_; }

  void expect_end() {
    std::string rest;
    if (next(rest)) throw ParseError(line_no_, "unexpected trailing data");
  }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    pos = s.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos) break;
    std::size_t end = s.find_first_of(" \t\r", pos);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

long long parse_int_token(std::string_view tok, int line, const char* what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(tok) + "'");
  }
  return v;
}

double parse_real_token(std::string_view tok, int line) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a number, got '" + std::string(tok) + "'");
  }
  if (!std::isfinite(v)) {
    throw ParseError(line, "non-finite value '" + std::string(tok) + "'");
  }
  return v;
}

std::pair<int, int> parse_dimensions(LineReader& reader) {
  std::string line;
  if (!reader.next(line)) throw ParseError(reader.line_no() + 1, "empty input");
  auto toks = split_tokens(line);
  if (toks.size() != 2) {
    throw ParseError(reader.line_no(), "header must be 'm n'");
  }
  long long m = parse_int_token(toks[0], reader.line_no(), "row count");
  long long n = parse_int_token(toks[1], reader.line_no(), "column count");
  if (m < 1 || n < 1) {
    throw ParseError(reader.line_no(), "dimensions must be at least 1");
  }
  if (m * n > kMaxCells) {
    throw ParseError(reader.line_no(), "grid too large");
  }
  return {static_cast<int>(m), static_cast<int>(n)};
}

template <typename F>
std::string serialize_grid(int rows, int cols, const char* sep, F&& cell) {
  std::string out = std::to_string(rows) + " " + std::to_string(cols) + "\n";
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      if (j > 1) out += sep;
      out += cell(i, j);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

BinaryGrid invert(const BinaryGrid& g) {
  BinaryGrid out = g;
  for (auto& v : out.data()) v = static_cast<std::uint8_t>(1 - v);
  return out;
}

TableMax table_argmax(const ValueTable& t) {
  TableMax best{{1, 1}, t(1, 1)};
  for (int i = 1; i <= t.rows(); ++i)
    for (int j = 1; j <= t.cols(); ++j)
      if (t(i, j) > best.value) best = {{i, j}, t(i, j)};
  return best;
}

BinaryGrid parse_binary_grid(std::istream& in) {
  LineReader reader(in);
  auto [m, n] = parse_dimensions(reader);
  BinaryGrid g(m, n);
  std::string line;
  for (int i = 1; i <= m; ++i) {
    if (!reader.next(line)) {
      throw ParseError(reader.line_no() + 1, "missing row " + std::to_string(i) + " of " +
                                                 std::to_string(m));
    }
    int count = 0;
    for (char ch : line) {
      if (ch == ' ' || ch == '\t' || ch == '\r') continue;
      if (ch != '0' && ch != '1') {
        throw ParseError(reader.line_no(), std::string("illegal character '") + ch + "'");
      }
      ++count;
      if (count <= n) g(i, count) = static_cast<std::uint8_t>(ch - '0');
    }
    if (count != n) {
      throw ParseError(reader.line_no(), "row " + std::to_string(i) + " has " +
                                             std::to_string(count) + " cells, expected " +
                                             std::to_string(n));
    }
  }
  reader.expect_end();
  return g;
}

BinaryGrid parse_binary_grid(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_binary_grid(in);
}

RealGrid parse_real_grid(std::istream& in) {
  LineReader reader(in);
  auto [m, n] = parse_dimensions(reader);
  RealGrid g(m, n);
  std::string line;
  for (int i = 1; i <= m; ++i) {
    if (!reader.next(line)) {
      throw ParseError(reader.line_no() + 1, "missing row " + std::to_string(i) + " of " +
                                                 std::to_string(m));
    }
    auto toks = split_tokens(line);
    if (static_cast<int>(toks.size()) != n) {
      throw ParseError(reader.line_no(), "row " + std::to_string(i) + " has " +
                                             std::to_string(toks.size()) +
                                             " values, expected " + std::to_string(n));
    }
    for (int j = 1; j <= n; ++j) g(i, j) = parse_real_token(toks[j - 1], reader.line_no());
  }
  reader.expect_end();
  return g;
}

RealGrid parse_real_grid(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_real_grid(in);
}

PointSet parse_points(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) throw ParseError(1, "empty input");
  auto header = split_tokens(line);
  if (header.size() != 3) throw ParseError(reader.line_no(), "header must be 'n Xmax Ymax'");
  long long count = parse_int_token(header[0], reader.line_no(), "point count");
  if (count < 0) throw ParseError(reader.line_no(), "point count must be nonnegative");
  PointSet ps;
  ps.x_max = parse_real_token(header[1], reader.line_no());
  ps.y_max = parse_real_token(header[2], reader.line_no());
  if (ps.x_max < 0 || ps.y_max < 0) {
    throw ParseError(reader.line_no(), "Xmax and Ymax must be nonnegative");
  }
  ps.points.reserve(static_cast<std::size_t>(std::min<long long>(count, 1 << 20)));
  for (long long k = 0; k < count; ++k) {
    if (!reader.next(line)) {
      throw ParseError(reader.line_no() + 1, "expected " + std::to_string(count) +
                                                 " points, found " + std::to_string(k));
    }
    auto toks = split_tokens(line);
    if (toks.size() != 2) throw ParseError(reader.line_no(), "point must be 'x y'");
    Point p{parse_real_token(toks[0], reader.line_no()),
            parse_real_token(toks[1], reader.line_no())};
    if (p.x < 0 || p.x > ps.x_max) {
      throw ParseError(reader.line_no(), "x=" + format_real(p.x) + " outside [0, " +
                                             format_real(ps.x_max) + "]");
    }
    if (p.y < 0 || p.y > ps.y_max) {
      throw ParseError(reader.line_no(), "y=" + format_real(p.y) + " outside [0, " +
                                             format_real(ps.y_max) + "]");
    }
    ps.points.push_back(p);
  }
  reader.expect_end();
  return ps;
}

PointSet parse_points(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_points(in);
}

std::string serialize(const BinaryGrid& g) {
  return serialize_grid(g.rows(), g.cols(), "",
                        [&](int i, int j) { return std::string(1, char('0' + g(i, j))); });
}

std::string serialize(const RealGrid& g) {
  return serialize_grid(g.rows(), g.cols(), " ",
                        [&](int i, int j) { return format_real(g(i, j)); });
}

std::string serialize(const ValueTable& t) {
  return serialize_grid(t.rows(), t.cols(), " ",
                        [&](int i, int j) { return std::to_string(t(i, j)); });
}

std::string serialize(const PointSet& ps) {
  std::string out = std::to_string(ps.points.size()) + " " + format_real(ps.x_max) + " " +
                    format_real(ps.y_max) + "\n";
  for (const auto& p : ps.points) out += format_real(p.x) + " " + format_real(p.y) + "\n";
  return out;
}

std::string format_real(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

}  // namespace gridloc
