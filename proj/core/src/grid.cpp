#include "gegenbauer/grid.hpp"

#include <cmath>
#include <sstream>

#include "gegenbauer/error.hpp"

namespace gegenbauer {

namespace {

double number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    fail(ErrorKind::invalid_argument, "bad number '" + s + "' in grid spec");
  }
  if (used != s.size() || !std::isfinite(v)) fail(ErrorKind::invalid_argument, "bad number '" + s + "' in grid spec");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int count_of(const std::string& s) {
  const double v = number(s);
  if (v != std::floor(v) || v < 2 || v > 1e6) fail(ErrorKind::invalid_argument, "grid count must be an integer >= 2");
  return static_cast<int>(v);
}

void check_increasing(const std::vector<double>& g) {
  require(!g.empty(), "empty grid");
  for (std::size_t i = 1; i < g.size(); ++i) require(g[i] > g[i - 1], "grid must be strictly increasing");
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int count) {
  require(count >= 2 && lo < hi, "linspace needs lo < hi and count >= 2");
  std::vector<double> g(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  g.back() = hi;
  return g;
}

std::vector<double> logspace(double lo, double hi, int count) {
  require(count >= 2 && lo > 0.0 && lo < hi, "logspace needs 0 < lo < hi and count >= 2");
  std::vector<double> g(static_cast<std::size_t>(count));
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < count; ++i) g[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (count - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> parse_grid(const std::string& text) {
  const auto parts = split(text, ':');
  std::vector<double> g;
  if (parts.size() == 4 && (parts[0] == "lin" || parts[0] == "log")) {
    const double lo = number(parts[1]), hi = number(parts[2]);
    const int n = count_of(parts[3]);
    g = parts[0] == "lin" ? linspace(lo, hi, n) : logspace(lo, hi, n);
  } else if (parts.size() == 3) {
    const double lo = number(parts[0]), hi = number(parts[1]), step = number(parts[2]);
    require(step > 0.0 && lo <= hi, "range grid needs lo <= hi and step > 0");
    const double n = std::floor((hi - lo) / step + 1e-9);
    require(n <= 1e6, "range grid too large");
    for (int i = 0; i <= static_cast<int>(n); ++i) g.push_back(lo + i * step);
  } else if (parts.size() == 1) {
    for (const auto& s : split(text, ',')) g.push_back(number(s));
  } else {
    fail(ErrorKind::invalid_argument, "unrecognised grid spec '" + text + "'");
  }
  check_increasing(g);
  return g;
}

std::vector<double> refine_grid(const std::vector<double>& grid, bool geometric) {
  check_increasing(grid);
  std::vector<double> out;
  out.reserve(2 * grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0) {
      const double a = grid[i - 1], b = grid[i];
      out.push_back(geometric && a > 0.0 ? std::sqrt(a * b) : 0.5 * (a + b));
    }
    out.push_back(grid[i]);
  }
  return out;
}

}  // namespace gegenbauer
