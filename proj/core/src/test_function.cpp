#include "gegenbauer/test_function.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "gegenbauer/error.hpp"

namespace gegenbauer {

namespace {

std::string fmt_num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void check_window(double a, double b, const char* what) {
  require(std::isfinite(a) && std::isfinite(b) && a >= 0.0 && a < b, std::string(what) + " needs 0 <= a < b");
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      fail(ErrorKind::invalid_argument, "bad number '" + item + "' in test function spec");
    }
    if (used != item.size()) fail(ErrorKind::invalid_argument, "bad number '" + item + "' in test function spec");
    out.push_back(v);
  }
  return out;
}

}  // namespace

double arcch(double y) {
  if (!(y >= 1.0)) {
    if (y > 1.0 - 1e-12) return 0.0;
    fail(ErrorKind::invalid_argument, "argument below 1 in arcch");
  }
  return std::acosh(y);
}

std::vector<double> TestFunction::features() const {
  std::vector<double> out = breakpoints;
  if (support) {
    out.push_back(support->first);
    out.push_back(support->second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TestFunction bump(double a, double b) {
  check_window(a, b, "bump");
  TestFunction f;
  f.name = "bump(" + fmt_num(a) + "," + fmt_num(b) + ")";
  f.of_x = [a, b](double s) {
    if (s <= a || s >= b) return 0.0;
    const double u = (2.0 * s - a - b) / (b - a);
    return std::exp(1.0 - 1.0 / (1.0 - u * u));
  };
  f.support = {{a, b}};
  f.nonnegative = true;
  return f;
}

TestFunction exp_decay(double kappa) {
  require(std::isfinite(kappa) && kappa > 0.0, "exp_decay needs kappa > 0");
  TestFunction f;
  f.name = "exp_decay(" + fmt_num(kappa) + ")";
  f.of_x = [kappa](double s) { return std::exp(-kappa * s); };
  f.decay = kappa;
  f.nonnegative = true;
  return f;
}

TestFunction indicator(double a, double b) {
  check_window(a, b, "indicator");
  TestFunction f;
  f.name = "indicator(" + fmt_num(a) + "," + fmt_num(b) + ")";
  f.of_x = [a, b](double s) { return (s >= a && s <= b) ? 1.0 : 0.0; };
  f.support = {{a, b}};
  f.breakpoints = {a, b};
  f.nonnegative = true;
  return f;
}

TestFunction identity_function() {
  TestFunction f;
  f.name = "identity";
  f.of_x = [](double s) { return std::cosh(s); };
  f.nonnegative = true;
  return f;
}

TestFunction constant_function(double value) {
  require(std::isfinite(value), "constant must be finite");
  TestFunction f;
  f.name = value == 0.0 ? "zero" : value == 1.0 ? "constant_one" : "constant(" + fmt_num(value) + ")";
  f.of_x = [value](double) { return value; };
  f.constant = value;
  if (value == 0.0) f.support = {{0.0, 0.0}};
  f.nonnegative = value >= 0.0;
  return f;
}

TestFunction power_kernel(double exponent) {
  require(std::isfinite(exponent), "power exponent must be finite");
  TestFunction f;
  f.name = "power(" + fmt_num(exponent) + ")";
  f.of_x = [exponent](double s) { return std::pow(std::sinh(s), exponent); };
  if (exponent < 0.0) f.decay = -exponent;
  f.nonnegative = true;
  return f;
}

TestFunction scaled(const TestFunction& f, double c) {
  require(std::isfinite(c), "scale must be finite");
  TestFunction g = f;
  g.name = fmt_num(c) + "*" + f.name;
  auto inner = f.of_x;
  g.of_x = [inner, c](double s) { return c * inner(s); };
  if (f.constant) g.constant = c * *f.constant;
  g.nonnegative = f.nonnegative && c >= 0.0;
  return g;
}

TestFunction sum(const TestFunction& f, const TestFunction& g) {
  TestFunction h;
  h.name = f.name + "+" + g.name;
  auto a = f.of_x, b = g.of_x;
  h.of_x = [a, b](double s) { return a(s) + b(s); };
  if (f.support && g.support)
    h.support = {{std::min(f.support->first, g.support->first), std::max(f.support->second, g.support->second)}};
  const double fd = f.support ? INFINITY : f.decay.value_or(-1.0);
  const double gd = g.support ? INFINITY : g.decay.value_or(-1.0);
  if (!h.support && std::min(fd, gd) > 0.0) h.decay = std::min(fd, gd);
  h.breakpoints = f.breakpoints;
  h.breakpoints.insert(h.breakpoints.end(), g.breakpoints.begin(), g.breakpoints.end());
  if (f.constant && g.constant) h.constant = *f.constant + *g.constant;
  h.nonnegative = f.nonnegative && g.nonnegative;
  return h;
}

TestFunction abs_of(const TestFunction& f) {
  if (f.nonnegative) return f;
  TestFunction g = f;
  g.name = "|" + f.name + "|";
  auto inner = f.of_x;
  g.of_x = [inner](double s) { return std::abs(inner(s)); };
  if (f.constant) g.constant = std::abs(*f.constant);
  g.nonnegative = true;
  return g;
}

TestFunction restricted(const TestFunction& f, double lo, double hi) {
  require(std::isfinite(lo) && std::isfinite(hi) && lo >= 0.0 && lo <= hi, "restriction needs 0 <= lo <= hi");
  TestFunction g;
  g.name = f.name + "|[" + fmt_num(lo) + "," + fmt_num(hi) + "]";
  auto inner = f.of_x;
  auto c = f.constant;
  g.of_x = [inner, c, lo, hi](double s) {
    if (s < lo || s > hi) return 0.0;
    return c ? *c : inner(s);
  };
  double a = lo, b = hi;
  if (f.support) {
    a = std::max(a, f.support->first);
    b = std::min(b, f.support->second);
  }
  if (b < a) b = a;
  g.support = {{a, b}};
  g.breakpoints = f.breakpoints;
  g.breakpoints.push_back(lo);
  g.breakpoints.push_back(hi);
  g.nonnegative = f.nonnegative;
  return g;
}

TestFunction parse_test_function(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string key = spec.substr(0, colon);
  const auto args = colon == std::string::npos ? std::vector<double>{} : parse_numbers(spec.substr(colon + 1));
  auto want = [&](std::size_t n) {
    if (args.size() != n)
      fail(ErrorKind::invalid_argument, "test function '" + key + "' takes " + std::to_string(n) + " argument(s)");
  };
  if (key == "bump") {
    want(2);
    return bump(args[0], args[1]);
  }
  if (key == "exp_decay") {
    want(1);
    return exp_decay(args[0]);
  }
  if (key == "indicator") {
    want(2);
    return indicator(args[0], args[1]);
  }
  if (key == "power") {
    want(1);
    return power_kernel(args[0]);
  }
  if (key == "identity") {
    want(0);
    return identity_function();
  }
  if (key == "constant_one") {
    want(0);
    return constant_one();
  }
  if (key == "zero") {
    want(0);
    return zero_function();
  }
  if (key == "constant") {
    want(1);
    return constant_function(args[0]);
  }
  fail(ErrorKind::invalid_argument, "unknown test function '" + key + "'");
}

double truncation_extent(const TestFunction& f, double tail_tol) {
  if (f.support) return f.support->second + 1.0;
  if (f.decay && *f.decay > 0.0) return -std::log(tail_tol) / *f.decay + 1.0;
  fail(ErrorKind::divergent, "no support or decay hint for " + f.name + "; norm may diverge");
}

std::vector<double> shifted_features(const TestFunction& f, double x) {
  std::vector<double> out;
  for (double b : f.features()) {
    for (double t : {x + b, x - b, b - x})
      if (t > 0.0) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GridFunction::GridFunction(std::vector<double> xs, std::vector<double> vs, Interpolation mode)
    : x_grid(std::move(xs)), values(std::move(vs)), interpolation(mode) {
  require(!x_grid.empty() && x_grid.size() == values.size(), "grid and values must be non-empty and equal length");
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    require(std::isfinite(x_grid[i]) && x_grid[i] >= 0.0, "grid points must be finite and >= 0");
    if (!std::isfinite(values[i])) fail(ErrorKind::non_finite, "grid function value is not finite");
    if (i > 0) require(x_grid[i] > x_grid[i - 1], "grid must be strictly increasing");
  }
}

double GridFunction::at_x(double s) const {
  if (interpolation == Interpolation::none) {
    const auto it = std::lower_bound(x_grid.begin(), x_grid.end(), s);
    if (it == x_grid.end() || *it != s) fail(ErrorKind::invalid_argument, "grid function without interpolation queried off-grid");
    return values[static_cast<std::size_t>(it - x_grid.begin())];
  }
  if (s <= x_grid.front()) return values.front();
  if (s >= x_grid.back()) return values.back();
  const auto it = std::upper_bound(x_grid.begin(), x_grid.end(), s);
  const std::size_t j = static_cast<std::size_t>(it - x_grid.begin());
  const double w = (s - x_grid[j - 1]) / (x_grid[j] - x_grid[j - 1]);
  return values[j - 1] + w * (values[j] - values[j - 1]);
}

bool GridFunction::is_constant() const {
  return std::all_of(values.begin(), values.end(), [&](double v) { return v == values.front(); });
}

TestFunction GridFunction::as_test_function(const std::string& name) const {
  TestFunction f;
  f.name = name;
  auto self = std::make_shared<GridFunction>(*this);
  f.of_x = [self](double s) { return self->at_x(s); };
  if (is_constant()) f.constant = values.front();
  f.nonnegative = std::all_of(values.begin(), values.end(), [](double v) { return v >= 0.0; });
  return f;
}

}  // namespace gegenbauer
