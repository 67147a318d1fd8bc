#include "gegenbauer/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <sstream>

#include "gegenbauer/error.hpp"
#include "gegenbauer/quadrature.hpp"

namespace gegenbauer {

namespace {

constexpr long kTermBudget = 1000000;

bool non_positive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

struct LogValue {
  double log_abs = -INFINITY;  // -inf encodes an exact zero
  int sign = 1;
};

// log of prod Gamma(num) / prod Gamma(den); zero if a denominator sits on a pole.
LogValue log_gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den) {
  LogValue out{0.0, 1};
  for (double d : den) {
    if (non_positive_integer(d)) return LogValue{};
    int s = 1;
    out.log_abs -= log_gamma(d, &s);
    out.sign *= s;
  }
  for (double n : num) {
    if (non_positive_integer(n)) fail(ErrorKind::divergent, "Gamma pole in hypergeometric connection coefficient");
    int s = 1;
    out.log_abs += log_gamma(n, &s);
    out.sign *= s;
  }
  return out;
}

double gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den) {
  const LogValue v = log_gamma_ratio(num, den);
  return v.sign * std::exp(v.log_abs);
}

// exp(log_scale) * 2F1(a, b; c; 1 - w) for small w > 0 through the connection
// formula at z = 1. The scale is folded into the Gamma coefficients before
// exponentiating, which keeps large-parameter cases finite.
double near_one(double a, double b, double c, double w, double log_scale = 0.0) {
  const double s = c - a - b;
  const LogValue c1 = log_gamma_ratio({c, s}, {c - a, c - b});
  const LogValue c2 = log_gamma_ratio({c, -s}, {a, b});
  const double t1 = c1.sign * std::exp(log_scale + c1.log_abs) * hyp2f1::series(a, b, 1.0 - s, w);
  const double t2 =
      c2.sign * std::exp(log_scale + c2.log_abs + s * std::log(w)) * hyp2f1::series(c - a, c - b, 1.0 + s, w);
  return t1 + t2;
}

bool integer_like(double s) { return std::abs(s - std::nearbyint(s)) < 1e-6; }

}  // namespace

double log_gamma(double x, int* sign) {
  if (non_positive_integer(x)) fail(ErrorKind::invalid_argument, "Gamma pole");
  int s = 1;
  const double v = ::lgamma_r(x, &s);
  if (sign) *sign = s;
  return v;
}

double gamma_fn(double x) {
  if (!(x > 0.0)) {
    std::ostringstream os;
    os << "gamma_fn needs a positive argument, got " << x;
    fail(ErrorKind::invalid_argument, os.str());
  }
  return std::tgamma(x);
}

double reciprocal_gamma(double x) {
  if (non_positive_integer(x)) return 0.0;
  int s = 1;
  const double l = log_gamma(x, &s);
  return s * std::exp(-l);
}

namespace hyp2f1 {

double series(double a, double b, double c, double z) {
  if (non_positive_integer(c)) fail(ErrorKind::divergent, "2F1 with c a non-positive integer");
  const bool terminating = non_positive_integer(a) || non_positive_integer(b);
  if (!terminating && !(std::abs(z) < 1.0)) fail(ErrorKind::divergent, "2F1 series needs |z| < 1");
  double term = 1.0;
  double sum = 1.0;
  for (long n = 0; n < kTermBudget; ++n) {
    const double ratio = (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    term *= ratio;
    sum += term;
    if (term == 0.0) return sum;
    const double rho = std::max(std::abs(ratio), std::abs(z));
    if (rho < 1.0 && std::abs(term) * rho / (1.0 - rho) <= 1e-17 * std::abs(sum)) return sum;
  }
  fail(ErrorKind::tolerance_not_met, "2F1 series did not converge within the term budget");
}

double euler(double a, double b, double c, double z) {
  require(z < 1.0, "Euler transformation needs z < 1");
  return std::pow(1.0 - z, c - a - b) * series(c - a, c - b, c, z);
}

}  // namespace hyp2f1

double gauss_2f1(double a, double b, double c, double z) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z))
    fail(ErrorKind::invalid_argument, "2F1 arguments must be finite");
  if (non_positive_integer(c)) fail(ErrorKind::divergent, "2F1 with c a non-positive integer");
  if (z == 0.0) return 1.0;
  if (non_positive_integer(a) || non_positive_integer(b)) return hyp2f1::series(a, b, c, z);
  if (z > 1.0) fail(ErrorKind::divergent, "2F1 argument beyond 1");
  if (z == 1.0) {
    if (!(c - a - b > 0.0)) fail(ErrorKind::divergent, "2F1 at z = 1 needs c - a - b > 0");
    return gamma_ratio({c, c - a - b}, {c - a, c - b});
  }
  if (z < 0.0) return std::pow(1.0 - z, -a) * gauss_2f1(a, c - b, c, z / (z - 1.0));
  if (z > 0.9 && !integer_like(c - a - b)) return near_one(a, b, c, 1.0 - z);
  return hyp2f1::series(a, b, c, z);
}

namespace {

double legendre_p_direct(double lambda, double gamma, double x) {
  const double a = 0.5 * gamma + lambda;
  const double b = a + 0.5;
  const double c = gamma + lambda + 1.0;
  const double log2ch = x + std::log1p(std::exp(-2.0 * x));
  const double log_pref = log_gamma(gamma + 2.0 * lambda) - log_gamma(gamma) - log_gamma(c) +
                          std::log(std::cos(M_PI * lambda)) - (gamma + 2.0 * lambda) * log2ch;
  const double z = 1.0 / (std::cosh(x) * std::cosh(x));
  if (z > 0.9 && !integer_like(c - a - b)) {
    const double th = std::tanh(x);
    return near_one(a, b, c, th * th, log_pref);
  }
  return std::exp(log_pref) * gauss_2f1(a, b, c, z);
}

}  // namespace

double legendre_p(const GegenbauerParams& p, double gamma, double x) {
  require(std::isfinite(gamma) && gamma >= 1.0, "legendre_p needs gamma >= 1");
  require(std::isfinite(x) && x >= 0.0, "legendre_p needs x >= 0");
  const double lambda = p.lambda();
  if (x < kLegendreXMin) {
    const double p1 = legendre_p_direct(lambda, gamma, kLegendreXMin);
    const double p2 = legendre_p_direct(lambda, gamma, 2.0 * kLegendreXMin);
    return p1 + (x - kLegendreXMin) * (p2 - p1) / kLegendreXMin;
  }
  return legendre_p_direct(lambda, gamma, x);
}

double heat_kernel(const GegenbauerParams& p, double r, double x) {
  require(std::isfinite(r) && r > 0.0, "heat_kernel needs r > 0");
  require(std::isfinite(x) && x >= 0.0, "heat_kernel needs x >= 0");
  const double lambda = p.lambda();
  const double delta0 = 0.1;
  auto multiplier = [&](double g) { return std::exp(-g * (g + 2.0 * lambda) * r) * legendre_p(p, g, x); };
  QuadratureSpec spec = QuadratureSpec{}.with_tol(1e-14, 1e-10);
  spec.beta_left = lambda - 0.5;
  const auto near = integrate_singular([&](double g) { return multiplier(g) * std::pow(g + 1.0, lambda - 0.5); },
                                       1.0, 1.0 + delta0, spec);
  QuadratureSpec far = QuadratureSpec{}.with_tol(1e-14, 1e-10);
  const double kappa = x + 2.2 * r;
  far.truncation.cutoff = 1.0 + delta0 + std::min(4.0 + 4.0 / std::sqrt(r), 30.0 / kappa);
  far.truncation.tail_bound_exponent = kappa;
  far.truncation.tail_tol = 1e-15;
  const auto tail = integrate_semi_infinite(
      [&](double g) { return multiplier(g) * std::pow(g * g - 1.0, lambda - 0.5); }, 1.0 + delta0, far);
  return near.value + tail.value;
}

double heat_kernel_bound(const GegenbauerParams& p, double r, double x) {
  const double lambda = p.lambda();
  return std::tgamma(lambda + 0.5) * std::exp(-r) * std::pow(std::cosh(x), -2.0 * lambda - 1.0);
}

double apply_G(const GegenbauerParams& p, const std::function<double(double)>& f, double x, double h) {
  const double y = std::cosh(x);
  require(std::isfinite(h) && h > 0.0, "apply_G step must be positive");
  if (!(y - 2.0 * h > 1.0)) fail(ErrorKind::invalid_argument, "apply_G stencil leaves the domain y > 1");
  const double lambda = p.lambda();
  auto w = [&](double u) { return std::pow(u * u - 1.0, lambda + 0.5); };
  const double f0 = f(y);
  const double flux = w(y + 0.5 * h) * (f(y + h) - f0) - w(y - 0.5 * h) * (f0 - f(y - h));
  return std::pow(y * y - 1.0, 0.5 - lambda) * flux / (h * h);
}

double apply_G(const GegenbauerParams& p, const std::function<double(double)>& f, double x) {
  return apply_G(p, f, x, 1e-3 * std::max(1.0, std::cosh(x)));
}

}  // namespace gegenbauer
