#include "gegenbauer/shift.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gegenbauer/error.hpp"
#include "gegenbauer/measure.hpp"

namespace gegenbauer {

QuadratureSpec inner_spec() { return QuadratureSpec{}.with_tol(1e-10, 1e-8); }
QuadratureSpec outer_spec() { return QuadratureSpec{}.with_tol(1e-10, 1e-6); }

double shift_apply(const GegenbauerParams& p, const TestFunction& f, double t, double x, const QuadratureSpec& spec) {
  require(std::isfinite(t) && t >= 0.0, "shift needs t >= 0");
  require(std::isfinite(x) && x >= 0.0, "shift needs x >= 0");
  if (f.constant) return *f.constant;
  if (t == 0.0) return f.at_x(x);
  if (x == 0.0) return f.at_x(t);
  const double lo = std::abs(x - t), hi = x + t;
  if (f.support && (hi <= f.support->first || lo >= f.support->second)) return 0.0;

  // y - 1 = 2 sh^2((x-t)/2) + 2 sh x sh t sin^2(phi/2); the half [pi/2, pi] is
  // folded onto [0, pi/2] through phi -> pi - phi.
  const double sh_minus = std::sinh(0.5 * (x - t));
  const double sh_plus = std::sinh(0.5 * (x + t));
  const double base_lo = 2.0 * sh_minus * sh_minus;
  const double base_hi = 2.0 * sh_plus * sh_plus;
  const double coef = 2.0 * std::sinh(x) * std::sinh(t);
  auto to_s = [](double d) { return std::log1p(d + std::sqrt(d * (d + 2.0))); };

  std::vector<double> bps;
  for (double b : f.features()) {
    if (b <= lo || b >= hi) continue;
    const double shb = std::sinh(0.5 * b);
    const double v = std::clamp((2.0 * shb * shb - base_lo) / coef, 0.0, 1.0);
    const double phi = 2.0 * std::asin(std::sqrt(v));
    bps.push_back(std::min(phi, M_PI - phi));
  }

  const double beta = 2.0 * p.lambda() - 1.0;
  auto g = [&](double phi) {
    const double sn = std::sin(0.5 * phi);
    const double cs = std::cos(0.5 * phi);
    const double val = f.at_x(to_s(base_lo + coef * sn * sn)) + f.at_x(to_s(base_hi - coef * sn * sn));
    if (val == 0.0 || beta == 0.0) return val;
    // sin(phi) / phi, from the half angle to keep full precision near 0.
    const double ratio = phi > 0.0 ? 2.0 * sn * cs / phi : 1.0;
    return val * std::pow(ratio, beta);
  };
  const auto r = integrate_singular(g, 0.0, 0.5 * M_PI, spec.with_singularity(beta, 0.0), bps);
  return p.shift_normalisation() * r.value;
}

double shift_average_integral(const GegenbauerParams& p, const TestFunction& f, double x, double r) {
  require(std::isfinite(r) && r > 0.0, "shift average needs r > 0");
  require(std::isfinite(x) && x >= 0.0, "shift average needs x >= 0");
  const TestFunction fa = abs_of(f);
  return weighted_integral(p, [&](double t) { return shift_apply(p, fa, t, x); }, 0.0, r, outer_spec(),
                           shifted_features(fa, x))
      .value;
}

double inner_profile_full(const GegenbauerParams& p) {
  const double l = p.lambda();
  return std::sqrt(M_PI) * std::tgamma(l) / std::tgamma(l + 0.5);
}

namespace {

// Integral of (1 - u^2)^(lambda - 1) over [-1, -1 + v], 0 <= v <= 1.
double profile_from_minus_one(const GegenbauerParams& p, double v) {
  if (v <= 0.0) return 0.0;
  const double l = p.lambda();
  const auto r = integrate_singular([&](double w) { return std::pow(2.0 - w, l - 1.0); }, 0.0, v,
                                    inner_spec().with_singularity(l - 1.0, 0.0));
  return r.value;
}

// A(x, ch s, r) with 1 + U and 1 - U formed without cancellation.
double profile_s(const GegenbauerParams& p, double x, double s, double r) {
  const double den = std::sinh(s) * std::sinh(x);
  const double one_plus = 2.0 * std::sinh(0.5 * (r + x - s)) * std::sinh(0.5 * (r - x + s)) / den;
  const double one_minus = 2.0 * std::sinh(0.5 * (x + s + r)) * std::sinh(0.5 * (x + s - r)) / den;
  if (one_plus <= 0.0) return 0.0;
  if (one_minus <= 0.0) return inner_profile_full(p);
  if (one_plus <= 1.0) return profile_from_minus_one(p, one_plus);
  return inner_profile_full(p) - profile_from_minus_one(p, std::min(one_minus, 1.0));
}

}  // namespace

double inner_profile_upper_limit(double x, double z, double r) {
  return (std::cosh(r) - z * std::cosh(x)) / (std::sqrt(z * z - 1.0) * std::sinh(x));
}

double inner_profile(const GegenbauerParams& p, double x, double z, double r) {
  require(std::isfinite(x) && x > 0.0, "inner profile needs x > 0");
  require(std::isfinite(r) && r > 0.0, "inner profile needs r > 0");
  require(std::isfinite(z) && z > 1.0, "inner profile needs z > 1");
  const double lo = x <= r ? 1.0 : std::cosh(x - r);
  const double hi = std::cosh(x + r);
  if (z < lo * (1.0 - 1e-12) || z > hi * (1.0 + 1e-12))
    fail(ErrorKind::invalid_argument, "z outside the admissible window of the inner profile");
  return profile_s(p, x, std::acosh(z), r);
}

double shift_average_kernel_form(const GegenbauerParams& p, const TestFunction& f, double x, double r) {
  require(std::isfinite(x) && x > 0.0, "kernel form needs x > 0");
  require(std::isfinite(r) && r > 0.0, "kernel form needs r > 0");
  const TestFunction fa = abs_of(f);
  const double l = p.lambda();
  const double s_lo = x <= r ? 0.0 : x - r;
  const double s_hi = x + r;
  std::vector<double> bps = fa.features();
  if (x < r) bps.push_back(r - x);
  auto g = [&](double s) {
    const double v = fa.at_x(s);
    if (v == 0.0) return 0.0;
    const double weight = s_lo == 0.0 ? std::pow(s > 0.0 ? std::sinh(s) / s : 1.0, 2.0 * l)
                                      : std::pow(std::sinh(s), 2.0 * l);
    return v * weight * profile_s(p, x, s, r) / std::pow(s_hi - s, l);
  };
  QuadratureSpec spec = outer_spec().with_singularity(s_lo == 0.0 ? 2.0 * l : 0.0, l);
  const auto res = integrate_singular(g, s_lo, s_hi, spec, bps);
  return p.shift_normalisation() * res.value;
}

namespace {

double shifted_lp(const GegenbauerParams& p, const TestFunction& f, double t, double p_exp, bool difference) {
  require(std::isfinite(t) && t >= 0.0, "shift norm needs t >= 0");
  require(p_exp >= 1.0, "norm exponent must be >= 1");
  const double X = truncation_extent(f) + t;
  auto value = [&](double x) {
    const double a = shift_apply(p, f, t, x);
    return std::abs(difference ? a - f.at_x(x) : a);
  };
  std::vector<double> bps = f.features();
  const auto sf = shifted_features(f, t);
  bps.insert(bps.end(), sf.begin(), sf.end());
  if (std::isinf(p_exp)) {
    double m = 0.0;
    const int n = 2000;
    for (int i = 0; i <= n; ++i) m = std::max(m, value(X * i / n));
    for (double b : bps)
      if (b < X) m = std::max(m, value(b));
    return m;
  }
  const auto r = weighted_integral(p, [&](double x) { return std::pow(value(x), p_exp); }, 0.0, X, outer_spec(), bps);
  return std::pow(r.value, 1.0 / p_exp);
}

}  // namespace

double shift_modulus(const GegenbauerParams& p, const TestFunction& f, double t, double p_exp) {
  if (t == 0.0 || f.constant) return 0.0;
  return shifted_lp(p, f, t, p_exp, true);
}

double shifted_norm(const GegenbauerParams& p, const TestFunction& f, double t, double p_exp) {
  return shifted_lp(p, f, t, p_exp, false);
}

}  // namespace gegenbauer
