#include "gegenbauer/measure.hpp"

#include <cmath>

#include "gegenbauer/error.hpp"

namespace gegenbauer {

WeightedInterval::WeightedInterval(double x, double r) : center(x), radius(r) {
  require(std::isfinite(x) && x >= 0.0, "interval center must be >= 0");
  require(std::isfinite(r) && r > 0.0, "interval radius must be > 0");
}

std::pair<double, double> WeightedInterval::endpoints() const {
  return {std::max(center - radius, 0.0), center + radius};
}

IntegralResult weighted_integral(const GegenbauerParams& p, const std::function<double(double)>& g, double a,
                                 double b, const QuadratureSpec& spec, const std::vector<double>& breakpoints) {
  const double two_l = 2.0 * p.lambda();
  if (a == 0.0) {
    QuadratureSpec s = spec.with_singularity(two_l, 0.0);
    return integrate_singular(
        [&](double t) {
          const double ratio = t > 0.0 ? std::sinh(t) / t : 1.0;
          return g(t) * std::pow(ratio, two_l);
        },
        a, b, s, breakpoints);
  }
  return integrate_finite([&](double t) { return g(t) * std::pow(std::sinh(t), two_l); }, a, b,
                          spec.with_singularity(0.0, 0.0), breakpoints);
}

IntegralResult weighted_integral_to_infinity(const GegenbauerParams& p, const std::function<double(double)>& g,
                                             double a, const QuadratureSpec& spec,
                                             const std::vector<double>& breakpoints) {
  const double two_l = 2.0 * p.lambda();
  if (a == 0.0) {
    QuadratureSpec s = spec.with_singularity(two_l, 0.0);
    return integrate_semi_infinite(
        [&](double t) {
          const double ratio = t > 0.0 ? std::sinh(t) / t : 1.0;
          return g(t) * std::pow(ratio, two_l);
        },
        a, s, breakpoints);
  }
  return integrate_semi_infinite([&](double t) { return g(t) * std::pow(std::sinh(t), two_l); }, a,
                                 spec.with_singularity(0.0, 0.0), breakpoints);
}

std::vector<double> cumulative_weighted_integrals(const GegenbauerParams& p, const std::function<double(double)>& g,
                                                  const std::vector<double>& radii, const QuadratureSpec& spec,
                                                  const std::vector<double>& breakpoints) {
  std::vector<double> out;
  out.reserve(radii.size());
  double prev = 0.0, acc = 0.0;
  for (double r : radii) {
    require(std::isfinite(r) && r > prev, "radii must be positive and increasing");
    acc += weighted_integral(p, g, prev, r, spec, breakpoints).value;
    out.push_back(acc);
    prev = r;
  }
  return out;
}

IntegralResult ball_measure_with_error(const GegenbauerParams& p, const WeightedInterval& iv) {
  const auto [a, b] = iv.endpoints();
  return weighted_integral(p, [](double) { return 1.0; }, a, b, QuadratureSpec{}.with_tol(1e-15, 1e-12));
}

double ball_measure(const GegenbauerParams& p, const WeightedInterval& iv) {
  return ball_measure_with_error(p, iv).value;
}

EnvelopeBounds lemma1_bounds(const GegenbauerParams& p, double r, Regime regime) {
  require(std::isfinite(r) && r > 0.0, "lemma1 needs r > 0");
  const double l = p.lambda();
  EnvelopeBounds out;
  out.regime = regime;
  if (regime == Regime::small_radius) {
    const double lower_c = std::pow(2.0, 2 * l + 2) / ((2 * l + 1) * std::pow(1.0 + std::cosh(1.0), 0.5 - l));
    const double upper_c = std::pow(2.0, 2 * l + 1) / (2 * l + 1);
    const double shape = std::pow(std::sinh(0.5 * r), 2 * l + 1);
    out.lower = lower_c * shape;
    out.upper = upper_c * shape;
    out.constants_used = {{"small_lower", lower_c}, {"small_upper", upper_c}};
  } else {
    const double lower_c = std::pow(2.0, 4 * l + 1) / ((2 * l + 1) * std::pow(3.0, 2 * l + 1));
    const double upper_c = std::pow(4.0, l) / (2 * l);
    const double shape = std::pow(std::cosh(0.5 * r), 4 * l);
    out.lower = lower_c * shape;
    out.upper = upper_c * shape;
    out.constants_used = {{"large_lower", lower_c}, {"large_upper", upper_c}};
  }
  return out;
}

EnvelopeResult lemma1_envelope(const GegenbauerParams& p, double r) {
  const Regime regime = r <= p.c() ? Regime::small_radius : Regime::large_radius;
  const auto bounds = lemma1_bounds(p, r, regime);
  const auto m = ball_measure_with_error(p, WeightedInterval(0.0, r));
  EnvelopeResult out;
  out.lower = bounds.lower;
  out.upper = bounds.upper;
  out.regime = regime;
  out.constants_used = bounds.constants_used;
  out.measured = m.value;
  out.measured_error = m.error_estimate;
  if (r == p.c()) out.boundary_alternate = lemma1_bounds(p, r, Regime::large_radius);
  return out;
}

double lemma1_rederived_lower_constant(const GegenbauerParams& p) {
  const double l = p.lambda();
  return std::pow(2.0, l + 1.5) / ((2 * l + 1) * std::pow(1.0 + std::cosh(p.c()), 0.5 - l));
}

double lemma2_bound(const GegenbauerParams& p, double x, double r) {
  require(std::isfinite(x) && x >= 0.0, "lemma2 needs x >= 0");
  require(std::isfinite(r) && r > 0.0, "lemma2 needs r > 0");
  const double l2 = 2.0 * p.lambda();
  if (r <= p.c()) return x <= r ? std::pow(r, l2 + 1.0) : std::pow(std::cosh(x), l2);
  if (x <= 2.0 * r) return std::pow(std::cosh(r), l2);
  return std::pow(std::cosh(x), l2) * std::pow(std::cosh(r), l2);
}

double doubling_ratio(const GegenbauerParams& p, double x, double r) {
  const double den = ball_measure(p, WeightedInterval(x, r));
  if (!(den > 0.0)) fail(ErrorKind::ill_conditioned, "zero ball measure in doubling ratio");
  return ball_measure(p, WeightedInterval(x, 2.0 * r)) / den;
}

bool sinh_bracket_holds(double t, double c) {
  const double s = std::sinh(t);
  return t <= s && s <= std::exp(2.0 * c) * t;
}

}  // namespace gegenbauer
