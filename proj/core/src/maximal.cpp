#include "gegenbauer/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gegenbauer/error.hpp"
#include "gegenbauer/function_spaces.hpp"
#include "gegenbauer/grid.hpp"
#include "gegenbauer/measure.hpp"
#include "gegenbauer/parallel.hpp"
#include "gegenbauer/shift.hpp"

namespace gegenbauer {

RadiusGrid::RadiusGrid(std::vector<double> r) : radii(std::move(r)) {
  require(radii.size() >= 16, "radius grid needs at least 16 radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    require(std::isfinite(radii[i]) && radii[i] > 0.0, "radii must be positive and finite");
    if (i > 0) require(radii[i] > radii[i - 1], "radii must be strictly increasing");
  }
}

RadiusGrid RadiusGrid::logarithmic(double lo, double hi, int count) { return RadiusGrid(logspace(lo, hi, count)); }

RadiusGrid RadiusGrid::standard() { return logarithmic(1e-3, 10.0, 24); }

RadiusGrid RadiusGrid::refined() const { return RadiusGrid(refine_grid(radii, true)); }

bool RadiusGrid::spans_regimes(double c) const { return radii.front() <= c / 100.0 && radii.back() >= 10.0 * c; }

Lattice Lattice::standard() { return Lattice{linspace(0.0, 3.0, 13), RadiusGrid::standard()}; }

Lattice Lattice::refined() const { return Lattice{refine_grid(xs, false), radii.refined()}; }

double DistributionProfile::weak_constant(double q) const {
  require(norm_input > 0.0, "weak constant needs a positive input norm");
  double best = 0.0;
  for (std::size_t i = 0; i < thresholds.size(); ++i)
    best = std::max(best, thresholds[i] * std::pow(superlevel_measures[i], 1.0 / q) / norm_input);
  return best;
}

namespace {

std::vector<double> origin_ball_averages(const GegenbauerParams& p, const TestFunction& f, double x,
                                         const RadiusGrid& grid, bool absolute) {
  const TestFunction g = absolute ? abs_of(f) : f;
  std::vector<double> bps = shifted_features(g, x);
  const auto integrals = cumulative_weighted_integrals(
      p, [&](double t) { return shift_apply(p, g, t, x); }, grid.radii, outer_spec(), bps);
  const auto measures = cumulative_weighted_integrals(p, [](double) { return 1.0; }, grid.radii,
                                                      QuadratureSpec{}.with_tol(1e-15, 1e-12));
  std::vector<double> out(grid.count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = integrals[i] / measures[i];
  return out;
}

}  // namespace

double maximal_G(const GegenbauerParams& p, const TestFunction& f, double x, const RadiusGrid& grid) {
  require(std::isfinite(x) && x >= 0.0, "maximal function needs x >= 0");
  if (f.constant) return std::abs(*f.constant);
  const auto avg = origin_ball_averages(p, f, x, grid, true);
  return *std::max_element(avg.begin(), avg.end());
}

double maximal_mu(const GegenbauerParams& p, const TestFunction& f, double x, const RadiusGrid& grid) {
  require(std::isfinite(x) && x >= 0.0, "maximal function needs x >= 0");
  if (f.constant) return std::abs(*f.constant);
  const TestFunction g = abs_of(f);
  const auto features = g.features();
  double best = 0.0;
  for (double r : grid.radii) {
    const auto [a, b] = WeightedInterval(x, r).endpoints();
    std::vector<double> bps;
    for (double s : features)
      if (s > a && s < b) bps.push_back(s);
    const double num = weighted_integral(p, g.of_x, a, b, outer_spec(), bps).value;
    const double den = weighted_integral(p, [](double) { return 1.0; }, a, b, QuadratureSpec{}.with_tol(1e-15, 1e-12)).value;
    best = std::max(best, num / den);
  }
  return best;
}

std::vector<double> maximal_G_profile(const GegenbauerParams& p, const TestFunction& f, const std::vector<double>& xs,
                                      const RadiusGrid& grid, int jobs) {
  return parallel_map(xs.size(), jobs, [&](std::size_t i) { return maximal_G(p, f, xs[i], grid); });
}

std::vector<double> maximal_mu_profile(const GegenbauerParams& p, const TestFunction& f,
                                       const std::vector<double>& xs, const RadiusGrid& grid, int jobs) {
  return parallel_map(xs.size(), jobs, [&](std::size_t i) { return maximal_mu(p, f, xs[i], grid); });
}

double domination_ratio(const GegenbauerParams& p, const TestFunction& f, const std::vector<double>& xs,
                        const RadiusGrid& grid, int jobs) {
  const auto g = maximal_G_profile(p, f, xs, grid, jobs);
  const auto m = maximal_mu_profile(p, f, xs, grid, jobs);
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double ratio;
    if (m[i] == 0.0)
      ratio = g[i] == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    else
      ratio = g[i] / m[i];
    worst = std::max(worst, ratio);
  }
  return worst;
}

double superlevel_measure(const GegenbauerParams& p, const std::vector<double>& xs, const std::vector<double>& values,
                          double alpha) {
  require(xs.size() == values.size() && xs.size() >= 2, "superlevel measure needs matching samples");
  const QuadratureSpec spec = QuadratureSpec{}.with_tol(1e-15, 1e-12);
  std::vector<double> pieces;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double a = xs[i], b = xs[i + 1], va = values[i] - alpha, vb = values[i + 1] - alpha;
    double lo, hi;
    if (va > 0.0 && vb > 0.0) {
      lo = a;
      hi = b;
    } else if (va > 0.0) {
      lo = a;
      hi = a + (b - a) * va / (va - vb);
    } else if (vb > 0.0) {
      lo = a + (b - a) * va / (va - vb);
      hi = b;
    } else {
      continue;
    }
    if (hi > lo) pieces.push_back(weighted_integral(p, [](double) { return 1.0; }, lo, hi, spec).value);
  }
  return pairwise_sum(pieces);
}

DistributionProfile distribution_profile(const GegenbauerParams& p, const std::vector<double>& xs,
                                         const std::vector<double>& values, const std::vector<double>& thresholds,
                                         double norm_input) {
  DistributionProfile out;
  out.thresholds = thresholds;
  out.norm_input = norm_input;
  for (double a : thresholds) {
    require(std::isfinite(a) && a > 0.0, "thresholds must be positive");
    out.superlevel_measures.push_back(superlevel_measure(p, xs, values, a));
  }
  return out;
}

std::vector<double> profile_domain(const TestFunction& f, int count) {
  return linspace(0.0, truncation_extent(f) + 4.0, count);
}

DistributionProfile weak_type_profile(const GegenbauerParams& p, const TestFunction& f,
                                      const std::vector<double>& alphas, const std::vector<double>& xs,
                                      const RadiusGrid& grid, int jobs) {
  const auto m = maximal_G_profile(p, f, xs, grid, jobs);
  return distribution_profile(p, xs, m, alphas, lp_norm(p, f, 1.0));
}

double sampled_lp_norm(const GegenbauerParams& p, const std::vector<double>& xs, const std::vector<double>& values,
                       double p_exp) {
  require(xs.size() == values.size() && xs.size() >= 2, "sampled norm needs matching samples");
  const GridFunction g(xs, values);
  std::vector<double> inner(xs.begin() + 1, xs.end() - 1);
  const auto r = weighted_integral(
      p, [&](double s) { return std::pow(std::abs(g.at_x(s)), p_exp); }, xs.front(), xs.back(), outer_spec(), inner);
  return std::pow(r.value, 1.0 / p_exp);
}

double strong_type_norm(const GegenbauerParams& p, const TestFunction& f, double p_exp, const std::vector<double>& xs,
                        const RadiusGrid& grid, int jobs) {
  require(p_exp > 1.0, "strong type needs p > 1");
  const auto m = maximal_G_profile(p, f, xs, grid, jobs);
  const double num = sampled_lp_norm(p, xs, m, p_exp);
  const double den = lp_norm_on(p, f, p_exp, xs.front(), xs.back());
  if (!(den > 0.0)) fail(ErrorKind::ill_conditioned, "zero input norm in strong type ratio");
  return num / den;
}

DifferentiationError differentiation_error(const GegenbauerParams& p, const TestFunction& f, double x, double r) {
  require(std::isfinite(x) && x >= 0.0, "differentiation error needs x >= 0");
  require(std::isfinite(r) && r > 0.0, "differentiation error needs r > 0");
  DifferentiationError out;
  if (f.constant) return out;
  const double fx = f.at_x(x);
  const auto bps = shifted_features(f, x);
  const double mass = ball_measure(p, WeightedInterval(0.0, r));
  const double avg = weighted_integral(p, [&](double t) { return shift_apply(p, f, t, x); }, 0.0, r, outer_spec(), bps).value / mass;
  out.average_error = std::abs(avg - fx);
  const double dev =
      weighted_integral(p, [&](double t) { return std::abs(shift_apply(p, f, t, x) - fx); }, 0.0, r, outer_spec(), bps)
          .value;
  out.normalized_deviation = dev / std::pow(std::sinh(0.5 * r), 2.0 * p.lambda() + 1.0);
  return out;
}

}  // namespace gegenbauer
