#include "gegenbauer/function_spaces.hpp"

#include <algorithm>
#include <cmath>

#include "gegenbauer/error.hpp"
#include "gegenbauer/measure.hpp"
#include "gegenbauer/parallel.hpp"
#include "gegenbauer/shift.hpp"

namespace gegenbauer {

void NormSpec::validate(const GegenbauerParams& params) const {
  require(p >= 1.0, "norm exponent must be >= 1");
  if (morrey_gamma) {
    const double g = *morrey_gamma;
    require(std::isfinite(g) && g >= 0.0 && g <= 2.0 * params.lambda() + 1.0,
            "Morrey exponent must lie in [0, 2 lambda + 1]");
    require(std::isfinite(p), "Morrey norms need finite p");
  }
}

double lp_norm_on(const GegenbauerParams& params, const TestFunction& f, double p, double a, double b) {
  require(p >= 1.0, "norm exponent must be >= 1");
  require(std::isfinite(a) && std::isfinite(b) && 0.0 <= a && a < b, "norm window needs 0 <= a < b");
  if (f.constant && *f.constant == 0.0) return 0.0;
  std::vector<double> bps;
  for (double s : f.features())
    if (s > a && s < b) bps.push_back(s);
  if (std::isinf(p)) {
    double m = 0.0;
    const int n = 2000;
    for (int i = 0; i <= n; ++i) m = std::max(m, std::abs(f.at_x(a + (b - a) * i / n)));
    for (double s : bps) m = std::max(m, std::abs(f.at_x(s)));
    return m;
  }
  const auto r =
      weighted_integral(params, [&](double s) { return std::pow(std::abs(f.at_x(s)), p); }, a, b, outer_spec(), bps);
  return std::pow(r.value, 1.0 / p);
}

double lp_norm(const GegenbauerParams& params, const TestFunction& f, double p) {
  if (f.constant && *f.constant == 0.0) return 0.0;
  if (f.support && f.support->first >= f.support->second) return 0.0;
  return lp_norm_on(params, f, p, 0.0, truncation_extent(f));
}

namespace {

double normaliser(double r, bool modified) {
  const double s = std::sinh(0.5 * r);
  return modified ? std::min(1.0, s) : s;
}

std::vector<double> origin_ball_measures(const GegenbauerParams& params, const RadiusGrid& grid) {
  return cumulative_weighted_integrals(params, [](double) { return 1.0; }, grid.radii,
                                       QuadratureSpec{}.with_tol(1e-15, 1e-12));
}

}  // namespace

double morrey_norm(const GegenbauerParams& params, const TestFunction& f, double p, double gamma_m, bool modified,
                   const Lattice& lattice, int jobs) {
  NormSpec{p, gamma_m, modified}.validate(params);
  if (f.constant && *f.constant == 0.0) return 0.0;
  const TestFunction g = abs_of(f);
  const auto per_x = parallel_map(lattice.xs.size(), jobs, [&](std::size_t i) {
    const double x = lattice.xs[i];
    const auto integrals = cumulative_weighted_integrals(
        params, [&](double t) { return std::pow(shift_apply(params, g, t, x), p); }, lattice.radii.radii, outer_spec(),
        shifted_features(g, x));
    double best = 0.0;
    for (std::size_t k = 0; k < integrals.size(); ++k) {
      const double r = lattice.radii.radii[k];
      best = std::max(best, std::pow(normaliser(r, modified), -gamma_m) * integrals[k]);
    }
    return best;
  });
  return std::pow(*std::max_element(per_x.begin(), per_x.end()), 1.0 / p);
}

double norm(const GegenbauerParams& params, const TestFunction& f, const NormSpec& spec, const Lattice& lattice,
            int jobs) {
  spec.validate(params);
  if (!spec.morrey_gamma) return lp_norm(params, f, spec.p);
  return morrey_norm(params, f, spec.p, *spec.morrey_gamma, spec.modified, lattice, jobs);
}

double bmo_norm(const GegenbauerParams& params, const TestFunction& g, const Lattice& lattice, int jobs) {
  if (g.constant) return 0.0;
  const auto measures = origin_ball_measures(params, lattice.radii);
  const auto per_x = parallel_map(lattice.xs.size(), jobs, [&](std::size_t i) {
    const double x = lattice.xs[i];
    const auto bps = shifted_features(g, x);
    auto shifted = [&](double t) { return shift_apply(params, g, t, x); };
    const auto sums = cumulative_weighted_integrals(params, shifted, lattice.radii.radii, outer_spec(), bps);
    double best = 0.0;
    for (std::size_t k = 0; k < sums.size(); ++k) {
      const double r = lattice.radii.radii[k];
      const double mean = sums[k] / measures[k];
      const double osc =
          weighted_integral(params, [&](double t) { return std::abs(shifted(t) - mean); }, 0.0, r, outer_spec(), bps)
              .value;
      best = std::max(best, osc / measures[k]);
    }
    return best;
  });
  return *std::max_element(per_x.begin(), per_x.end());
}

double bmo_norm(const GegenbauerParams& params, const GridFunction& g, const Lattice& lattice, int jobs) {
  if (g.is_constant()) return 0.0;
  return bmo_norm(params, g.as_test_function(), lattice, jobs);
}

EmbeddingCheck embedding_check(const GegenbauerParams& params, const TestFunction& f, double p, double gamma_m,
                               const Lattice& lattice, int jobs) {
  const double dim = 2.0 * params.lambda() + 1.0;
  require(p >= 1.0 && std::isfinite(p), "embedding needs finite p >= 1");
  require(gamma_m >= 0.0 && gamma_m < dim, "embedding needs 0 <= gamma_m < 2 lambda + 1");
  EmbeddingCheck out;
  out.alpha = (dim - gamma_m) / p;
  out.lhs = morrey_norm(params, f, 1.0, dim - out.alpha, false, lattice, jobs);
  out.rhs = morrey_norm(params, f, p, gamma_m, false, lattice, jobs);
  return out;
}

}  // namespace gegenbauer
