#pragma once

#include <vector>

#include "gegenbauer/params.hpp"
#include "gegenbauer/test_function.hpp"

namespace gegenbauer {

struct RadiusGrid {
  std::vector<double> radii;

  explicit RadiusGrid(std::vector<double> r);
  static RadiusGrid logarithmic(double lo, double hi, int count);
  // 1e-3 .. 10, 24 points.
  static RadiusGrid standard();

  std::size_t count() const { return radii.size(); }
  double max() const { return radii.back(); }
  RadiusGrid refined() const;
  // Two decades below c and one above.
  bool spans_regimes(double c) const;
};

// Shared (x, r) lattice for suprema over balls H(0, r) shifted to x.
struct Lattice {
  std::vector<double> xs;
  RadiusGrid radii;

  // x in 0..3 step 0.25 with the standard radius grid.
  static Lattice standard();
  Lattice refined() const;
};

struct DistributionProfile {
  std::vector<double> thresholds;
  std::vector<double> superlevel_measures;
  double norm_input = 0.0;

  // sup over thresholds of threshold * measure^(1/q) / norm_input.
  double weak_constant(double q = 1.0) const;
};

// sup over the grid of |H(0,r)|^-1 * integral over [0, r] of A_t|f|(ch x).
double maximal_G(const GegenbauerParams& p, const TestFunction& f, double x, const RadiusGrid& grid);
// sup over the grid of the weighted average of |f| over H(x, r).
double maximal_mu(const GegenbauerParams& p, const TestFunction& f, double x, const RadiusGrid& grid);

std::vector<double> maximal_G_profile(const GegenbauerParams& p, const TestFunction& f, const std::vector<double>& xs,
                                      const RadiusGrid& grid, int jobs = 1);
std::vector<double> maximal_mu_profile(const GegenbauerParams& p, const TestFunction& f,
                                       const std::vector<double>& xs, const RadiusGrid& grid, int jobs = 1);

// sup over xs of M_G f / M_mu f, 0/0 counted as 1 and c/0 as +inf.
double domination_ratio(const GegenbauerParams& p, const TestFunction& f, const std::vector<double>& xs,
                        const RadiusGrid& grid, int jobs = 1);

// Weighted measure of {x : T(x) > alpha} for samples T on xs, cells cut at the
// linear-interpolation crossing.
double superlevel_measure(const GegenbauerParams& p, const std::vector<double>& xs, const std::vector<double>& values,
                          double alpha);
DistributionProfile distribution_profile(const GegenbauerParams& p, const std::vector<double>& xs,
                                         const std::vector<double>& values, const std::vector<double>& thresholds,
                                         double norm_input);

// Default x-domain for profiles: [0, truncation extent + 4].
std::vector<double> profile_domain(const TestFunction& f, int count);

DistributionProfile weak_type_profile(const GegenbauerParams& p, const TestFunction& f,
                                      const std::vector<double>& alphas, const std::vector<double>& xs,
                                      const RadiusGrid& grid, int jobs = 1);

// || M_G f ||_p / || f ||_p over [0, xs.back()], M_G f linearly interpolated
// between the samples.
double strong_type_norm(const GegenbauerParams& p, const TestFunction& f, double p_exp, const std::vector<double>& xs,
                        const RadiusGrid& grid, int jobs = 1);

// L_p norm over [xs.front(), xs.back()] of the linear interpolant of samples.
double sampled_lp_norm(const GegenbauerParams& p, const std::vector<double>& xs, const std::vector<double>& values,
                       double p_exp);

struct DifferentiationError {
  double average_error = 0.0;        // | avg_r A_t f(ch x) - f(ch x) |
  double normalized_deviation = 0.0; // (sh r/2)^-(2 lambda + 1) * integral of |A_t f - f| over [0, r]
};

DifferentiationError differentiation_error(const GegenbauerParams& p, const TestFunction& f, double x, double r);

}  // namespace gegenbauer
