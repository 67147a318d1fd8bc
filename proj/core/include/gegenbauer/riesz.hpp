#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "gegenbauer/function_spaces.hpp"
#include "gegenbauer/maximal.hpp"
#include "gegenbauer/params.hpp"
#include "gegenbauer/test_function.hpp"

namespace gegenbauer {

struct PotentialParams {
  double alpha = 0.0;
  double p = 1.0;
  double q = 1.0;  // 1/p - 1/q = alpha / (2 lambda + 1); inf when alpha p = 2 lambda + 1

  PotentialParams(const GegenbauerParams& params, double alpha, double p);

  // 1 <= p < (2 lambda + 1) / alpha.
  bool sobolev_regime(const GegenbauerParams& params) const;
  // alpha p = 2 lambda + 1.
  bool bmo_regime(const GegenbauerParams& params) const;
};

// k(x) = (sh x)^(alpha - 2 lambda - 1).
TestFunction riesz_kernel(const GegenbauerParams& params, double alpha);

// Integral over t of k(t) A_t f(ch x) sh^(2 lambda) t, x >= 0.
double riesz_apply(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f, double x);

// The same with A_t|f|; finite iff the defining integral converges absolutely.
double riesz_absolute(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f, double x);

// The defining form: integral over t of A_t k(ch x) f(ch t) sh^(2 lambda) t,
// singular at t = x. Slow; used as a cross-check.
double riesz_kernel_shift_form(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f,
                               double x);

// riesz_apply split into t in [0, r] and t in [r, inf).
std::pair<double, double> riesz_split(const GegenbauerParams& params, const PotentialParams& pp,
                                      const TestFunction& f, double x, double r);

// K(x) = Gamma(alpha/2)^-1 integral over r > 0 of r^(alpha/2 - 1) h_r(ch x),
// tabulated on a log grid of [0.05, 12] and continued by power laws outside.
class HeatPotentialKernel {
 public:
  HeatPotentialKernel(const GegenbauerParams& params, double alpha, int nodes = 64, int jobs = 1);

  double operator()(double x) const;
  double alpha() const { return alpha_; }
  const std::vector<double>& grid() const { return xs_; }
  const std::vector<double>& table() const { return values_; }

  static constexpr double kXMin = 0.05;
  static constexpr double kXMax = 12.0;

 private:
  double lambda_;
  double alpha_;
  std::vector<double> xs_;
  std::vector<double> values_;
};

// Direct evaluation of K(x) by the r-integral.
double heat_potential_kernel_value(const GegenbauerParams& params, double alpha, double x);

// Integral over x of K(x) A_t f(ch x) sh^(2 lambda) x.
double riesz_heat_form(const GegenbauerParams& params, const HeatPotentialKernel& kernel, const TestFunction& f,
                       double t);
double riesz_heat_form(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f, double t);

// Integral over x of |A_t f(ch x)| k(x) sh^(2 lambda) x.
double kernel_majorant(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f, double t);

// (forward_p of the heat-form potential, (gamma (gamma + 2 lambda))^(-alpha/2) forward_p(f)).
std::pair<double, double> riesz_multiplier_check(const GegenbauerParams& params, const HeatPotentialKernel& kernel,
                                                 const TestFunction& f, double gamma);

// Default evaluation grid for potentials: [0.05, extent + 4].
std::vector<double> potential_domain(const TestFunction& f, int count);

std::vector<double> riesz_profile(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f,
                                  const std::vector<double>& xs, int jobs = 1);

// || potential ||_q / || f ||_p with the potential sampled on xs.
double sobolev_ratio(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f,
                     const std::vector<double>& xs, int jobs = 1);

// Superlevel profile of the potential for p = 1; weak_constant(pp.q) is the
// empirical weak-(1, q) constant.
DistributionProfile weak_1q_profile(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f,
                                    const std::vector<double>& betas, const std::vector<double>& xs, int jobs = 1);

struct BmoCenter {
  double a1 = 0.0;
  double a2 = 0.0;
  double a_f = 0.0;
};

struct ModifiedSplit {
  double f1 = 0.0;
  double f2 = 0.0;
  BmoCenter center;
};

// Potential with kernel A_t k(ch x) - k(t) chi(t > 1/4).
double modified_riesz(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f, double x);

// F1 over t < r/4 and F2 over t > r/4 with the centering integrals a1, a2.
ModifiedSplit modified_riesz_split(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f,
                                   double x, double r);

// bmo_norm of the modified potential (sampled on [0, 14]) over || f ||_p.
double bmo_ratio(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f,
                 const Lattice& lattice = Lattice::standard(), int jobs = 1);

}  // namespace gegenbauer
