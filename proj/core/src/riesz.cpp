#include "gegenbauer/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gegenbauer/error.hpp"
#include "gegenbauer/grid.hpp"
#include "gegenbauer/measure.hpp"
#include "gegenbauer/parallel.hpp"
#include "gegenbauer/shift.hpp"
#include "gegenbauer/special_functions.hpp"

namespace gegenbauer {

namespace {

bool is_zero(const TestFunction& f) {
  if (f.constant && *f.constant == 0.0) return true;
  return f.support && f.support->first >= f.support->second;
}

// Window of t where A_t f(ch x) can be nonzero.
std::pair<double, double> shift_window(const TestFunction& f, double x) {
  if (f.support) {
    const auto [a, b] = *f.support;
    return {std::max({0.0, a - x, x - b}), x + b};
  }
  return {0.0, x + truncation_extent(f, 1e-14)};
}

// Integral over [lo, hi] of g(t) kernel_dmu(t), where kernel_dmu(t) ~ t^e0 at 0.
double potential_integral(const std::function<double(double)>& kernel_dmu, double e0,
                          const std::function<double(double)>& g, double lo, double hi,
                          const std::vector<double>& bps) {
  if (!(hi > lo)) return 0.0;
  auto h = [&](double t) {
    const double v = g(t);
    return v == 0.0 ? 0.0 : v * kernel_dmu(t);
  };
  if (lo == 0.0) {
    return integrate_singular([&](double t) { return h(t) * std::pow(t, -e0); }, 0.0, hi,
                              outer_spec().with_singularity(e0, 0.0), bps)
        .value;
  }
  return integrate_finite(h, lo, hi, outer_spec(), bps).value;
}

std::function<double(double)> riesz_dmu(double alpha) {
  return [alpha](double t) { return std::pow(std::sinh(t), alpha - 1.0); };
}

double symmetric_potential(const GegenbauerParams& params, const std::function<double(double)>& kernel_dmu, double e0,
                           const TestFunction& f, double x, double lo, double hi) {
  require(std::isfinite(x) && x >= 0.0, "potential needs x >= 0");
  if (is_zero(f)) return 0.0;
  const auto [wlo, whi] = shift_window(f, x);
  return potential_integral(kernel_dmu, e0, [&](double t) { return shift_apply(params, f, t, x); },
                            std::max(lo, wlo), std::min(hi, whi), shifted_features(f, x));
}

// Integral of k(t) f(ch t) sh^(2 lambda) t over [lo, hi] intersected with the
// support of f; lo > 0.
double kernel_moment(const PotentialParams& pp, const TestFunction& f, double lo, double hi) {
  if (is_zero(f)) return 0.0;
  double a = lo, b = std::min(hi, truncation_extent(f, 1e-14));
  if (f.support) {
    a = std::max(a, f.support->first);
    b = std::min(b, f.support->second);
  }
  if (!(b > a)) return 0.0;
  const double alpha = pp.alpha;
  return integrate_finite([&](double t) { return f.at_x(t) * std::pow(std::sinh(t), alpha - 1.0); }, a, b,
                          outer_spec(), f.features())
      .value;
}

}  // namespace

PotentialParams::PotentialParams(const GegenbauerParams& params, double a, double p_exp) : alpha(a), p(p_exp) {
  const double n = 2.0 * params.lambda() + 1.0;
  require(std::isfinite(alpha) && alpha > 0.0 && alpha < n, "alpha must lie in (0, 2 lambda + 1)");
  require(p >= 1.0, "p must be >= 1");
  const double den = n - alpha * p;
  if (std::abs(den) <= 1e-12 * n)
    q = INFINITY;
  else if (den > 0.0)
    q = p * n / den;
  else
    fail(ErrorKind::invalid_argument, "alpha p must not exceed 2 lambda + 1");
}

bool PotentialParams::sobolev_regime(const GegenbauerParams& params) const {
  return p >= 1.0 && alpha * p < 2.0 * params.lambda() + 1.0 && std::isfinite(q);
}

bool PotentialParams::bmo_regime(const GegenbauerParams&) const { return std::isinf(q); }

TestFunction riesz_kernel(const GegenbauerParams& params, double alpha) {
  TestFunction k = power_kernel(alpha - 2.0 * params.lambda() - 1.0);
  k.name = "riesz_kernel";
  return k;
}

double riesz_apply(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f, double x) {
  return symmetric_potential(params, riesz_dmu(pp.alpha), pp.alpha - 1.0, f, x, 0.0, INFINITY);
}

double riesz_absolute(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f, double x) {
  return riesz_apply(params, pp, abs_of(f), x);
}

std::pair<double, double> riesz_split(const GegenbauerParams& params, const PotentialParams& pp,
                                      const TestFunction& f, double x, double r) {
  require(std::isfinite(r) && r > 0.0, "split radius must be positive");
  const auto dmu = riesz_dmu(pp.alpha);
  return {symmetric_potential(params, dmu, pp.alpha - 1.0, f, x, 0.0, r),
          symmetric_potential(params, dmu, pp.alpha - 1.0, f, x, r, INFINITY)};
}

double riesz_kernel_shift_form(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f,
                               double x) {
  require(std::isfinite(x) && x > 0.0, "kernel shift form needs x > 0");
  if (is_zero(f)) return 0.0;
  require(f.support.has_value() && f.support->first > 0.0, "kernel shift form needs support away from 0");
  const TestFunction k = riesz_kernel(params, pp.alpha);
  const auto [a, b] = *f.support;
  const double two_l = 2.0 * params.lambda();
  auto g = [&](double t) {
    const double v = f.at_x(t);
    // |t - x|^(alpha - 1) weight: the points dropped here carry no mass at double precision.
    if (v == 0.0 || std::abs(t - x) <= 1e-9 * x) return 0.0;
    return v * shift_apply(params, k, t, x) * std::pow(std::sinh(t), two_l);
  };
  const double e = pp.alpha - 1.0;
  const auto bps = f.features();
  double total = 0.0;
  if (x > a) {
    const double hi = std::min(x, b);
    const double w = x < b ? e : 0.0;
    total += integrate_singular([&](double t) { return g(t) * std::pow(x - t, -w); }, a, hi,
                                outer_spec().with_singularity(0.0, w), bps)
                 .value;
  }
  if (x < b) {
    const double lo = std::max(x, a);
    const double w = x > a ? e : 0.0;
    total += integrate_singular([&](double t) { return g(t) * std::pow(t - x, -w); }, lo, b,
                                outer_spec().with_singularity(w, 0.0), bps)
                 .value;
  }
  return total;
}

double heat_potential_kernel_value(const GegenbauerParams& params, double alpha, double x) {
  require(std::isfinite(x) && x > 0.0, "heat potential kernel needs x > 0");
  require(alpha > 0.0 && alpha < 2.0 * params.lambda() + 1.0, "alpha must lie in (0, 2 lambda + 1)");
  QuadratureSpec spec = QuadratureSpec{}.with_tol(1e-14, 1e-8).with_singularity(0.5 * alpha - 1.0, 0.0);
  spec.truncation.cutoff = 30.0;
  spec.truncation.tail_tol = 1e-14;
  spec.truncation.tail_majorant = [&](double T) {
    return heat_kernel_bound(params, T, x) * std::pow(T, 0.5 * alpha - 1.0);
  };
  const auto r = integrate_semi_infinite([&](double r) { return heat_kernel(params, r, x); }, 0.0, spec);
  return r.value / gamma_fn(0.5 * alpha);
}

HeatPotentialKernel::HeatPotentialKernel(const GegenbauerParams& params, double alpha, int nodes, int jobs)
    : lambda_(params.lambda()), alpha_(alpha) {
  require(nodes >= 8, "heat potential kernel needs at least 8 nodes");
  xs_ = logspace(kXMin, kXMax, nodes);
  values_ = parallel_map(xs_.size(), jobs, [&](std::size_t i) { return heat_potential_kernel_value(params, alpha, xs_[i]); });
  for (double v : values_)
    if (!(v > 0.0)) fail(ErrorKind::non_finite, "heat potential kernel is not positive");
}

double HeatPotentialKernel::operator()(double x) const {
  require(std::isfinite(x) && x > 0.0, "heat potential kernel needs x > 0");
  if (x <= xs_.front()) return values_.front() * std::pow(std::sinh(x) / std::sinh(xs_.front()), alpha_ - 2.0 * lambda_ - 1.0);
  if (x >= xs_.back()) return values_.back() * std::pow(std::cosh(x) / std::cosh(xs_.back()), -2.0 * lambda_ - 1.0);
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t j = static_cast<std::size_t>(it - xs_.begin());
  const double w = std::log(x / xs_[j - 1]) / std::log(xs_[j] / xs_[j - 1]);
  return std::exp((1.0 - w) * std::log(values_[j - 1]) + w * std::log(values_[j]));
}

double riesz_heat_form(const GegenbauerParams& params, const HeatPotentialKernel& kernel, const TestFunction& f,
                       double t) {
  const double two_l = 2.0 * params.lambda();
  auto dmu = [&](double x) { return kernel(x) * std::pow(std::sinh(x), two_l); };
  return symmetric_potential(params, dmu, kernel.alpha() - 1.0, f, t, 0.0, INFINITY);
}

double riesz_heat_form(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f, double t) {
  return riesz_heat_form(params, HeatPotentialKernel(params, pp.alpha), f, t);
}

double kernel_majorant(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f, double t) {
  require(std::isfinite(t) && t >= 0.0, "potential needs t >= 0");
  if (is_zero(f)) return 0.0;
  const auto [lo, hi] = shift_window(f, t);
  return potential_integral(riesz_dmu(pp.alpha), pp.alpha - 1.0,
                            [&](double x) { return std::abs(shift_apply(params, f, x, t)); }, lo, hi,
                            shifted_features(f, t));
}

std::pair<double, double> riesz_multiplier_check(const GegenbauerParams& params, const HeatPotentialKernel& kernel,
                                                 const TestFunction& f, double gamma) {
  require(std::isfinite(gamma) && gamma >= 1.0, "degree must be >= 1");
  const double l = params.lambda();
  const double hi = truncation_extent(f, 1e-14) + 30.0 / (gamma + 1.0);
  const auto lhs = weighted_integral(
      params, [&](double s) { return riesz_heat_form(params, kernel, f, s) * legendre_p(params, gamma, s); }, 0.0, hi,
      outer_spec(), f.features());
  const auto fhat = weighted_integral(params, [&](double s) { return f.at_x(s) * legendre_p(params, gamma, s); }, 0.0,
                                      truncation_extent(f, 1e-14), QuadratureSpec{}.with_tol(1e-300, 1e-9),
                                      f.features());
  return {lhs.value, std::pow(gamma * (gamma + 2.0 * l), -0.5 * kernel.alpha()) * fhat.value};
}

std::vector<double> potential_domain(const TestFunction& f, int count) {
  return linspace(0.05, truncation_extent(f) + 4.0, count);
}

std::vector<double> riesz_profile(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f,
                                  const std::vector<double>& xs, int jobs) {
  return parallel_map(xs.size(), jobs, [&](std::size_t i) { return riesz_apply(params, pp, f, xs[i]); });
}

double sobolev_ratio(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f,
                     const std::vector<double>& xs, int jobs) {
  require(pp.sobolev_regime(params), "Sobolev ratio needs 1 <= p < (2 lambda + 1) / alpha");
  const double den = lp_norm(params, f, pp.p);
  if (!(den > 0.0)) fail(ErrorKind::ill_conditioned, "zero input norm in Sobolev ratio");
  return sampled_lp_norm(params, xs, riesz_profile(params, pp, f, xs, jobs), pp.q) / den;
}

DistributionProfile weak_1q_profile(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f,
                                    const std::vector<double>& betas, const std::vector<double>& xs, int jobs) {
  require(pp.p == 1.0, "weak (1, q) profile needs p = 1");
  return distribution_profile(params, xs, riesz_profile(params, pp, f, xs, jobs), betas, lp_norm(params, f, 1.0));
}

double modified_riesz(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f, double x) {
  return riesz_apply(params, pp, f, x) - kernel_moment(pp, f, 0.25, INFINITY);
}

ModifiedSplit modified_riesz_split(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f,
                                   double x, double r) {
  require(std::isfinite(r) && r > 0.0, "split radius must be positive");
  ModifiedSplit out;
  if (is_zero(f)) return out;
  const double r4 = 0.25 * r;
  const double ext = f.support ? f.support->second : truncation_extent(f, 1e-14);
  if (r > 1.0) out.center.a1 = -kernel_moment(pp, f, 0.25, r4);
  if (r < 1.0) out.center.a2 = kernel_moment(pp, f, r4, 0.25);
  out.center.a_f = out.center.a1 + out.center.a2;
  const double low = riesz_apply(params, pp, restricted(f, 0.0, std::min(r4, ext)), x);
  const double high = r4 < ext ? riesz_apply(params, pp, restricted(f, r4, ext), x) : 0.0;
  out.f1 = low + out.center.a1;
  out.f2 = high - kernel_moment(pp, f, r4, INFINITY) + out.center.a2;
  return out;
}

double bmo_ratio(const GegenbauerParams& params, const PotentialParams& pp, const TestFunction& f,
                 const Lattice& lattice, int jobs) {
  require(pp.bmo_regime(params), "BMO ratio needs alpha p = 2 lambda + 1");
  const double den = lp_norm(params, f, pp.p);
  if (!(den > 0.0)) fail(ErrorKind::ill_conditioned, "zero input norm in BMO ratio");
  const auto xs = linspace(0.0, 14.0, 141);
  const auto vals = parallel_map(xs.size(), jobs, [&](std::size_t i) { return modified_riesz(params, pp, f, xs[i]); });
  return bmo_norm(params, GridFunction(xs, vals, Interpolation::linear), lattice, jobs) / den;
}

}  // namespace gegenbauer
