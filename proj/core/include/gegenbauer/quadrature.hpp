#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace gegenbauer {

using Integrand = std::function<double(double)>;

struct TruncationPolicy {
  double cutoff = 30.0;               // absolute upper limit T
  double tail_bound_exponent = 1.0;   // assumed decay rate kappa of |f| beyond T
  double tail_tol = 1e-10;
  int max_extensions = 6;             // doublings of T - a before giving up
  std::function<double(double)> tail_majorant;  // optional bound on the tail beyond T
};

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 2000;
  double beta_left = 0.0;   // endpoint weight (t-a)^beta_left
  double beta_right = 0.0;  // endpoint weight (b-t)^beta_right
  TruncationPolicy truncation;

  QuadratureSpec with_tol(double abs, double rel) const {
    QuadratureSpec s = *this;
    s.abs_tol = abs;
    s.rel_tol = rel;
    return s;
  }
  QuadratureSpec with_singularity(double left, double right) const {
    QuadratureSpec s = *this;
    s.beta_left = left;
    s.beta_right = right;
    return s;
  }
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions_used = 0;
};

// Adaptive Gauss-Kronrod 7/15. Breakpoints inside (a, b) seed the initial
// partition. a == b gives zero.
IntegralResult integrate_finite(const Integrand& f, double a, double b, const QuadratureSpec& spec,
                                const std::vector<double>& breakpoints = {});

// Integral of (t-a)^bl (b-t)^br g(t) over [a, b], with bl, br taken from spec.
IntegralResult integrate_singular(const Integrand& g, double a, double b, const QuadratureSpec& spec,
                                  const std::vector<double>& breakpoints = {});

// Integral of f over [a, inf). The finite part [a, T] carries spec.beta_left
// as a left endpoint weight; the discarded tail is certified against
// spec.truncation and T is extended until it fits.
IntegralResult integrate_semi_infinite(const Integrand& f, double a, const QuadratureSpec& spec,
                                       const std::vector<double>& breakpoints = {});

struct FixedRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [-1, 1].
FixedRule gauss_legendre(int n);

// Gauss-Legendre with n nodes on each of `panels` equal panels of every piece
// [edges[i], edges[i+1]].
FixedRule composite_gauss(const std::vector<double>& edges, int panels, int n);

struct McResult {
  double value = 0.0;
  double standard_error = 0.0;
};

// Plain Monte-Carlo over a box, for use as an independent oracle.
McResult mc_oracle(const std::function<double(const std::vector<double>&)>& f,
                   const std::vector<std::pair<double, double>>& box, std::int64_t n, std::uint64_t seed);

}  // namespace gegenbauer
