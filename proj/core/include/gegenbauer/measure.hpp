#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gegenbauer/params.hpp"
#include "gegenbauer/quadrature.hpp"

namespace gegenbauer {

struct WeightedInterval {
  double center;
  double radius;

  WeightedInterval(double x, double r);
  std::pair<double, double> endpoints() const;
};

enum class Regime { small_radius, large_radius };

struct EnvelopeBounds {
  double lower = 0.0;
  double upper = 0.0;
  Regime regime = Regime::small_radius;
  std::map<std::string, double> constants_used;
};

struct EnvelopeResult {
  double lower = 0.0;
  double upper = 0.0;
  double measured = 0.0;
  double measured_error = 0.0;
  Regime regime = Regime::small_radius;
  std::map<std::string, double> constants_used;
  // At r == c the large-radius bracket as well.
  std::optional<EnvelopeBounds> boundary_alternate;
};

// Integral of g(t) sh^(2 lambda) t over [a, b]; the t^(2 lambda) behaviour at
// t = 0 is absorbed by the singular rule.
IntegralResult weighted_integral(const GegenbauerParams& p, const std::function<double(double)>& g, double a,
                                 double b, const QuadratureSpec& spec, const std::vector<double>& breakpoints = {});

// Same over [a, inf) with the tail certified by spec.truncation.
IntegralResult weighted_integral_to_infinity(const GegenbauerParams& p, const std::function<double(double)>& g,
                                             double a, const QuadratureSpec& spec,
                                             const std::vector<double>& breakpoints = {});

// Integrals of g sh^(2 lambda) over [0, r_k] for increasing radii, accumulated
// piece by piece.
std::vector<double> cumulative_weighted_integrals(const GegenbauerParams& p, const std::function<double(double)>& g,
                                                  const std::vector<double>& radii, const QuadratureSpec& spec,
                                                  const std::vector<double>& breakpoints = {});

double ball_measure(const GegenbauerParams& p, const WeightedInterval& iv);
IntegralResult ball_measure_with_error(const GegenbauerParams& p, const WeightedInterval& iv);

EnvelopeBounds lemma1_bounds(const GegenbauerParams& p, double r, Regime regime);
EnvelopeResult lemma1_envelope(const GegenbauerParams& p, double r);

// Small-radius lower constant as rederived from the estimate chain:
// 2^(lambda + 3/2) / ((2 lambda + 1) (1 + ch c)^(1/2 - lambda)).
double lemma1_rederived_lower_constant(const GegenbauerParams& p);

double lemma2_bound(const GegenbauerParams& p, double x, double r);
double doubling_ratio(const GegenbauerParams& p, double x, double r);

// t <= sh t <= e^(2c) t.
bool sinh_bracket_holds(double t, double c);

}  // namespace gegenbauer
