#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gegenbauer/params.hpp"
#include "gegenbauer/quadrature.hpp"
#include "gegenbauer/test_function.hpp"

namespace gegenbauer {

// Fixed nodes in gamma with weights that already contain (gamma^2 - 1)^(lambda - 1/2).
// [1, 1 + delta0] uses gamma = 1 + delta0 u^(1/(lambda + 1/2)), which makes the
// weight constant in u; beyond that, composite Gauss panels up to gamma_max.
struct SpectralGrid {
  std::vector<double> gamma;
  std::vector<double> weight;
  double delta0 = 0.1;
  double gamma_max = 40.0;
};

SpectralGrid spectral_grid(const GegenbauerParams& p, double gamma_max = 40.0, int near_nodes = 16,
                           double panel_width = 1.0, int panel_nodes = 8);

struct SpectralFunction {
  std::vector<double> gamma_grid;
  std::vector<double> values;
  std::vector<double> weights;
  std::map<std::string, double> quadrature_note;

  void validate() const;
  // Header "gamma,value", 17 significant digits.
  std::string to_csv() const;
  SpectralFunction scaled(double c) const;
};

double forward_p(const GegenbauerParams& p, const TestFunction& f, const Degree& gamma);
IntegralResult forward_p_result(const GegenbauerParams& p, const TestFunction& f, const Degree& gamma);
SpectralFunction forward_p_spectrum(const GegenbauerParams& p, const TestFunction& f, const SpectralGrid& grid,
                                    int jobs = 1);

// Q is the shift multiplier: (A_t f_ref)^_P(gamma) / f_ref^_P(gamma), taken
// from two bump references supported beyond t and required to agree to 1%.
struct QReferences {
  TestFunction primary;
  TestFunction secondary;
};
QReferences q_references(double t);

inline constexpr double kQSpreadTolerance = 0.01;

struct QRow {
  std::vector<double> values;  // primary-reference quotients
  double max_spread = 0.0;     // max relative disagreement with the secondary reference
};

// Quotients at one t for many gammas. Throws ill_conditioned when a reference
// transform is below 100x its error estimate and calibration_failed when the
// references disagree by 1% or more.
QRow legendre_q_row(const GegenbauerParams& p, double t, const std::vector<double>& gammas);
double legendre_q(const GegenbauerParams& p, const Degree& gamma, double t);

// Quotient for an arbitrary reference pair, without the agreement check.
double multiplier_quotient(const GegenbauerParams& p, const TestFunction& reference, double t, const Degree& gamma);

// Table of Q over (t, gamma), filled once by precompute() and read-only after.
class MultiplierCalibration {
 public:
  MultiplierCalibration(GegenbauerParams p, std::vector<double> gammas);
  void precompute(const std::vector<double>& ts, int jobs = 1);
  bool has(double t) const;
  const std::vector<double>& row(double t) const;
  const std::vector<double>& gammas() const { return gammas_; }
  double max_spread() const { return max_spread_; }

 private:
  GegenbauerParams params_;
  std::vector<double> gammas_;
  std::map<double, std::vector<double>> rows_;
  double max_spread_ = 0.0;
};

double forward_q(const GegenbauerParams& p, const TestFunction& f, const Degree& gamma);
SpectralFunction forward_q_spectrum(const GegenbauerParams& p, const TestFunction& f, const SpectralGrid& grid,
                                    int jobs = 1);

struct CStarCalibration {
  double value = 0.0;
  double residual = 0.0;  // relative L2 round-trip error on the calibration grid
  std::string reference_function;
  double gamma_max = 0.0;
};

struct CalibrationOptions {
  std::vector<double> x_grid;  // defaults to 9 interior points of the reference support
  double gamma_max = 40.0;
  double prefactor = 1.0;      // applied to the raw inverse before fitting
  double ceiling = 0.05;       // residual above this fails the calibration
  int jobs = 1;
};

CStarCalibration calibrate_cstar(const GegenbauerParams& p, const TestFunction& reference,
                                 const CalibrationOptions& opts = {});
CStarCalibration calibrate_cq(const GegenbauerParams& p, const TestFunction& reference,
                              const CalibrationOptions& opts = {});

double inverse_p(const GegenbauerParams& p, const SpectralFunction& fhat, double x, const CStarCalibration& cstar);
double inverse_q(const GegenbauerParams& p, const SpectralFunction& fhat_q, double x, const CStarCalibration& cq);

struct RoundTrip {
  std::vector<double> xs;
  std::vector<double> reconstructed;
  std::vector<double> exact;
  double relative_l2 = 0.0;
};
RoundTrip round_trip_p(const GegenbauerParams& p, const TestFunction& f, const CStarCalibration& cstar,
                       const std::vector<double>& xs, int jobs = 1);

struct ParsevalCheck {
  double lhs = 0.0;    // integral of f A_t g against sh^(2 lambda)
  double rhs_p = 0.0;  // c* integral of f^_P (A_t g)^_P
  double rhs_q = 0.0;  // c* integral of f^_P (A_t g)^_Q
};
ParsevalCheck parseval_check(const GegenbauerParams& p, const TestFunction& f, const TestFunction& g, double t,
                             const CStarCalibration& cstar, bool with_q = true, int jobs = 1);

// A_t f as a registry-style function of x, with support and breakpoints.
TestFunction shifted_function(const GegenbauerParams& p, const TestFunction& f, double t);

std::pair<double, double> shift_multiplier_check(const GegenbauerParams& p, const TestFunction& f, double t,
                                                 const Degree& gamma);

// (forward_p(G f), gamma (gamma + 2 lambda) forward_p(f)).
std::pair<double, double> g_multiplier_check(const GegenbauerParams& p, const TestFunction& f, const Degree& gamma);

// Pieces of the nominal inversion constant, without the Gamma(1/2 - gamma)
// factor. Diagnostic only.
struct NominalCStar {
  double f_half = 0.0;      // F(1, 1/2 - lambda; (5 - 2 lambda)/4; 1/2)
  double f_shifted = 0.0;   // F(1, 1/2 - lambda; (5 - 2 lambda)/4; (1 - 2 lambda)/2)
  double numerator = 0.0;
  double value = 0.0;       // numerator / (f_half - f_shifted)
};
NominalCStar nominal_cstar(const GegenbauerParams& p);

}  // namespace gegenbauer
