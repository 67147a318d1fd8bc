#pragma once

#include <cmath>

#include "gegenbauer/error.hpp"

namespace gegenbauer {

// Fixed Gegenbauer index lambda in (0, 1/2) plus the small/large radius
// threshold c used by the measure estimates.
class GegenbauerParams {
 public:
  explicit GegenbauerParams(double lambda, double c = 1.0) : lambda_(lambda), c_(c) {
    require(std::isfinite(lambda) && lambda > 0.0 && lambda < 0.5,
            "lambda must lie in (0, 1/2)");
    require(std::isfinite(c) && c >= 1.0, "regime constant c must be >= 1");
  }

  // lambda = 1/2 admitted for closed-form cross-checks only.
  static GegenbauerParams edge_case(double lambda, double c = 1.0) {
    require(std::isfinite(lambda) && lambda > 0.0 && lambda <= 0.5,
            "edge-case lambda must lie in (0, 1/2]");
    GegenbauerParams p(0.25, c);
    p.lambda_ = lambda;
    return p;
  }

  double lambda() const { return lambda_; }
  double c() const { return c_; }

  // Normalising constant Gamma(l+1/2) / (Gamma(1/2) Gamma(l)) of the shift.
  double shift_normalisation() const {
    return std::tgamma(lambda_ + 0.5) / (std::sqrt(M_PI) * std::tgamma(lambda_));
  }

 private:
  double lambda_;
  double c_;
};

// Spectral parameter; the spectrum used throughout is gamma >= 1.
class Degree {
 public:
  explicit Degree(double gamma) : gamma_(gamma) {
    require(std::isfinite(gamma) && gamma >= 1.0, "degree gamma must be >= 1");
  }
  double value() const { return gamma_; }
  double eigenvalue(const GegenbauerParams& p) const { return gamma_ * (gamma_ + 2.0 * p.lambda()); }

 private:
  double gamma_;
};

}  // namespace gegenbauer
