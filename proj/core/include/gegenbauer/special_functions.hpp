#pragma once

#include <functional>

#include "gegenbauer/params.hpp"

namespace gegenbauer {

double gamma_fn(double x);
// log|Gamma(x)| with the sign written to *sign; thread safe.
double log_gamma(double x, int* sign = nullptr);
// 1/Gamma(x), zero at the poles.
double reciprocal_gamma(double x);

// Gauss hypergeometric function 2F1(a, b; c; z) for real z <= 1.
double gauss_2f1(double a, double b, double c, double z);

namespace hyp2f1 {
// Raw power series; requires |z| < 1.
double series(double a, double b, double c, double z);
// Euler transformation (1-z)^(c-a-b) 2F1(c-a, c-b; c; z), summed as a series.
double euler(double a, double b, double c, double z);
}  // namespace hyp2f1

// P^lambda_gamma(ch x) from its hypergeometric representation. Below x_min it
// is extrapolated linearly from x_min and 2 x_min.
double legendre_p(const GegenbauerParams& p, double gamma, double x);
inline constexpr double kLegendreXMin = 1e-3;

// Heat kernel h_r(ch x) = integral over gamma >= 1 of
// exp(-gamma (gamma + 2 lambda) r) P_gamma(ch x) (gamma^2 - 1)^(lambda - 1/2).
double heat_kernel(const GegenbauerParams& p, double r, double x);

// Gamma(lambda + 1/2) e^-r (ch x)^(-2 lambda - 1).
double heat_kernel_bound(const GegenbauerParams& p, double r, double x);

// Gegenbauer differential operator G = (y^2-1) d^2/dy^2 + (2 lambda + 1) y d/dy
// applied at y = ch x by a conservative-form central difference in y.
double apply_G(const GegenbauerParams& p, const std::function<double(double)>& f_of_y, double x, double h);
double apply_G(const GegenbauerParams& p, const std::function<double(double)>& f_of_y, double x);

}  // namespace gegenbauer
