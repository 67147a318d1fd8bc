#pragma once

#include "gegenbauer/params.hpp"
#include "gegenbauer/quadrature.hpp"
#include "gegenbauer/test_function.hpp"

namespace gegenbauer {

// Tolerances for the inner (phi) and outer integrals of nested evaluations.
QuadratureSpec inner_spec();
QuadratureSpec outer_spec();

// A_t f(ch x): normalised phi-average of f(ch x ch t - sh x sh t cos phi)
// against (sin phi)^(2 lambda - 1).
double shift_apply(const GegenbauerParams& p, const TestFunction& f, double t, double x,
                   const QuadratureSpec& spec = inner_spec());

// I(x, r) = integral over [0, r] of A_t|f|(ch x) sh^(2 lambda) t dt.
double shift_average_integral(const GegenbauerParams& p, const TestFunction& f, double x, double r);

// The same quantity after exchanging the order of integration: an integral
// over z = ch s of |f(z)| (z^2 - 1)^(lambda - 1/2) A(x, z, r), x > 0.
double shift_average_kernel_form(const GegenbauerParams& p, const TestFunction& f, double x, double r);

// A(x, z, r): integral of (1 - u^2)^(lambda - 1) over [-1, U] with
// U = (ch r - z ch x) / (sqrt(z^2 - 1) sh x), clamped to [-1, 1].
double inner_profile(const GegenbauerParams& p, double x, double z, double r);
double inner_profile_upper_limit(double x, double z, double r);

// Full Beta integral Gamma(1/2) Gamma(lambda) / Gamma(lambda + 1/2).
double inner_profile_full(const GegenbauerParams& p);

// || A_t f - f ||_{p, lambda}; p = inf gives a grid sup.
double shift_modulus(const GegenbauerParams& p, const TestFunction& f, double t, double p_exp);

// || A_t f ||_{p, lambda} on the same truncated domain.
double shifted_norm(const GegenbauerParams& p, const TestFunction& f, double t, double p_exp);

}  // namespace gegenbauer
