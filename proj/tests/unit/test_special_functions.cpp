#include <cmath>

#include "doctest.h"
#include "gegenbauer/error.hpp"
#include "gegenbauer/special_functions.hpp"

using namespace gegenbauer;

TEST_CASE("gamma function") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-15));
  CHECK(gamma_fn(1.25) == doctest::Approx(0.90640247705547707798).epsilon(1e-14));
  CHECK(reciprocal_gamma(-2.0) == 0.0);
}

TEST_CASE("Gauss hypergeometric function") {
  CHECK(gauss_2f1(0.3, -1.7, 2.2, 0.0) == 1.0);
  CHECK(gauss_2f1(1, 1, 2, 0.5) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(gauss_2f1(1, 0.25, 1.125, 0.5) == doctest::Approx(1.1635925712182693753).epsilon(1e-13));
  CHECK(gauss_2f1(1, 0.25, 1.125, 0.25) == doctest::Approx(1.0655622957531441731).epsilon(1e-13));
  SUBCASE("series and Euler-transformed series agree") {
    for (double z : {0.1, 0.5, 0.8})
      CHECK(hyp2f1::series(1, 0.25, 1.125, z) == doctest::Approx(hyp2f1::euler(1, 0.25, 1.125, z)).epsilon(1e-12));
  }
}

TEST_CASE("Legendre function P") {
  const GegenbauerParams p(0.25);
  CHECK(legendre_p(p, 1.5, 2.0) == doctest::Approx(0.0091166698935742474901).epsilon(1e-12));
  CHECK(legendre_p(p, 3.0, 0.5) == doctest::Approx(0.027001824016551365648).epsilon(1e-12));
  CHECK(legendre_p(GegenbauerParams(0.1), 2.0, 1.0) == doctest::Approx(0.05337296553687426039).epsilon(1e-12));
  CHECK_THROWS_AS(legendre_p(p, 0.5, 1.0), Error);
}

TEST_CASE("P decays like (ch x)^(-gamma - 2 lambda)") {
  const GegenbauerParams p(0.25);
  for (double g : {1.0, 2.0, 4.5}) {
    const double l = p.lambda();
    const double c0 = std::abs(std::tgamma(g + 2 * l) * std::cos(M_PI * l) / (std::tgamma(g) * std::tgamma(g + l + 1))) *
                      std::pow(2.0, -g - 2 * l);
    double fmax = 0.0;
    for (double x = 0.25; x <= 6.0; x += 0.25) {
      const double a = 0.5 * g + l;
      fmax = std::max(fmax, gauss_2f1(a, a + 0.5, g + l + 1, 1.0 / (std::cosh(x) * std::cosh(x))));
    }
    for (double x = 0.25; x <= 6.0; x += 0.25)
      CHECK(std::abs(legendre_p(p, g, x)) <= c0 * fmax * std::pow(std::cosh(x), -g - 2 * l) * (1 + 1e-12));
  }
}

TEST_CASE("G eigen relation") {
  const GegenbauerParams p(0.25);
  const double g = 2.0, x = 1.0;
  const double pv = legendre_p(p, g, x);
  const double gp = apply_G(p, [&](double y) { return legendre_p(p, g, std::acosh(y)); }, x);
  const double ev = g * (g + 2 * p.lambda());
  CHECK(std::abs(gp - ev * pv) / std::abs(ev * pv) < 1e-4);
}

TEST_CASE("G on elementary functions") {
  const GegenbauerParams p(0.25);
  CHECK(std::abs(apply_G(p, [](double) { return 1.0; }, 1.0)) < 1e-12);
  const double x = std::acosh(2.0);
  CHECK(apply_G(p, [](double y) { return y; }, x) == doctest::Approx((2 * 0.25 + 1) * 2.0).epsilon(1e-6));
}

TEST_CASE("heat kernel") {
  const GegenbauerParams p(0.25);
  CHECK(heat_kernel(p, 1.0, 1.0) == doctest::Approx(0.01000792836309107285).epsilon(1e-9));
  for (double r : {0.05, 0.2, 0.5, 1.0, 2.0})
    for (double x : {0.0, 0.25, 0.5, 1.0, 2.0}) CHECK(std::abs(heat_kernel(p, r, x)) <= heat_kernel_bound(p, r, x));
  double prev = INFINITY;
  for (double r : {1.0, 2.0, 4.0, 8.0}) {
    const double h = std::abs(heat_kernel(p, r, 0.5));
    CHECK(h < prev);
    prev = h;
  }
  CHECK(prev < heat_kernel_bound(p, 8.0, 0.5));
}
