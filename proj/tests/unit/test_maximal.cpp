#include <cmath>

#include "doctest.h"
#include "gegenbauer/function_spaces.hpp"
#include "gegenbauer/grid.hpp"
#include "gegenbauer/maximal.hpp"
#include "gegenbauer/measure.hpp"

using namespace gegenbauer;

TEST_CASE("maximal functions of constants") {
  const GegenbauerParams p(0.25);
  const auto grid = RadiusGrid::standard();
  for (double x : {0.0, 1.0, 2.5}) {
    CHECK(maximal_G(p, constant_one(), x, grid) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(maximal_mu(p, constant_one(), x, grid) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(maximal_G(p, zero_function(), x, grid) == 0.0);
    CHECK(maximal_mu(p, zero_function(), x, grid) == 0.0);
  }
  CHECK(domination_ratio(p, constant_one(), {0.0, 1.0, 2.0}, grid) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("indicator averages over contained balls") {
  const GegenbauerParams p(0.25);
  CHECK(maximal_mu(p, indicator(1.0, 2.0), 1.5, RadiusGrid::standard()) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("grid refinement") {
  const GegenbauerParams p(0.25);
  const auto grid = RadiusGrid::standard();
  const double a = maximal_G(p, indicator(1.0, 2.0), 1.5, grid);
  const double b = maximal_G(p, indicator(1.0, 2.0), 1.5, grid.refined());
  CHECK(std::abs(a - b) < 0.02 * b);
  const double c = maximal_mu(p, exp_decay(1.0), 2.0, grid);
  const double d = maximal_mu(p, exp_decay(1.0), 2.0, grid.refined());
  CHECK(std::abs(c - d) < 0.02 * d);
  CHECK(grid.spans_regimes(p.c()));
}

TEST_CASE("domination ratio on the pilot corpus") {
  const GegenbauerParams p(0.25);
  const auto lat = Lattice::standard();
  const double base = domination_ratio(p, bump(1.0, 2.0), lat.xs, lat.radii);
  CHECK(base == doctest::Approx(1.569).epsilon(1e-3));
  CHECK(std::isfinite(domination_ratio(p, indicator(0.5, 1.0), lat.xs, lat.radii)));
}

TEST_CASE("superlevel measures") {
  const GegenbauerParams p(0.25);
  const auto xs = linspace(0.0, 3.0, 31);
  std::vector<double> vs;
  for (double x : xs) vs.push_back(std::exp(-x));
  CHECK(superlevel_measure(p, xs, vs, 2.0) == 0.0);
  double prev = INFINITY;
  for (double a : {0.05, 0.1, 0.3, 0.6, 0.9}) {
    const double m = superlevel_measure(p, xs, vs, a);
    CHECK(m <= prev);
    prev = m;
  }
  std::vector<double> ones(xs.size(), 1.0);
  CHECK(superlevel_measure(p, xs, ones, 0.5) == doctest::Approx(ball_measure(p, WeightedInterval(0.0, 3.0))).epsilon(1e-10));
}

TEST_CASE("strong and weak type ratios") {
  const GegenbauerParams p(0.25);
  const auto grid = RadiusGrid::standard();
  const auto f = bump(1.0, 2.0);
  const double s = strong_type_norm(p, f, 2.0, profile_domain(f, 61), grid);
  CHECK(s >= 1.0 - 1e-6);
  CHECK(std::isfinite(s));
  const auto prof = weak_type_profile(p, f, logspace(1e-3, 2.0, 24), profile_domain(f, 31), grid);
  for (std::size_t i = 1; i < prof.superlevel_measures.size(); ++i)
    CHECK(prof.superlevel_measures[i] <= prof.superlevel_measures[i - 1]);
}

TEST_CASE("differentiation") {
  const GegenbauerParams p(0.25);
  const auto zero = differentiation_error(p, constant_one(), 1.0, 0.2);
  CHECK(zero.average_error == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(zero.normalized_deviation == doctest::Approx(0.0).epsilon(1e-9));
  double prev = INFINITY;
  std::vector<double> e;
  for (double r : {0.2, 0.1, 0.05, 0.025}) {
    e.push_back(differentiation_error(p, bump(1.0, 2.0), 1.5, r).average_error);
    CHECK(e.back() < prev);
    prev = e.back();
  }
  CHECK(e.back() < 0.1 * e.front());
  // A_t(id) = ch x ch t: the error is ch x (mean of ch t - 1), of order r^2.
  const double r = 0.1;
  const double a = differentiation_error(p, identity_function(), 1.0, r).average_error;
  const double b = differentiation_error(p, identity_function(), 1.0, r / 2).average_error;
  CHECK(a / b == doctest::Approx(4.0).epsilon(0.02));
}
