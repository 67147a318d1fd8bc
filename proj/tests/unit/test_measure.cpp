#include <cmath>

#include "doctest.h"
#include "gegenbauer/measure.hpp"
#include "gegenbauer/quadrature.hpp"

using namespace gegenbauer;

TEST_CASE("ball measure") {
  const GegenbauerParams p(0.25);
  CHECK(ball_measure(p, WeightedInterval(0.0, 1.0)) == doctest::Approx(0.69060773598575838982).epsilon(1e-12));
  CHECK(ball_measure(p, WeightedInterval(0.3, 0.5)) == doctest::Approx(0.48796934014852802241).epsilon(1e-12));
  CHECK(ball_measure(p, WeightedInterval(0.0, 1e-6)) < 1e-6);
  const auto mc = mc_oracle([](const std::vector<double>& t) { return std::pow(std::sinh(t[0]), 0.5); }, {{0.0, 1.0}},
                            10'000'000, 3);
  CHECK(std::abs(ball_measure(p, WeightedInterval(0.0, 1.0)) - mc.value) < 4.0 * mc.standard_error);
}

TEST_CASE("closed form at the lambda = 1/2 edge") {
  const auto p = GegenbauerParams::edge_case(0.5);
  for (double r : {0.1, 1.0, 3.0})
    CHECK(ball_measure(p, WeightedInterval(0.0, r)) == doctest::Approx(std::cosh(r) - 1.0).epsilon(1e-11));
  CHECK(doubling_ratio(p, 0.0, 1.0) ==
        doctest::Approx((std::cosh(2.0) - 1.0) / (std::cosh(1.0) - 1.0)).epsilon(1e-10));
}

TEST_CASE("origin-ball brackets") {
  const GegenbauerParams p(0.25);
  const auto small = lemma1_envelope(p, 0.5);
  CHECK(small.regime == Regime::small_radius);
  CHECK(small.lower ==
        doctest::Approx(std::pow(2.0, 2.5) / (1.5 * std::pow(1 + std::cosh(1.0), 0.25)) * std::pow(std::sinh(0.25), 1.5)));
  CHECK(small.upper == doctest::Approx(std::pow(2.0, 1.5) / 1.5 * std::pow(std::sinh(0.25), 1.5)));
  CHECK(small.measured <= small.upper);

  const auto large = lemma1_envelope(p, 4.0);
  CHECK(large.regime == Regime::large_radius);
  CHECK(large.lower == doctest::Approx(4.0 / (1.5 * std::pow(3.0, 1.5)) * std::cosh(2.0)));
  CHECK(large.upper == doctest::Approx(std::pow(4.0, 0.25) / 0.5 * std::cosh(2.0)));
  CHECK(large.lower <= large.measured);
  CHECK(large.measured <= large.upper);

  const auto edge = lemma1_envelope(p, 1.0);
  REQUIRE(edge.boundary_alternate.has_value());
  CHECK(edge.boundary_alternate->regime == Regime::large_radius);
}

TEST_CASE("rederived small-radius lower constant brackets the measure") {
  const GegenbauerParams p(0.25);
  const double c = lemma1_rederived_lower_constant(p);
  for (double r = 0.01; r <= 1.0; r *= 1.3)
    CHECK(c * std::pow(std::sinh(0.5 * r), 1.5) <= ball_measure(p, WeightedInterval(0.0, r)));
}

TEST_CASE("shifted-ball comparison functions") {
  const GegenbauerParams p(0.25);
  CHECK(lemma2_bound(p, 0.3, 0.5) == doctest::Approx(std::pow(0.5, 1.5)));
  CHECK(lemma2_bound(p, 5.0, 0.5) == doctest::Approx(std::pow(std::cosh(5.0), 0.5)));
  CHECK(lemma2_bound(p, 10.0, 3.0) == doctest::Approx(std::sqrt(std::cosh(10.0) * std::cosh(3.0))));
  CHECK(std::isfinite(ball_measure(p, WeightedInterval(0.3, 0.5)) / lemma2_bound(p, 0.3, 0.5)));
}

TEST_CASE("doubling") {
  const GegenbauerParams p(0.25);
  CHECK(doubling_ratio(p, 0.0, 1e-3) == doctest::Approx(std::pow(2.0, 1.5)).epsilon(0.01));
  for (double x : {0.0, 1.0, 3.0})
    for (double r : {0.01, 0.5, 2.0}) CHECK(doubling_ratio(p, x, r) > 1.0);
}

TEST_CASE("sinh bracket") {
  for (int i = 0; i <= 1000; ++i) CHECK(sinh_bracket_holds(2.0 * i / 1000.0, 1.0));
  CHECK_FALSE(sinh_bracket_holds(5.0, 1.0));
}
