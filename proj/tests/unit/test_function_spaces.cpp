#include <cmath>

#include "doctest.h"
#include "gegenbauer/error.hpp"
#include "gegenbauer/function_spaces.hpp"
#include "gegenbauer/grid.hpp"
#include "gegenbauer/measure.hpp"
#include "gegenbauer/quadrature.hpp"

using namespace gegenbauer;

TEST_CASE("Lebesgue norms") {
  const GegenbauerParams p(0.25);
  CHECK(lp_norm(p, zero_function(), 2.0) == 0.0);
  CHECK(lp_norm(p, indicator(0.5, 1.0), 1.0) ==
        doctest::Approx(ball_measure(p, WeightedInterval(0.75, 0.25))).epsilon(1e-10));
  CHECK(lp_norm(p, exp_decay(2.0), 2.0) == doctest::Approx(0.3360978200452915933).epsilon(1e-7));
  const auto mc = mc_oracle([](const std::vector<double>& t) { return std::exp(-4 * t[0]) * std::pow(std::sinh(t[0]), 0.5); },
                            {{0.0, 12.0}}, 4'000'000, 17);
  CHECK(std::abs(lp_norm(p, exp_decay(2.0), 2.0) - std::sqrt(mc.value)) < 4.0 * mc.standard_error);
  CHECK(lp_norm_on(p, constant_one(), 1.0, 0.0, 2.0) == doctest::Approx(ball_measure(p, WeightedInterval(0.0, 2.0))));
}

TEST_CASE("norm specifications") {
  const GegenbauerParams p(0.25);
  CHECK_THROWS_AS((NormSpec{0.5, std::nullopt, false}.validate(p)), Error);
  CHECK_THROWS_AS((NormSpec{2.0, 2.0, false}.validate(p)), Error);
  CHECK_NOTHROW((NormSpec{2.0, 1.5, true}.validate(p)));
}

TEST_CASE("Morrey norms") {
  const GegenbauerParams p(0.25);
  const auto lat = Lattice::standard();
  CHECK(morrey_norm(p, zero_function(), 2.0, 0.5, false, lat) == 0.0);
  for (const auto& f : {bump(1.0, 2.0), exp_decay(2.0), indicator(0.5, 1.0)})
    CHECK(lp_norm(p, f, 2.0) <= (1 + 1e-6) * morrey_norm(p, f, 2.0, 0.0, true, lat));
}

TEST_CASE("BMO norm") {
  const GegenbauerParams p(0.25);
  CHECK(bmo_norm(p, constant_one()) == 0.0);
  CHECK(bmo_norm(p, constant_function(-3.5)) == 0.0);
  const GridFunction flat(linspace(0.0, 5.0, 11), std::vector<double>(11, 2.0));
  CHECK(bmo_norm(p, flat) == 0.0);
  const double b = bmo_norm(p, bump(1.0, 2.0));
  CHECK(b > 0.0);
  CHECK(bmo_norm(p, scaled(bump(1.0, 2.0), 2.0)) == doctest::Approx(2.0 * b).epsilon(1e-9));
}

TEST_CASE("embedding check") {
  const GegenbauerParams p(0.25);
  const auto e = embedding_check(p, bump(1.0, 2.0), 2.0, 0.5);
  CHECK(e.alpha == doctest::Approx(0.5));
  CHECK(e.lhs > 0.0);
  CHECK(e.rhs > 0.0);
}

TEST_CASE("grid functions") {
  const GridFunction g({0.0, 1.0, 2.0}, {0.0, 2.0, 4.0});
  CHECK(g.at_x(0.5) == doctest::Approx(1.0));
  CHECK(g.at_x(3.0) == 4.0);
  CHECK_THROWS_AS(GridFunction({0.0, 1.0}, {1.0}), Error);
  CHECK_THROWS_AS(GridFunction({0.0, 1.0}, {1.0, NAN}), Error);
}

TEST_CASE("grids") {
  CHECK(parse_grid("lin:0:1:3") == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(parse_grid("0.1:0.3:0.1").size() == 3);
  CHECK(parse_grid("1,2,4").back() == 4.0);
  CHECK(parse_grid("log:0.01:10:32").size() == 32);
  CHECK_THROWS_AS(parse_grid("2,1"), Error);
  CHECK_THROWS_AS(parse_grid("lin:a:1:3"), Error);
}
