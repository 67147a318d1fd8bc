#include "harness/eval.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "gegenbauer/error.hpp"
#include "gegenbauer/function_spaces.hpp"
#include "gegenbauer/grid.hpp"
#include "gegenbauer/maximal.hpp"
#include "gegenbauer/measure.hpp"
#include "gegenbauer/parallel.hpp"
#include "gegenbauer/riesz.hpp"
#include "gegenbauer/shift.hpp"
#include "gegenbauer/special_functions.hpp"
#include "gegenbauer/transform.hpp"
#include "harness/config.hpp"

namespace gegenbauer::harness {

namespace {

constexpr const char* kDefaultXGrid = "lin:0:3:13";

double need(const std::optional<double>& v, const char* flag, const std::string& op) {
  if (!v) fail(ErrorKind::invalid_argument, "eval " + op + " needs " + flag);
  return *v;
}

void forbid(bool present, const char* flag, const std::string& op) {
  if (present) fail(ErrorKind::invalid_argument, std::string(flag) + " is not used by eval " + op);
}

std::vector<double> x_grid(const EvalOptions& o) { return parse_grid(o.x_grid.value_or(kDefaultXGrid)); }

RadiusGrid r_grid(const EvalOptions& o) { return o.r_grid ? RadiusGrid(parse_grid(*o.r_grid)) : RadiusGrid::standard(); }

void write_columns(std::ostream& out, const std::string& header, const std::vector<double>& xs,
                   const std::vector<double>& vs) {
  out << header << '\n';
  for (std::size_t i = 0; i < xs.size(); ++i) out << format_double(xs[i]) << ',' << format_double(vs[i]) << '\n';
}

template <class F>
void pointwise(std::ostream& out, const std::string& header, const std::vector<double>& xs, int jobs, F&& fn) {
  write_columns(out, header, xs, parallel_map(xs.size(), jobs, [&](std::size_t i) { return fn(xs[i]); }));
}

CStarCalibration cstar_from_fixtures(const EvalOptions& o) {
  const HarnessConfig cfg = HarnessConfig::load(o.config_path);
  const Fixtures fx = Fixtures::load(o.fixtures_path);
  fx.check(cfg);
  if (cfg.lambda != o.lambda)
    fail(ErrorKind::missing_fixture, "fixtures hold c* for lambda = " + format_double(cfg.lambda) + " only");
  CStarCalibration cs;
  cs.value = fx.get("cstar");
  cs.residual = fx.get("cstar_residual");
  cs.gamma_max = fx.get("cstar_gamma_max");
  return cs;
}

}  // namespace

const std::vector<std::string>& eval_operators() {
  static const std::vector<std::string> ops{"shift",      "maximal-g",  "maximal-mu",     "measure",
                                            "transform-p", "transform-q", "inverse-p",     "riesz",
                                            "riesz-heat", "modified-riesz", "heat-kernel", "norm"};
  return ops;
}

void run_eval(const std::string& op, const EvalOptions& o, std::ostream& out) {
  if (std::find(eval_operators().begin(), eval_operators().end(), op) == eval_operators().end())
    fail(ErrorKind::invalid_argument, "unknown operator '" + op + "'");
  const GegenbauerParams params(o.lambda, o.c);
  const TestFunction f = parse_test_function(o.f);
  const int jobs = std::max(1, o.jobs);

  if (op == "shift") {
    const double t = need(o.t, "--t", op);
    pointwise(out, "x,value", x_grid(o), jobs, [&](double x) { return shift_apply(params, f, t, x); });
  } else if (op == "maximal-g" || op == "maximal-mu") {
    const auto xs = x_grid(o);
    const auto grid = r_grid(o);
    write_columns(out, "x,value", xs,
                  op == "maximal-g" ? maximal_G_profile(params, f, xs, grid, jobs)
                                    : maximal_mu_profile(params, f, xs, grid, jobs));
  } else if (op == "measure") {
    const double x = o.x.value_or(0.0);
    const auto radii = r_grid(o).radii;
    const auto rows = parallel_map(radii.size(), jobs, [&](std::size_t i) {
      std::array<double, 3> row{ball_measure(params, WeightedInterval(x, radii[i])), NAN, NAN};
      if (x == 0.0) {
        const auto b = lemma1_bounds(params, radii[i], radii[i] <= params.c() ? Regime::small_radius : Regime::large_radius);
        row[1] = b.lower;
        row[2] = b.upper;
      }
      return row;
    });
    out << "r,measure,lower,upper\n";
    for (std::size_t i = 0; i < radii.size(); ++i)
      out << format_double(radii[i]) << ',' << format_double(rows[i][0]) << ',' << format_double(rows[i][1]) << ','
          << format_double(rows[i][2]) << '\n';
  } else if (op == "transform-p" || op == "transform-q") {
    const auto gammas = o.gamma_grid ? parse_grid(*o.gamma_grid) : spectral_grid(params).gamma;
    const bool q = op == "transform-q";
    pointwise(out, "gamma,value", gammas, jobs,
              [&](double g) { return q ? forward_q(params, f, Degree(g)) : forward_p(params, f, Degree(g)); });
  } else if (op == "inverse-p") {
    forbid(o.gamma_grid.has_value(), "--gamma-grid", op);
    const auto cs = cstar_from_fixtures(o);
    const auto fhat = forward_p_spectrum(params, f, spectral_grid(params, cs.gamma_max), jobs);
    pointwise(out, "x,value", x_grid(o), jobs, [&](double x) { return inverse_p(params, fhat, x, cs); });
  } else if (op == "riesz" || op == "modified-riesz") {
    const PotentialParams pp(params, o.alpha, o.p);
    const bool mod = op == "modified-riesz";
    pointwise(out, "x,value", x_grid(o), jobs,
              [&](double x) { return mod ? modified_riesz(params, pp, f, x) : riesz_apply(params, pp, f, x); });
  } else if (op == "riesz-heat") {
    const HeatPotentialKernel kernel(params, o.alpha, 64, jobs);
    pointwise(out, "x,value", x_grid(o), jobs, [&](double x) { return riesz_heat_form(params, kernel, f, x); });
  } else if (op == "heat-kernel") {
    const double r = need(o.r, "--r", op);
    pointwise(out, "x,value", x_grid(o), jobs, [&](double x) { return heat_kernel(params, r, x); });
  } else {
    NormSpec spec;
    spec.p = o.p;
    spec.morrey_gamma = o.morrey_gamma;
    spec.modified = o.modified;
    spec.validate(params);
    Lattice lat = Lattice::standard();
    if (o.x_grid) lat.xs = parse_grid(*o.x_grid);
    if (o.r_grid) lat.radii = RadiusGrid(parse_grid(*o.r_grid));
    out << "p,morrey_gamma,modified,value\n"
        << format_double(o.p) << ',' << (o.morrey_gamma ? format_double(*o.morrey_gamma) : "none") << ','
        << (o.modified ? 1 : 0) << ',' << format_double(norm(params, f, spec, lat, jobs)) << '\n';
  }
}

}  // namespace gegenbauer::harness
