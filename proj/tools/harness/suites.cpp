#include "harness/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <sstream>

#include "gegenbauer/error.hpp"
#include "gegenbauer/function_spaces.hpp"
#include "gegenbauer/grid.hpp"
#include "gegenbauer/maximal.hpp"
#include "gegenbauer/measure.hpp"
#include "gegenbauer/parallel.hpp"
#include "gegenbauer/quadrature.hpp"
#include "gegenbauer/riesz.hpp"
#include "gegenbauer/shift.hpp"
#include "gegenbauer/special_functions.hpp"
#include "gegenbauer/transform.hpp"

namespace gegenbauer::harness {

namespace {

using Reports = std::vector<InequalityReport>;
using Case = std::function<Reports()>;


std::string g(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Reports run_cases(const std::vector<Case>& cases, int jobs) {
  auto parts = parallel_map(cases.size(), jobs, [&](std::size_t i) { return cases[i](); });
  Reports out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

double rel_diff(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

// The constant 1 without the short cut taken for constant functions.
TestFunction plain_one() {
  TestFunction f;
  f.name = "one";
  f.of_x = [](double) { return 1.0; };
  f.nonnegative = true;
  return f;
}

TestFunction finite_part(const TestFunction& f) { return f.support ? f : restricted(f, 0.0, 12.0); }

}  // namespace

namespace pilot {


struct Lemma2Region {
  const char* key;
  bool small;
  std::function<bool(double, double, double)> in;
};

const std::vector<Lemma2Region>& lemma2_regions() {
  static const std::vector<Lemma2Region> regions{
      {"a_near", true, [](double x, double r, double c) { return r <= c && x <= r; }},
      {"a_far", true, [](double x, double r, double c) { return r <= c && x > r; }},
      {"b_near", false, [](double x, double r, double c) { return r > c && x <= 2.0 * r; }},
      {"b_far", false, [](double x, double r, double c) { return r > c && x > 2.0 * r; }},
  };
  return regions;
}

std::map<std::string, double> lemma2_ratios(const Context& ctx) {
  const auto xs = linspace(0.0, 12.0, 49);
  const auto& radii = ctx.lattice.radii.radii;
  const auto rows = parallel_map(xs.size(), ctx.jobs, [&](std::size_t i) {
    std::vector<double> row;
    for (double r : radii) row.push_back(ball_measure(ctx.params, WeightedInterval(xs[i], r)) / lemma2_bound(ctx.params, xs[i], r));
    return row;
  });
  std::map<std::string, double> out;
  for (const auto& reg : lemma2_regions()) out[reg.key] = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t k = 0; k < radii.size(); ++k)
      for (const auto& reg : lemma2_regions())
        if (reg.in(xs[i], radii[k], ctx.params.c())) out[reg.key] = std::max(out[reg.key], rows[i][k]);
  return out;
}

double doubling_sup(const Context& ctx, const Lattice& lat) {
  const auto rows = parallel_map(lat.xs.size(), ctx.jobs, [&](std::size_t i) {
    double m = 0.0;
    for (double r : lat.radii.radii) m = std::max(m, doubling_ratio(ctx.params, lat.xs[i], r));
    return m;
  });
  return *std::max_element(rows.begin(), rows.end());
}

std::vector<double> weak_alphas() { return logspace(1e-3, 2.0, 48); }

double weak_constant(const Context& ctx, const TestFunction& f) {
  return weak_type_profile(ctx.params, f, weak_alphas(), profile_domain(f, 61), ctx.lattice.radii).weak_constant(1.0);
}

double strong_ratio(const Context& ctx, const TestFunction& f, double p) {
  return strong_type_norm(ctx.params, f, p, profile_domain(f, 61), ctx.lattice.radii);
}

const std::vector<double>& majorant_points() {
  static const std::vector<double> ts{0.25, 0.5, 1.0, 2.0};
  return ts;
}

double majorant_ratio(const Context& ctx, const HeatPotentialKernel& kernel, const TestFunction& f, double t) {
  const PotentialParams pp(ctx.params, ctx.cfg.alpha, 1.0);
  const double maj = kernel_majorant(ctx.params, pp, f, t);
  const double heat = std::abs(riesz_heat_form(ctx.params, kernel, f, t));
  return maj > 0.0 ? heat / maj : (heat == 0.0 ? 0.0 : INFINITY);
}

PotentialParams sobolev_params(const Context& ctx) {
  // p = 2 when it sits in the Sobolev range, otherwise the midpoint of [1, (2 lambda + 1) / alpha).
  const double pmax = (2.0 * ctx.params.lambda() + 1.0) / ctx.cfg.alpha;
  const double p = 2.0 < pmax ? 2.0 : 0.5 * (1.0 + pmax);
  return PotentialParams(ctx.params, ctx.cfg.alpha, p);
}

double sobolev(const Context& ctx, const TestFunction& f, int count) {
  return sobolev_ratio(ctx.params, sobolev_params(ctx), f, potential_domain(f, count));
}

std::vector<double> weak_betas() { return logspace(1e-3, 10.0, 48); }

double weak_1q(const Context& ctx, const TestFunction& f) {
  const PotentialParams pp(ctx.params, ctx.cfg.alpha, 1.0);
  return weak_1q_profile(ctx.params, pp, f, weak_betas(), potential_domain(f, 61)).weak_constant(pp.q);
}

constexpr double kEmbeddingP = 2.0;

double embedding_gamma(const Context& ctx) {
  // gamma_m with alpha p = 2 lambda + 1 - gamma_m, clamped into [0, 2 lambda + 1].
  const double n = 2.0 * ctx.params.lambda() + 1.0;
  return std::clamp(n - ctx.cfg.alpha * kEmbeddingP, 0.0, n);
}

double embedding_ratio(const Context& ctx, const TestFunction& f, const Lattice& lat) {
  const auto e = embedding_check(ctx.params, f, kEmbeddingP, embedding_gamma(ctx), lat);
  return e.rhs > 0.0 ? e.lhs / e.rhs : (e.lhs == 0.0 ? 0.0 : INFINITY);
}

PotentialParams bmo_params(const Context& ctx) {
  return PotentialParams(ctx.params, ctx.cfg.alpha, (2.0 * ctx.params.lambda() + 1.0) / ctx.cfg.alpha);
}

double bmo(const Context& ctx, const TestFunction& f) {
  return bmo_ratio(ctx.params, bmo_params(ctx), finite_part(f), ctx.lattice);
}

CStarCalibration cstar_for(const Context& ctx, const TestFunction& ref) {
  CalibrationOptions opts;
  opts.gamma_max = ctx.cfg.gamma_max;
  opts.ceiling = INFINITY;
  opts.jobs = 1;
  return calibrate_cstar(ctx.params, ref, opts);
}

const TestFunction& cstar_reference() {
  static const TestFunction f = bump(1.0, 2.0);
  return f;
}
const TestFunction& cstar_secondary() {
  static const TestFunction f = bump(1.2, 1.8);
  return f;
}

}  // namespace pilot

namespace {

using namespace pilot;


Reports suite_lemma1(const Context& ctx, const Fixtures&) {
  std::vector<Case> cases;
  for (double r : logspace(0.01, 10.0, 32)) {
    cases.push_back([&ctx, r] {
      const auto env = lemma1_envelope(ctx.params, r);
      const bool small = env.regime == Regime::small_radius;
      const std::string tag = std::string("lem1.") + (small ? "small" : "large");
      const double lc = env.constants_used.at(small ? "small_lower" : "large_lower");
      const double uc = env.constants_used.at(small ? "small_upper" : "large_upper");
      const double tol_lo = env.measured_error / env.measured;
      const double tol_up = env.measured_error / env.upper;
      Reports out{make_report(tag + ".lower@r=" + g(r), env.lower, env.measured, lc, tol_lo, "origin-ball lower bracket"),
                  make_report(tag + ".upper@r=" + g(r), env.measured, env.upper, uc, tol_up, "origin-ball upper bracket")};
      if (small) {
        const double c = lemma1_rederived_lower_constant(ctx.params);
        const double shape = std::pow(std::sinh(0.5 * r), 2.0 * ctx.params.lambda() + 1.0);
        out.push_back(make_report("lem1.small.lower_rederived@r=" + g(r), c * shape, env.measured, c, tol_lo,
                                  "origin-ball lower bracket, rederived constant"));
      }
      return out;
    });
  }
  cases.push_back([&ctx] {
    const double c = ctx.params.c();
    double lo = -INFINITY, hi = -INFINITY;
    for (double t : linspace(0.0, 2.0 * c, 1000)) {
      const double s = std::sinh(t);
      lo = std::max(lo, t - s);
      hi = std::max(hi, s - std::exp(2.0 * c) * t);
    }
    return Reports{make_report("ineq5.lower", lo, 0.0, 1.0, 0.0, "t <= sh t on [0, 2c]"),
                   make_report("ineq5.upper", hi, 0.0, std::exp(2.0 * c), 0.0, "sh t <= e^(2c) t on [0, 2c]")};
  });
  return run_cases(cases, ctx.jobs);
}

Reports suite_lemma2(const Context& ctx, const Fixtures& fx) {
  const auto ratios = lemma2_ratios(ctx);
  Reports out;
  for (const auto& reg : lemma2_regions()) {
    const double cst = fx.get(std::string("C_lem2_") + reg.key);
    out.push_back(make_report(std::string("lem2.") + reg.key, ratios.at(reg.key), cst, cst, kFixtureSlack,
                              "ball measure over the case comparison function"));
  }
  return out;
}

Reports suite_doubling(const Context& ctx, const Fixtures& fx) {
  const double cst = fx.get("C_doub");
  const double base = doubling_sup(ctx, ctx.lattice);
  const double fine = doubling_sup(ctx, ctx.lattice.refined());
  const double limit = std::pow(2.0, 2.0 * ctx.params.lambda() + 1.0);
  const double small = doubling_ratio(ctx.params, 0.0, 1e-3);
  return {make_report("doubling.sup", base, cst, cst, kFixtureSlack, "doubling ratio over the lattice"),
          make_report("doubling.refinement", rel_diff(fine, base), 0.05, cst, 0.0, "sup change under refinement"),
          make_report("doubling.small_radius_limit", std::abs(small - limit) / limit, 0.01, limit, 0.0,
                      "ratio at r = 1e-3 against 2^(2 lambda + 1)")};
}

Reports suite_theorem1(const Context& ctx, const Fixtures& fx) {
  const double cap = fx.get("C_cap");
  std::vector<Case> cases;
  for (const auto& f : ctx.corpus) {
    cases.push_back([&ctx, &f, cap] {
      const double base = domination_ratio(ctx.params, f, ctx.lattice.xs, ctx.lattice.radii);
      const auto fine_lat = ctx.lattice.refined();
      const double fine = domination_ratio(ctx.params, f, fine_lat.xs, fine_lat.radii);
      return Reports{make_report("thm1.domination." + f.name, base, kCapFactor * cap, cap, 0.0, "M_G f <= C M_mu f"),
                     make_report("thm1.refinement." + f.name, rel_diff(fine, base), 0.1, cap, 0.0,
                                 "domination ratio under refinement")};
    });
  }
  const std::vector<TestFunction> dual{bump(1.0, 2.0), exp_decay(2.0), indicator(0.5, 1.0)};
  const std::vector<std::pair<double, double>> points{{1.5, 0.5}, {0.3, 0.8}, {2.0, 1.5}};
  for (const auto& f : dual)
    for (const auto& [x, r] : points)
      cases.push_back([&ctx, f, x = x, r = r] {
        const double a = shift_average_integral(ctx.params, f, x, r);
        const double b = shift_average_kernel_form(ctx.params, f, x, r);
        return Reports{make_report("thm1.dual_form." + f.name + "@x=" + g(x) + ",r=" + g(r), rel_diff(a, b), 1e-5, 1.0,
                                   0.0, "direct and kernel forms of the shifted ball integral")};
      });
  return run_cases(cases, ctx.jobs);
}

Reports suite_theorem2(const Context& ctx, const Fixtures& fx) {
  const double cw = fx.get("C_weak"), c2 = fx.get("C_p2"), c4 = fx.get("C_p4");
  std::vector<Case> cases;
  for (const auto& f : ctx.corpus) {
    cases.push_back([&ctx, &f, cw] {
      return Reports{make_report("thm2.weak." + f.name, weak_constant(ctx, f), cw, cw, kFixtureSlack,
                                 "alpha |{M_G f > alpha}| / ||f||_1")};
    });
    cases.push_back([&ctx, &f, c2] {
      return Reports{make_report("thm2.strong_p2." + f.name, strong_ratio(ctx, f, 2.0), c2, c2, kFixtureSlack,
                                 "||M_G f||_2 / ||f||_2")};
    });
    cases.push_back([&ctx, &f, c4] {
      return Reports{make_report("thm2.strong_p4." + f.name, strong_ratio(ctx, f, 4.0), c4, c4, kFixtureSlack,
                                 "||M_G f||_4 / ||f||_4")};
    });
  }
  return run_cases(cases, ctx.jobs);
}

Reports suite_continuity(const Context& ctx, const Fixtures&) {
  std::vector<Case> cases;
  const std::vector<double> ts{0.0, 0.1, 0.5, 1.0, 2.0};
  const auto xs = linspace(0.0, 3.0, 12);
  cases.push_back([&ctx, ts, xs] {
    const TestFunction one = plain_one();
    const TestFunction id = identity_function();
    double norm_err = 0.0, id_err = 0.0;
    for (double t : ts)
      for (double x : xs) {
        norm_err = std::max(norm_err, std::abs(shift_apply(ctx.params, one, t, x) - 1.0));
        const double exact = std::cosh(x) * std::cosh(t);
        id_err = std::max(id_err, std::abs(shift_apply(ctx.params, id, t, x) - exact) / exact);
      }
    return Reports{make_report("shift.normalization", norm_err, 1e-8, 1.0, 0.0, "A_t 1 = 1"),
                   make_report("shift.identity", id_err, 1e-8, 1.0, 0.0, "A_t y = ch x ch t")};
  });
  for (const auto& f : ctx.corpus)
    for (double p : {1.0, 2.0, 4.0})
      cases.push_back([&ctx, &f, p] {
        const double base = lp_norm(ctx.params, f, p);
        Reports out;
        for (double t : {0.1, 0.25, 0.5, 1.0, 2.0})
          out.push_back(make_report("cont.contraction." + f.name + ".p=" + g(p) + "@t=" + g(t),
                                    shifted_norm(ctx.params, f, t, p), base, 1.0, 1e-6, "||A_t f||_p <= ||f||_p"));
        return out;
      });
  cases.push_back([&ctx] {
    const TestFunction f = bump(1.0, 2.0);
    std::vector<double> m;
    const std::vector<double> steps{0.4, 0.2, 0.1, 0.05};
    for (double t : steps) m.push_back(shift_modulus(ctx.params, f, t, 2.0));
    Reports out;
    for (std::size_t i = 1; i < m.size(); ++i)
      out.push_back(make_report("cont.modulus.decreasing@t=" + g(steps[i]), m[i], m[i - 1], 1.0, 0.0,
                                "||A_t f - f||_2 decreases as t -> 0", Compare::lt));
    out.push_back(make_report("cont.modulus.ratio", m.back() / m.front(), 0.1, 1.0, 0.0, "last over first", Compare::lt));
    return out;
  });
  return run_cases(cases, ctx.jobs);
}

Reports suite_corollary1(const Context& ctx, const Fixtures&) {
  const TestFunction f = bump(1.0, 2.0);
  const std::vector<double> rs{0.2, 0.1, 0.05, 0.025};
  const auto errs = parallel_map(rs.size(), ctx.jobs, [&](std::size_t i) { return differentiation_error(ctx.params, f, 1.5, rs[i]); });
  Reports out;
  for (int form = 0; form < 2; ++form) {
    const std::string tag = form == 0 ? "cor1.average" : "cor1.normalized";
    auto v = [&](std::size_t i) { return form == 0 ? errs[i].average_error : errs[i].normalized_deviation; };
    for (std::size_t i = 1; i < rs.size(); ++i)
      out.push_back(make_report(tag + ".decreasing@r=" + g(rs[i]), v(i), v(i - 1), 1.0, 0.0,
                                "error decreases as r -> 0", Compare::lt));
    out.push_back(make_report(tag + ".ratio", v(rs.size() - 1) / v(0), 0.1, 1.0, 0.0, "last over first", Compare::lt));
  }
  return out;
}

Reports suite_lemma3(const Context& ctx, const Fixtures& fx) {
  const double ce = fx.get("C_emb");
  std::vector<Case> cases;
  for (const auto& f : ctx.corpus) {
    cases.push_back([&ctx, &f, ce] {
      const auto e = embedding_check(ctx.params, f, kEmbeddingP, embedding_gamma(ctx), ctx.lattice);
      const double lp = lp_norm(ctx.params, f, 2.0);
      const double morrey0 = morrey_norm(ctx.params, f, 2.0, 0.0, true, ctx.lattice);
      return Reports{make_report("lem3.embedding." + f.name, e.lhs, ce * e.rhs, ce, kFixtureSlack,
                                 "Morrey embedding with the frozen constant"),
                     make_report("lem3.morrey_gamma0." + f.name, lp, morrey0, 1.0, 1e-6,
                                 "||f||_p <= modified Morrey norm at gamma = 0")};
    });
  }
  return run_cases(cases, ctx.jobs);
}

Reports suite_lemma4(const Context& ctx, const Fixtures& fx) {
  CStarCalibration cs;
  cs.value = fx.get("cstar");
  cs.residual = fx.get("cstar_residual");
  cs.gamma_max = fx.get("cstar_gamma_max");
  const double c2 = fx.get("cstar_secondary");
  std::vector<Case> cases;
  const std::vector<std::pair<double, double>> eigen{{1.5, 0.5}, {2.0, 1.0}, {2.5, 0.75}, {3.0, 1.5}, {4.0, 2.0}, {6.0, 1.2}};
  cases.push_back([&ctx, eigen] {
    Reports out;
    for (const auto& [gm, x] : eigen) {
      const double ev = gm * (gm + 2.0 * ctx.params.lambda());
      const double pv = legendre_p(ctx.params, gm, x);
      const double gp = apply_G(ctx.params, [&](double y) { return legendre_p(ctx.params, gm, std::acosh(y)); }, x);
      out.push_back(make_report("lem4.eigen@g=" + g(gm) + ",x=" + g(x), std::abs(gp - ev * pv) / std::abs(ev * pv), 1e-4,
                                ev, 0.0, "G P = gamma (gamma + 2 lambda) P", Compare::lt));
    }
    return out;
  });
  cases.push_back([&ctx, cs] {
    const auto& f = cstar_reference();
    std::vector<double> xs;
    for (int k = 1; k <= 9; ++k) xs.push_back(1.0 + k / 10.0);
    const auto rt = round_trip_p(ctx.params, f, cs, xs);
    return Reports{make_report("lem4.round_trip." + f.name, rt.relative_l2, 0.05, cs.value, 0.0,
                               "inverse of forward transform, relative L2")};
  });
  cases.push_back([cs, c2] {
    return Reports{make_report("lem4.cstar_stability", rel_diff(cs.value, c2), 0.02, cs.value, 0.0,
                               "c* from two reference bumps")};
  });
  const std::vector<std::pair<double, double>> mult{{0.25, 1.5}, {0.5, 1.5}, {0.5, 3.0}, {1.0, 2.0}};
  cases.push_back([&ctx, mult] {
    const TestFunction f = bump(1.1, 1.9);
    Reports out;
    for (const auto& [t, gm] : mult) {
      const auto [l, r] = shift_multiplier_check(ctx.params, f, t, Degree(gm));
      out.push_back(make_report("lem4.shift_multiplier@t=" + g(t) + ",g=" + g(gm), std::abs(l - r) / std::abs(r), 0.05,
                                legendre_q(ctx.params, Degree(gm), t), 0.0, "transform of A_t f = Q f^"));
    }
    return out;
  });
  struct ParsevalCase {
    TestFunction f, h;
    double t;
  };
  const std::vector<ParsevalCase> pcs{{bump(1.0, 2.0), bump(1.0, 2.0), 0.0}, {bump(1.0, 2.0), bump(1.1, 1.9), 0.3}};
  for (const auto& pc : pcs)
    cases.push_back([&ctx, pc, cs] {
      const auto r = parseval_check(ctx.params, pc.f, pc.h, pc.t, cs, true);
      const std::string tag = pc.f.name + "," + pc.h.name + "@t=" + g(pc.t);
      return Reports{make_report("lem4.parseval_p." + tag, rel_diff(r.lhs, r.rhs_p), 0.05, cs.value, 0.0,
                                 "inner product against c* times the P-spectral pairing"),
                     make_report("lem4.parseval_q." + tag, rel_diff(r.lhs, r.rhs_q), 0.05, cs.value, 0.0,
                                 "inner product against c* times the P/Q-spectral pairing")};
    });
  return run_cases(cases, ctx.jobs);
}

Reports suite_lemma5(const Context& ctx, const Fixtures&) {
  const HeatPotentialKernel kernel(ctx.params, ctx.cfg.alpha, 64, ctx.jobs);
  const TestFunction f = bump(1.0, 2.0);
  std::vector<Case> cases;
  for (double gm : {1.5, 2.5, 4.0})
    cases.push_back([&ctx, &kernel, f, gm] {
      const auto [l, r] = riesz_multiplier_check(ctx.params, kernel, f, gm);
      return Reports{make_report("lem5.multiplier@g=" + g(gm), std::abs(l / r - 1.0), 0.1,
                                 std::pow(gm * (gm + 2.0 * ctx.params.lambda()), -0.5 * ctx.cfg.alpha), 0.0,
                                 "transform of the heat-form potential against the power multiplier")};
    });
  return run_cases(cases, ctx.jobs);
}

Reports suite_corollary2_kernel(const Context& ctx, const Fixtures& fx) {
  const double c56 = fx.get("C_56");
  std::vector<Case> cases;
  cases.push_back([&ctx] {
    Reports out;
    for (double r : {0.05, 0.2, 0.5, 1.0, 2.0})
      for (double x : {0.0, 0.25, 0.5, 1.0, 2.0}) {
        const double h = heat_kernel(ctx.params, r, x);
        const double b = heat_kernel_bound(ctx.params, r, x);
        out.push_back(make_report("cor2.heat_bound@r=" + g(r) + ",x=" + g(x), std::abs(h), b,
                                  std::tgamma(ctx.params.lambda() + 0.5), 0.0, "|h_r| <= Gamma(lambda + 1/2) e^-r ch^-(2 lambda + 1)"));
      }
    return out;
  });
  const auto kernel = std::make_shared<HeatPotentialKernel>(ctx.params, ctx.cfg.alpha, 64, ctx.jobs);
  for (const auto& f : ctx.corpus)
    cases.push_back([&ctx, &f, kernel, c56] {
      Reports out;
      for (double t : majorant_points())
        out.push_back(make_report("cor2.kernel_majorant." + f.name + "@t=" + g(t), majorant_ratio(ctx, *kernel, f, t), c56,
                                  c56, kFixtureSlack, "|I f| over the kernel majorant"));
      return out;
    });
  return run_cases(cases, ctx.jobs);
}

Reports suite_theorem3(const Context& ctx, const Fixtures& fx) {
  const double cs = fx.get("C_sob"), cw = fx.get("C_wq");
  const PotentialParams pp = sobolev_params(ctx);
  const double n = 2.0 * ctx.params.lambda() + 1.0;
  std::vector<Case> cases;
  cases.push_back([pp, n] {
    return Reports{make_report("thm3.q_arithmetic", std::abs(1.0 / pp.p - 1.0 / pp.q - pp.alpha / n), 1e-15, pp.q, 0.0,
                               "1/p - 1/q = alpha / (2 lambda + 1)")};
  });
  for (const auto& f : ctx.corpus) {
    cases.push_back([&ctx, &f, pp] {
      double m = 0.0;
      for (double x : ctx.lattice.xs) m = std::max(m, riesz_absolute(ctx.params, pp, f, x));
      return Reports{make_report("thm3.absolute." + f.name, m, std::numeric_limits<double>::max(), 1.0, 0.0,
                                 "potential of |f| is finite", Compare::lt)};
    });
    cases.push_back([&ctx, &f, cs] {
      const double base = sobolev(ctx, f, 61);
      const double fine = sobolev(ctx, f, 121);
      return Reports{make_report("thm3.sobolev." + f.name, base, cs, cs, kFixtureSlack, "||I f||_q / ||f||_p"),
                     make_report("thm3.sobolev_refinement." + f.name, rel_diff(fine, base), 0.1, cs, 0.0,
                                 "Sobolev ratio under refinement")};
    });
  }
  cases.push_back([&ctx, cw] {
    const auto& f = ctx.corpus.front();
    return Reports{make_report("thm3.weak_1q." + f.name, weak_1q(ctx, f), cw, cw, kFixtureSlack,
                               "beta |{I f > beta}|^(1/q) / ||f||_1")};
  });
  return run_cases(cases, ctx.jobs);
}

Reports suite_theorem4(const Context& ctx, const Fixtures& fx) {
  const double cb = fx.get("C_bmo");
  const PotentialParams pp = bmo_params(ctx);
  std::vector<Case> cases;
  for (const auto& f : ctx.corpus)
    cases.push_back([&ctx, &f, cb] {
      const TestFunction h = finite_part(f);
      return Reports{make_report("thm4.bmo." + h.name, bmo(ctx, f), cb, cb, kFixtureSlack,
                                 "BMO norm of the modified potential over ||f||_p")};
    });
  cases.push_back([&ctx] {
    return Reports{make_report("thm4.bmo_constant", bmo_norm(ctx.params, constant_one(), ctx.lattice), 0.0, 0.0, 0.0,
                               "BMO norm of a constant")};
  });
  cases.push_back([&ctx, pp] {
    const TestFunction f = bump(1.0, 2.0);
    const double x = 1.5;
    const double m = modified_riesz(ctx.params, pp, f, x);
    Reports out;
    for (double r : {0.5, 2.0, 8.0}) {
      const auto s = modified_riesz_split(ctx.params, pp, f, x, r);
      out.push_back(make_report("thm4.split@r=" + g(r), rel_diff(s.f1 + s.f2, m), 1e-4, s.center.a_f, 0.0,
                                "F1 + F2 equals the modified potential"));
    }
    return out;
  });
  return run_cases(cases, ctx.jobs);
}

using SuiteFn = Reports (*)(const Context&, const Fixtures&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"lemma1", suite_lemma1},       {"lemma2", suite_lemma2},
      {"doubling", suite_doubling},   {"theorem1", suite_theorem1},
      {"theorem2", suite_theorem2},   {"continuity", suite_continuity},
      {"corollary1", suite_corollary1}, {"lemma3", suite_lemma3},
      {"lemma4", suite_lemma4},       {"lemma5", suite_lemma5},
      {"corollary2-kernel", suite_corollary2_kernel}, {"theorem3", suite_theorem3},
      {"theorem4", suite_theorem4},
  };
  return table;
}

double sup_over(const Context& ctx, const std::vector<TestFunction>& fs,
                const std::function<double(const TestFunction&)>& fn) {
  const auto v = parallel_map(fs.size(), ctx.jobs, [&](std::size_t i) { return fn(fs[i]); });
  return *std::max_element(v.begin(), v.end());
}

}  // namespace

Context::Context(const HarnessConfig& config, int j)
    : cfg(config),
      params(config.lambda, config.c),
      lattice{parse_grid(config.x_grid), RadiusGrid(parse_grid(config.radii))},
      jobs(std::max(1, j)) {
  for (const auto& spec : cfg.corpus) corpus.push_back(parse_test_function(spec));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, fn] : suite_table()) out.push_back(n);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

SuiteReport run_suite(const std::string& name, const HarnessConfig& cfg, const Fixtures& fixtures, int jobs) {
  if (!is_suite(name)) fail(ErrorKind::invalid_argument, "unknown suite '" + name + "'");
  fixtures.check(cfg);
  const auto start = std::chrono::steady_clock::now();
  const Context ctx(cfg, jobs);
  SuiteReport rep;
  rep.suite_name = name;
  rep.fixtures_version = fixtures.version;
  for (const auto& [n, fn] : suite_table()) {
    if (name != "all" && name != n) continue;
    auto cases = fn(ctx, fixtures);
    rep.cases.insert(rep.cases.end(), cases.begin(), cases.end());
  }
  rep.finish();
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Fixtures calibrate(const HarnessConfig& cfg, int jobs) {
  const Context ctx(cfg, jobs);
  Fixtures fx;
  fx.config_hash = cfg.hash();
  auto& v = fx.values;

  for (const auto& [k, ratio] : lemma2_ratios(ctx)) v["C_lem2_" + k] = ratio;
  v["C_doub"] = doubling_sup(ctx, ctx.lattice);
  v["C_cap"] = sup_over(ctx, ctx.corpus, [&](const TestFunction& f) {
    return domination_ratio(ctx.params, f, ctx.lattice.xs, ctx.lattice.radii);
  });
  v["C_weak"] = sup_over(ctx, ctx.corpus, [&](const TestFunction& f) { return weak_constant(ctx, f); });
  v["C_p2"] = sup_over(ctx, ctx.corpus, [&](const TestFunction& f) { return strong_ratio(ctx, f, 2.0); });
  v["C_p4"] = sup_over(ctx, ctx.corpus, [&](const TestFunction& f) { return strong_ratio(ctx, f, 4.0); });
  {
    const HeatPotentialKernel kernel(ctx.params, cfg.alpha, 64, ctx.jobs);
    v["C_56"] = sup_over(ctx, ctx.corpus, [&](const TestFunction& f) {
      double m = 0.0;
      for (double t : majorant_points()) m = std::max(m, majorant_ratio(ctx, kernel, f, t));
      return m;
    });
  }
  v["C_sob"] = sup_over(ctx, ctx.corpus, [&](const TestFunction& f) { return sobolev(ctx, f, 61); });
  v["C_wq"] = weak_1q(ctx, ctx.corpus.front());
  v["C_emb"] = sup_over(ctx, ctx.corpus, [&](const TestFunction& f) { return embedding_ratio(ctx, f, ctx.lattice); });
  v["C_bmo"] = sup_over(ctx, ctx.corpus, [&](const TestFunction& f) { return bmo(ctx, f); });

  const auto refs = parallel_map(2, ctx.jobs, [&](std::size_t i) {
    return cstar_for(ctx, i == 0 ? cstar_reference() : cstar_secondary());
  });
  v["cstar"] = refs[0].value;
  v["cstar_residual"] = refs[0].residual;
  v["cstar_gamma_max"] = refs[0].gamma_max;
  v["cstar_secondary"] = refs[1].value;
  v["cstar_secondary_residual"] = refs[1].residual;
  fx.labels["cstar_reference"] = refs[0].reference_function;
  fx.labels["cstar_secondary_reference"] = refs[1].reference_function;

  const auto grid = spectral_grid(ctx.params, cfg.gamma_max);
  MultiplierCalibration mc(ctx.params, grid.gamma);
  mc.precompute({0.25, 0.5, 1.0, 1.5, 2.0}, ctx.jobs);
  v["q_max_spread"] = mc.max_spread();
  const auto qr = q_references(1.0);
  fx.labels["q_references_at_t1"] = qr.primary.name + ";" + qr.secondary.name;

  const auto nominal = nominal_cstar(ctx.params);
  v["nominal_cstar"] = nominal.value;
  v["nominal_cstar_f_half"] = nominal.f_half;
  v["nominal_cstar_f_shifted"] = nominal.f_shifted;
  v["lemma1_rederived_lower"] = lemma1_rederived_lower_constant(ctx.params);

  const double two_l = 2.0 * ctx.params.lambda();
  const auto mc_ball = mc_oracle([&](const std::vector<double>& t) { return std::pow(std::sinh(t[0]), two_l); },
                                 {{0.0, 1.0}}, cfg.mc_samples, cfg.seed);
  v["mc_ball_measure_r1"] = mc_ball.value;
  v["mc_ball_measure_r1_stderr"] = mc_ball.standard_error;
  v["ball_measure_r1"] = ball_measure(ctx.params, WeightedInterval(0.0, 1.0));
  return fx;
}

}  // namespace gegenbauer::harness
