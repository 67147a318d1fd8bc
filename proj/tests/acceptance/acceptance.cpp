// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
// Usage: acceptance <gegenbauer-cli> <config> <fixtures>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "gegenbauer/function_spaces.hpp"
#include "gegenbauer/grid.hpp"
#include "gegenbauer/maximal.hpp"
#include "gegenbauer/measure.hpp"
#include "gegenbauer/riesz.hpp"
#include "gegenbauer/shift.hpp"
#include "gegenbauer/special_functions.hpp"
#include "gegenbauer/transform.hpp"
#include "harness/config.hpp"
#include "harness/suites.hpp"

using namespace gegenbauer;
namespace gh = gegenbauer::harness;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double runtime_limit;  // seconds
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

TestFunction plain_one() {
  TestFunction f;
  f.name = "one";
  f.of_x = [](double) { return 1.0; };
  f.nonnegative = true;
  return f;
}

const std::vector<double> kLambdas{0.1, 0.25, 0.4};
const std::vector<double> kShiftTs{0.0, 0.1, 0.5, 1.0, 2.0};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_cli(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::fprintf(stderr, "usage: %s <gegenbauer-cli> <config> <fixtures>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1], config_path = argv[2], fixtures_path = argv[3];
  const auto cfg = gh::HarnessConfig::load(config_path);
  const auto fx = gh::Fixtures::load(fixtures_path);
  fx.check(cfg);
  const gh::Context ctx(cfg, 1);
  const GegenbauerParams& p = ctx.params;
  const auto xs12 = linspace(0.0, 3.0, 12);

  const std::vector<Criterion> criteria{
      {1, "shift normalisation", 30.0,
       [&] {
         double worst = 0.0;
         for (double l : kLambdas)
           for (double t : kShiftTs)
             for (double x : xs12) worst = std::max(worst, std::abs(shift_apply(GegenbauerParams(l), plain_one(), t, x) - 1.0));
         return Outcome{worst <= 1e-8, fmt("max |A_t 1 - 1| = %.3g (tol 1e-8)", worst)};
       }},
      {2, "shift of the identity", 30.0,
       [&] {
         double worst = 0.0;
         for (double l : kLambdas)
           for (double t : kShiftTs)
             for (double x : xs12) {
               const double exact = std::cosh(x) * std::cosh(t);
               worst = std::max(worst, std::abs(shift_apply(GegenbauerParams(l), identity_function(), t, x) - exact) / exact);
             }
         return Outcome{worst <= 1e-8, fmt("max rel err = %.3g (tol 1e-8)", worst)};
       }},
      {3, "dual-form identity", 300.0,
       [&] {
         double worst = 0.0;
         for (double l : {0.25, 0.4})
           for (const auto& f : {bump(1.0, 2.0), exp_decay(2.0), indicator(0.5, 1.0)})
             for (auto [x, r] : {std::pair{1.5, 0.5}, std::pair{0.3, 0.8}, std::pair{2.0, 1.5}}) {
               const GegenbauerParams q(l);
               worst = std::max(worst, rel(shift_average_integral(q, f, x, r), shift_average_kernel_form(q, f, x, r)));
             }
         return Outcome{worst <= 1e-5, fmt("max rel diff = %.3g (tol 1e-5)", worst)};
       }},
      {4, "origin-ball brackets with the nominal constants", 60.0,
       [&] {
         int bad = 0, total = 0;
         double worst_lower = 0.0;
         for (double l : kLambdas) {
           const GegenbauerParams q(l, 1.0);
           for (double r : logspace(0.01, 10.0, 32)) {
             const auto e = lemma1_envelope(q, r);
             ++total;
             const bool ok = e.lower <= e.measured + e.measured_error && e.measured <= e.upper + e.measured_error;
             if (!ok) ++bad;
             worst_lower = std::max(worst_lower, e.lower / e.measured);
           }
         }
         return Outcome{bad == 0, fmt("%d/%d radii violate a bracket; max lower/measured = %.4f", bad, total, worst_lower)};
       }},
      {5, "t <= sh t <= e^(2c) t", 1.0,
       [&] {
         int bad = 0;
         for (double t : linspace(0.0, 2.0 * p.c(), 1000))
           if (!sinh_bracket_holds(t, p.c())) ++bad;
         return Outcome{bad == 0, fmt("%d/1000 grid points violate", bad)};
       }},
      {6, "contraction of the shift", 300.0,
       [&] {
         double worst = 0.0;
         for (const auto& f : ctx.corpus)
           for (double pe : {1.0, 2.0, 4.0}) {
             const double base = lp_norm(p, f, pe);
             for (double t : {0.1, 0.25, 0.5, 1.0, 2.0}) worst = std::max(worst, shifted_norm(p, f, t, pe) / base);
           }
         return Outcome{worst <= 1.0 + 1e-6, fmt("max ||A_t f||/||f|| = %.9f (bound 1 + 1e-6)", worst)};
       }},
      {7, "maximal domination", 600.0,
       [&] {
         const double cap = gh::kCapFactor * fx.get("C_cap");
         const auto fine = ctx.lattice.refined();
         double worst = 0.0, drift = 0.0;
         for (const auto& f : ctx.corpus) {
           const double a = domination_ratio(p, f, ctx.lattice.xs, ctx.lattice.radii);
           const double b = domination_ratio(p, f, fine.xs, fine.radii);
           worst = std::max(worst, a);
           drift = std::max(drift, rel(a, b));
         }
         return Outcome{worst <= cap && drift < 0.1,
                        fmt("max ratio %.4f vs 1.05 C_cap = %.4f; refinement change %.3f (< 0.1)", worst, cap, drift)};
       }},
      {8, "weak and strong type of M_G", 600.0,
       [&] {
         const double cw = fx.get("C_weak"), c2 = fx.get("C_p2"), c4 = fx.get("C_p4");
         double w = 0.0, s2 = 0.0, s4 = 0.0;
         for (const auto& f : ctx.corpus) {
           w = std::max(w, gh::pilot::weak_constant(ctx, f));
           s2 = std::max(s2, gh::pilot::strong_ratio(ctx, f, 2.0));
           s4 = std::max(s4, gh::pilot::strong_ratio(ctx, f, 4.0));
         }
         const double k = 1.0 + gh::kFixtureSlack;
         return Outcome{w <= cw * k && s2 <= c2 * k && s4 <= c4 * k,
                        fmt("weak %.4f <= %.4f, p=2 %.4f <= %.4f, p=4 %.4f <= %.4f", w, cw, s2, c2, s4, c4)};
       }},
      {9, "differentiation", 120.0,
       [&] {
         const auto f = bump(1.0, 2.0);
         std::vector<DifferentiationError> e;
         for (double r : {0.2, 0.1, 0.05, 0.025}) e.push_back(differentiation_error(p, f, 1.5, r));
         bool ok = true;
         for (std::size_t i = 1; i < e.size(); ++i)
           ok = ok && e[i].average_error < e[i - 1].average_error &&
                e[i].normalized_deviation < e[i - 1].normalized_deviation;
         const double ra = e.back().average_error / e.front().average_error;
         const double rn = e.back().normalized_deviation / e.front().normalized_deviation;
         return Outcome{ok && ra < 0.1 && rn < 0.1,
                        fmt("decreasing %s; last/first %.4f and %.4f (< 0.1)", ok ? "yes" : "no", ra, rn)};
       }},
      {10, "G eigen relation", 10.0,
       [&] {
         const GegenbauerParams q(0.25);
         double worst = 0.0;
         for (auto [g, x] : std::vector<std::pair<double, double>>{{1.5, 0.5}, {2.0, 1.0}, {2.5, 0.75}, {3.0, 1.5}, {4.0, 2.0}, {6.0, 1.2}}) {
           const double ev = g * (g + 2.0 * q.lambda()) * legendre_p(q, g, x);
           const double gp = apply_G(q, [&](double y) { return legendre_p(q, g, std::acosh(y)); }, x);
           worst = std::max(worst, std::abs(gp - ev) / std::abs(ev));
         }
         return Outcome{worst < 1e-4, fmt("max residual %.3g (< 1e-4)", worst)};
       }},
      {11, "transform round trip", 600.0,
       [&] {
         CalibrationOptions opts;
         opts.gamma_max = cfg.gamma_max;
         opts.ceiling = INFINITY;
         const auto a = calibrate_cstar(p, bump(1.0, 2.0), opts);
         const auto b = calibrate_cstar(p, bump(1.2, 1.8), opts);
         std::vector<double> xs;
         for (int k = 1; k <= 9; ++k) xs.push_back(1.0 + k / 10.0);
         const double res = round_trip_p(p, bump(1.0, 2.0), a, xs).relative_l2;
         const double spread = rel(a.value, b.value);
         return Outcome{res <= 0.05 && spread <= 0.02,
                        fmt("round-trip rel L2 %.4f (<= 0.05); c* %.4f vs %.4f, spread %.4f (<= 0.02)", res, a.value,
                            b.value, spread)};
       }},
      {12, "shift-multiplier identity", 300.0,
       [&] {
         const auto f = bump(1.1, 1.9);
         double worst = 0.0;
         for (auto [t, g] : std::vector<std::pair<double, double>>{{0.25, 1.5}, {0.5, 1.5}, {0.5, 3.0}, {1.0, 2.0}}) {
           const auto [l, r] = shift_multiplier_check(p, f, t, Degree(g));
           worst = std::max(worst, std::abs(l - r) / std::abs(r));
         }
         return Outcome{worst <= 0.05, fmt("max rel diff %.3g (<= 0.05) on %s", worst, f.name.c_str())};
       }},
      {13, "heat-kernel bound", 120.0,
       [&] {
         double worst = 0.0;
         for (double r : {0.05, 0.2, 0.5, 1.0, 2.0})
           for (double x : {0.0, 0.25, 0.5, 1.0, 2.0})
             worst = std::max(worst, std::abs(heat_kernel(p, r, x)) / heat_kernel_bound(p, r, x));
         return Outcome{worst <= 1.0, fmt("max |h_r| / bound = %.4f", worst)};
       }},
      {14, "Riesz multiplier", 600.0,
       [&] {
         const HeatPotentialKernel k(p, cfg.alpha);
         const auto f = bump(1.0, 2.0);
         double worst = 0.0;
         std::string ratios;
         for (double g : {1.5, 2.5, 4.0}) {
           const auto [l, r] = riesz_multiplier_check(p, k, f, g);
           worst = std::max(worst, std::abs(l / r - 1.0));
           ratios += fmt(" %.4f", l / r);
         }
         return Outcome{worst <= 0.1, "ratios" + ratios + fmt(" (|ratio - 1| <= 0.1, worst %.3f)", worst)};
       }},
      {15, "Riesz potential bounds", 600.0,
       [&] {
         const auto pp = gh::pilot::sobolev_params(ctx);
         const double n = 2.0 * p.lambda() + 1.0;
         const double qerr = std::abs(1.0 / pp.p - 1.0 / pp.q - pp.alpha / n);
         bool finite = true;
         for (const auto& f : ctx.corpus)
           for (double x : ctx.lattice.xs) finite = finite && std::isfinite(riesz_absolute(p, pp, f, x));
         double sob = 0.0;
         for (const auto& f : ctx.corpus) sob = std::max(sob, gh::pilot::sobolev(ctx, f, 61));
         const double wq = gh::pilot::weak_1q(ctx, ctx.corpus.front());
         const double cs = fx.get("C_sob"), cw = fx.get("C_wq"), k = 1.0 + gh::kFixtureSlack;
         return Outcome{qerr <= 1e-15 && finite && sob <= cs * k && wq <= cw * k,
                        fmt("q = %g, |1/p - 1/q - alpha/n| = %.2g; absolute %s; Sobolev %.4f <= %.4f; weak (1,q) %.4f <= %.4f",
                            pp.q, qerr, finite ? "finite" : "NOT finite", sob, cs, wq, cw)};
       }},
      {16, "embedding and BMO", 600.0,
       [&] {
         double emb = 0.0, b = 0.0;
         for (const auto& f : ctx.corpus) {
           emb = std::max(emb, gh::pilot::embedding_ratio(ctx, f, ctx.lattice));
           b = std::max(b, gh::pilot::bmo(ctx, f));
         }
         const double zero = bmo_norm(p, constant_one(), ctx.lattice);
         const double ce = fx.get("C_emb"), cb = fx.get("C_bmo"), k = 1.0 + gh::kFixtureSlack;
         return Outcome{emb <= ce * k && b <= cb * k && zero == 0.0,
                        fmt("embedding %.4f <= %.4f; BMO ratio %.4f <= %.4f; bmo(constant) = %g", emb, ce, b, cb, zero)};
       }},
      {17, "verify all", 900.0,
       [&] {
         const std::string base = cli + " verify all --config '" + config_path + "' --fixtures '" + fixtures_path + "'";
         const std::string out1 = "acceptance_verify_jobs1.txt", out8 = "acceptance_verify_jobs8.txt";
         const auto t0 = std::chrono::steady_clock::now();
         const int code1 = run_cli(base + " --jobs 1 > " + out1);
         const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
         const int code8 = run_cli(base + " --jobs 8 > " + out8);
         const std::string a = slurp(out1), b = slurp(out8);
         const bool same = !a.empty() && a == b;
         const auto last = a.rfind("# overall");
         const std::string summary = last == std::string::npos ? "no summary" : a.substr(last, a.find('\n', last) - last);
         return Outcome{code1 == 0 && code8 == 0 && same && secs < 900.0,
                        fmt("exit %d / %d, %s, jobs 1 vs 8 %s, %.0f s for --jobs 1", code1, code8, summary.c_str(),
                            same ? "byte-identical" : "DIFFERENT", secs)};
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // Criterion 17 times its own --jobs 1 run; the second run is the determinism check.
    const bool in_time = c.id == 17 || secs < c.runtime_limit;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("criterion %2d %s  %s: %s [%.1f s, limit %.0f s%s]\n", c.id, pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), secs, c.runtime_limit, in_time ? "" : ", OVER TIME");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
