#pragma once

#include <map>
#include <string>
#include <vector>

#include "gegenbauer/maximal.hpp"
#include "gegenbauer/params.hpp"
#include "gegenbauer/riesz.hpp"
#include "gegenbauer/test_function.hpp"
#include "harness/config.hpp"
#include "harness/report.hpp"

namespace gegenbauer::harness {

struct Context {
  HarnessConfig cfg;
  GegenbauerParams params;
  std::vector<TestFunction> corpus;
  Lattice lattice;
  int jobs = 1;

  Context(const HarnessConfig& config, int jobs);
};

inline constexpr double kFixtureSlack = 1e-6;  // relative slack against frozen constants
inline constexpr double kCapFactor = 1.05;     // C_cap margin

// Pilot quantities; calibrate freezes them and the suites re-measure them.
namespace pilot {
std::map<std::string, double> lemma2_ratios(const Context& ctx);
double doubling_sup(const Context& ctx, const Lattice& lat);
double weak_constant(const Context& ctx, const TestFunction& f);
double strong_ratio(const Context& ctx, const TestFunction& f, double p);
double majorant_ratio(const Context& ctx, const HeatPotentialKernel& kernel, const TestFunction& f, double t);
const std::vector<double>& majorant_points();
PotentialParams sobolev_params(const Context& ctx);
double sobolev(const Context& ctx, const TestFunction& f, int count);
double weak_1q(const Context& ctx, const TestFunction& f);
double embedding_gamma(const Context& ctx);
double embedding_ratio(const Context& ctx, const TestFunction& f, const Lattice& lat);
PotentialParams bmo_params(const Context& ctx);
// Non-compact functions are restricted to [0, 12] first.
double bmo(const Context& ctx, const TestFunction& f);
}  // namespace pilot

// lemma1 ... theorem4, in the order `all` runs them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs a named suite (or `all`) against checked fixtures.
SuiteReport run_suite(const std::string& name, const HarnessConfig& cfg, const Fixtures& fixtures, int jobs);

// Pilot run producing every frozen constant for `cfg`.
Fixtures calibrate(const HarnessConfig& cfg, int jobs);

}  // namespace gegenbauer::harness
