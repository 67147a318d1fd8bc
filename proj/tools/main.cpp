#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "gegenbauer/error.hpp"
#include "harness/config.hpp"
#include "harness/eval.hpp"
#include "harness/suites.hpp"

namespace gh = gegenbauer::harness;
using gegenbauer::ErrorKind;

namespace {

enum Exit { ok = 0, failing = 1, usage = 2, numerical = 3, fixtures = 4 };

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument:
    case ErrorKind::invalid_interval:
      return usage;
    case ErrorKind::missing_fixture:
      return fixtures;
    default:
      return numerical;
  }
}

std::string default_config() { return std::string(GEGENBAUER_FIXTURES_DIR) + "/default.conf"; }

std::string default_fixtures() {
  if (const char* env = std::getenv("GEGENBAUER_FIXTURES"); env && *env) return env;
  return std::string(GEGENBAUER_FIXTURES_DIR) + "/default.fixtures";
}

int default_jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) gegenbauer::fail(ErrorKind::invalid_argument, "cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gegenbauer harmonic analysis: operators, verification suites, calibration"};
  app.require_subcommand(1);

  gh::EvalOptions eo;
  eo.jobs = default_jobs();
  eo.config_path = default_config();
  eo.fixtures_path = default_fixtures();
  std::string op;
  auto* eval = app.add_subcommand("eval", "Evaluate an operator and print CSV");
  eval->add_option("operator", op, "Operator")->required()->check(CLI::IsMember(gh::eval_operators()));
  eval->add_option("--lambda", eo.lambda, "Gegenbauer parameter in (0, 1/2)");
  eval->add_option("--c", eo.c, "Regime constant c >= 1");
  eval->add_option("--f", eo.f, "Test function, e.g. bump:1,2");
  eval->add_option("--t", eo.t, "Shift parameter");
  eval->add_option("--x", eo.x, "Ball center");
  eval->add_option("--r", eo.r, "Heat-kernel time");
  eval->add_option("--x-grid", eo.x_grid, "Evaluation grid (lin:a:b:n, log:a:b:n, a:b:step or a list)");
  eval->add_option("--r-grid", eo.r_grid, "Radius grid");
  eval->add_option("--gamma-grid", eo.gamma_grid, "Spectral grid");
  eval->add_option("--alpha", eo.alpha, "Potential order");
  eval->add_option("--p", eo.p, "Lebesgue exponent");
  eval->add_option("--morrey-gamma", eo.morrey_gamma, "Morrey exponent");
  eval->add_flag("--modified", eo.modified, "Use the modified Morrey normalisation");
  eval->add_option("--config", eo.config_path, "Config for the fixtures (inverse-p)");
  eval->add_option("--fixtures", eo.fixtures_path, "Fixtures file (inverse-p)");
  eval->add_option("--jobs", eo.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string suite, v_config = default_config(), v_fixtures = default_fixtures(), v_json;
  int v_jobs = default_jobs();
  auto* verify = app.add_subcommand("verify", "Run a verification suite against frozen fixtures");
  verify->add_option("suite", suite, "Suite name or all")->required();
  verify->add_option("--config", v_config, "Config file");
  verify->add_option("--fixtures", v_fixtures, "Fixtures file");
  verify->add_option("--json", v_json, "Write the JSON sidecar here");
  verify->add_option("--jobs", v_jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string c_config = default_config(), c_out;
  int c_jobs = default_jobs();
  auto* calib = app.add_subcommand("calibrate", "Run the pilot and write the fixtures file");
  calib->add_option("--config", c_config, "Config file");
  calib->add_option("--out", c_out, "Output path (stdout when omitted)");
  calib->add_option("--jobs", c_jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (eval->parsed()) {
      gh::run_eval(op, eo, std::cout);
      return ok;
    }
    if (verify->parsed()) {
      if (!gh::is_suite(suite)) gegenbauer::fail(ErrorKind::invalid_argument, "unknown suite '" + suite + "'");
      const auto cfg = gh::HarnessConfig::load(v_config);
      const auto fx = gh::Fixtures::load(v_fixtures);
      const auto rep = gh::run_suite(suite, cfg, fx, v_jobs);
      std::cout << rep.text();
      std::cerr << "wall time " << rep.wall_time << " s\n";
      if (!v_json.empty()) write_file(v_json, rep.json().dump(2) + "\n");
      return rep.overall ? ok : failing;
    }
    const auto cfg = gh::HarnessConfig::load(c_config);
    const auto text = gh::calibrate(cfg, c_jobs).text();
    if (c_out.empty())
      std::cout << text;
    else
      write_file(c_out, text);
    return ok;
  } catch (const gegenbauer::Error& e) {
    std::cerr << "gegenbauer: " << e.what() << '\n';
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "gegenbauer: " << e.what() << '\n';
    return numerical;
  }
}
