#include <cmath>
#include <sstream>

#include "doctest.h"
#include "gegenbauer/error.hpp"
#include "harness/config.hpp"
#include "harness/eval.hpp"
#include "harness/report.hpp"
#include "harness/suites.hpp"

using namespace gegenbauer;
using namespace gegenbauer::harness;

TEST_CASE("config parsing") {
  const auto cfg = HarnessConfig::parse("# comment\nlambda = 0.1\ncorpus = bump:1,2; exp_decay:3\n");
  CHECK(cfg.lambda == 0.1);
  CHECK(cfg.corpus.size() == 2);
  CHECK(cfg.alpha == 0.5);
  CHECK_THROWS_AS(HarnessConfig::parse("lambda = 0.7\n"), Error);
  CHECK_THROWS_AS(HarnessConfig::parse("colour = red\n"), Error);
  CHECK_THROWS_AS(HarnessConfig::parse("lambda = abc\n"), Error);
  CHECK(HarnessConfig::parse(cfg.canonical()).canonical() == cfg.canonical());
  CHECK(cfg.hash() != HarnessConfig{}.hash());
  CHECK(HarnessConfig::parse("lambda = 0.25\n").hash() == HarnessConfig{}.hash());
}

TEST_CASE("hashing and formatting") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(hex64(fnv1a64("a")) == "af63dc4c8601ec8c");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_double(M_PI)) == M_PI);
}

TEST_CASE("fixtures round trip and hash check") {
  const HarnessConfig cfg;
  Fixtures fx;
  fx.config_hash = cfg.hash();
  fx.values["C_cap"] = 2.5;
  fx.labels["cstar_reference"] = "bump(1,2)";
  const auto back = Fixtures::parse(fx.text());
  CHECK(back.text() == fx.text());
  CHECK(back.get("C_cap") == 2.5);
  CHECK_NOTHROW(back.check(cfg));
  HarnessConfig other;
  other.lambda = 0.1;
  try {
    back.check(other);
    FAIL("expected a hash mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::missing_fixture);
  }
  CHECK_THROWS_AS(back.get("C_none"), Error);
  try {
    Fixtures::load("/nonexistent/fixtures");
    FAIL("expected a missing fixture");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::missing_fixture);
  }
}

TEST_CASE("inequality reports") {
  const auto ok = make_report("x.ok", 1.0, 1.0, 2.0, 0.0, "equal");
  CHECK(ok.pass);
  CHECK(ok.line() == "x.ok 1 1 2 pass");
  CHECK(make_report("x.tol", 1.05, 1.0, 1.0, 0.1, "within tolerance").pass);
  CHECK_FALSE(make_report("x.bad", 1.2, 1.0, 1.0, 0.1, "outside").pass);
  CHECK_FALSE(make_report("x.lt", 1.0, 1.0, 1.0, 0.0, "strict", Compare::lt).pass);
  CHECK_FALSE(make_report("x.nan", NAN, 1.0, 1.0, 0.0, "nan").pass);

  SuiteReport rep;
  rep.suite_name = "demo";
  rep.fixtures_version = "1";
  rep.cases = {ok, make_report("x.bad", 2.0, 1.0, 1.0, 0.0, "outside")};
  rep.finish();
  CHECK_FALSE(rep.overall);
  const auto text = rep.text();
  CHECK(text.rfind("# suite demo fixtures-version 1\n", 0) == 0);
  CHECK(text.find("# overall fail 1/2") != std::string::npos);
  CHECK(rep.json()["cases"].size() == 2);
}

TEST_CASE("suite names") {
  CHECK(suite_names().size() == 13);
  CHECK(is_suite("all"));
  CHECK(is_suite("corollary2-kernel"));
  CHECK_FALSE(is_suite("lemma9"));
}

TEST_CASE("eval output") {
  EvalOptions o;
  o.t = 0.5;
  o.x_grid = "0.1:3:0.1";
  std::ostringstream out;
  run_eval("shift", o, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,value");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 30);

  EvalOptions m;
  m.x = 0.0;
  m.r_grid = "log:0.01:10:32";
  std::ostringstream mo;
  run_eval("measure", m, mo);
  CHECK(mo.str().rfind("r,measure,lower,upper\n", 0) == 0);

  EvalOptions bad;
  bad.lambda = 0.7;
  bad.t = 0.5;
  std::ostringstream sink;
  try {
    run_eval("shift", bad, sink);
    FAIL("expected invalid lambda");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_argument);
    CHECK(std::string(e.what()).find("(0, 1/2)") != std::string::npos);
  }
  CHECK_THROWS_AS(run_eval("laplace", o, sink), Error);
  EvalOptions no_t;
  CHECK_THROWS_AS(run_eval("shift", no_t, sink), Error);
}
