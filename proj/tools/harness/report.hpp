#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace gegenbauer::harness {

enum class Compare {
  le,  // lhs <= rhs (1 + tolerance)
  lt,  // lhs < rhs
};

struct InequalityReport {
  std::string statement_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double empirical_constant = 0.0;
  double tolerance = 0.0;
  Compare compare = Compare::le;
  bool pass = false;
  std::string provenance;

  std::string line() const;
};

InequalityReport make_report(std::string id, double lhs, double rhs, double constant, double tolerance,
                             std::string provenance, Compare compare = Compare::le);

struct SuiteReport {
  std::string suite_name;
  std::vector<InequalityReport> cases;
  std::string fixtures_version;
  bool overall = false;
  double wall_time = 0.0;

  void finish();
  // One line per case plus a closing summary; no timings, so it is identical
  // for any worker count.
  std::string text() const;
  nlohmann::json json() const;
};

}  // namespace gegenbauer::harness
