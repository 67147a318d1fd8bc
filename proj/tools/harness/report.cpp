#include "harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "harness/config.hpp"

namespace gegenbauer::harness {

std::string InequalityReport::line() const {
  std::ostringstream os;
  os << statement_id << ' ' << format_double(lhs) << ' ' << format_double(rhs) << ' '
     << format_double(empirical_constant) << ' ' << (pass ? "pass" : "fail");
  return os.str();
}

InequalityReport make_report(std::string id, double lhs, double rhs, double constant, double tolerance,
                             std::string provenance, Compare compare) {
  InequalityReport r;
  r.statement_id = std::move(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.empirical_constant = constant;
  r.tolerance = tolerance;
  r.compare = compare;
  r.provenance = std::move(provenance);
  if (std::isnan(lhs) || std::isnan(rhs))
    r.pass = false;
  else if (compare == Compare::lt)
    r.pass = lhs < rhs;
  else
    r.pass = lhs <= rhs + tolerance * std::abs(rhs);
  return r;
}

void SuiteReport::finish() {
  overall = std::all_of(cases.begin(), cases.end(), [](const InequalityReport& r) { return r.pass; });
}

std::string SuiteReport::text() const {
  std::ostringstream os;
  os << "# suite " << suite_name << " fixtures-version " << fixtures_version << '\n';
  for (const auto& c : cases) os << c.line() << '\n';
  const auto failed = std::count_if(cases.begin(), cases.end(), [](const InequalityReport& r) { return !r.pass; });
  os << "# overall " << (overall ? "pass" : "fail") << ' ' << cases.size() - static_cast<std::size_t>(failed) << '/'
     << cases.size() << '\n';
  return os.str();
}

nlohmann::json SuiteReport::json() const {
  nlohmann::json j;
  j["suite_name"] = suite_name;
  j["fixtures_version"] = fixtures_version;
  j["overall"] = overall ? "pass" : "fail";
  j["wall_time"] = wall_time;
  auto num = [](double v) -> nlohmann::json {
    if (std::isfinite(v)) return v;
    return format_double(v);
  };
  nlohmann::json cases_json = nlohmann::json::array();
  for (const auto& c : cases) {
    cases_json.push_back({{"statement_id", c.statement_id},
                          {"lhs", num(c.lhs)},
                          {"rhs", num(c.rhs)},
                          {"empirical_constant", num(c.empirical_constant)},
                          {"tolerance", num(c.tolerance)},
                          {"comparison", c.compare == Compare::lt ? "lt" : "le"},
                          {"pass", c.pass},
                          {"provenance", c.provenance}});
  }
  j["cases"] = std::move(cases_json);
  return j;
}

}  // namespace gegenbauer::harness
