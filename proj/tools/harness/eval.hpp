#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gegenbauer::harness {

struct EvalOptions {
  double lambda = 0.25;
  double c = 1.0;
  std::string f = "bump:1,2";
  std::optional<double> t;
  std::optional<double> x;
  std::optional<double> r;
  std::optional<std::string> x_grid;
  std::optional<std::string> r_grid;
  std::optional<std::string> gamma_grid;
  double alpha = 0.5;
  double p = 2.0;
  std::optional<double> morrey_gamma;
  bool modified = false;
  int jobs = 1;
  std::string config_path;    // inverse-p only
  std::string fixtures_path;  // inverse-p only
};

const std::vector<std::string>& eval_operators();

// Writes CSV with a header row naming the columns.
void run_eval(const std::string& op, const EvalOptions& opts, std::ostream& out);

}  // namespace gegenbauer::harness
