#pragma once

#include <string>
#include <vector>

namespace gegenbauer {

std::vector<double> linspace(double lo, double hi, int count);
std::vector<double> logspace(double lo, double hi, int count);

// "lin:a:b:n", "log:a:b:n", "a:b:step" (inclusive of b up to roundoff), or a
// comma separated list. The result is strictly increasing.
std::vector<double> parse_grid(const std::string& text);

// Inserts the midpoint (geometric when both ends are positive and `geometric`
// is set) between neighbours.
std::vector<double> refine_grid(const std::vector<double>& grid, bool geometric);

}  // namespace gegenbauer
