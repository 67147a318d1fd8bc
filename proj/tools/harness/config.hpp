#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gegenbauer::harness {

// Line-oriented `key = value` configuration; `#` starts a comment.
struct HarnessConfig {
  double lambda = 0.25;
  double c = 1.0;
  double alpha = 0.5;
  double gamma_max = 40.0;
  std::vector<std::string> corpus{"bump:1,2", "bump:1,1.5", "exp_decay:2", "indicator:0.5,1"};
  std::string x_grid = "lin:0:3:13";
  std::string radii = "log:0.001:10:24";
  std::uint64_t seed = 20240917;
  std::int64_t mc_samples = 1000000;

  static HarnessConfig parse(const std::string& text);
  static HarnessConfig load(const std::string& path);

  // Fixed key order, numbers at 17 significant digits.
  std::string canonical() const;
  std::uint64_t hash() const;
};

std::uint64_t fnv1a64(const std::string& text);
std::string hex64(std::uint64_t v);
std::string format_double(double v);

struct Fixtures {
  static constexpr const char* kVersion = "1";

  std::uint64_t config_hash = 0;
  std::string version = kVersion;
  std::map<std::string, double> values;
  std::map<std::string, std::string> labels;

  static Fixtures parse(const std::string& text);
  // Fails with missing_fixture when the file is absent or unreadable.
  static Fixtures load(const std::string& path);

  double get(const std::string& key) const;
  std::string text() const;
  // Fails with missing_fixture on a hash or version mismatch.
  void check(const HarnessConfig& cfg) const;
};

}  // namespace gegenbauer::harness
