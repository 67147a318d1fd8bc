#include "harness/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gegenbauer/error.hpp"

namespace gegenbauer::harness {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) fail(ErrorKind::invalid_argument, "config key '" + key + "' needs a number");
  return out;
}

std::int64_t to_int(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  long long out = 0;
  try {
    out = std::stoll(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) fail(ErrorKind::invalid_argument, "config key '" + key + "' needs an integer");
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string read_file(const std::string& path, ErrorKind kind, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(kind, std::string("cannot read ") + what + " '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

HarnessConfig HarnessConfig::parse(const std::string& text) {
  HarnessConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::invalid_argument, "config line " + std::to_string(lineno) + " is not `key = value`");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "lambda")
      cfg.lambda = to_double(key, value);
    else if (key == "c")
      cfg.c = to_double(key, value);
    else if (key == "alpha")
      cfg.alpha = to_double(key, value);
    else if (key == "gamma_max")
      cfg.gamma_max = to_double(key, value);
    else if (key == "corpus")
      cfg.corpus = split(value, ';');
    else if (key == "x_grid")
      cfg.x_grid = value;
    else if (key == "radii")
      cfg.radii = value;
    else if (key == "seed")
      cfg.seed = static_cast<std::uint64_t>(to_int(key, value));
    else if (key == "mc_samples")
      cfg.mc_samples = to_int(key, value);
    else
      fail(ErrorKind::invalid_argument, "unknown config key '" + key + "'");
  }
  if (!(cfg.lambda > 0.0 && cfg.lambda < 0.5)) fail(ErrorKind::invalid_argument, "config lambda must lie in (0, 1/2)");
  if (!(cfg.c >= 1.0)) fail(ErrorKind::invalid_argument, "config c must be >= 1");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 2.0 * cfg.lambda + 1.0))
    fail(ErrorKind::invalid_argument, "config alpha must lie in (0, 2 lambda + 1)");
  if (!(cfg.gamma_max > 1.1)) fail(ErrorKind::invalid_argument, "config gamma_max must exceed 1.1");
  if (cfg.corpus.empty()) fail(ErrorKind::invalid_argument, "config corpus is empty");
  if (cfg.mc_samples < 1000) fail(ErrorKind::invalid_argument, "config mc_samples must be >= 1000");
  return cfg;
}

HarnessConfig HarnessConfig::load(const std::string& path) {
  return parse(read_file(path, ErrorKind::invalid_argument, "config"));
}

std::string HarnessConfig::canonical() const {
  std::ostringstream os;
  os << "lambda=" << format_double(lambda) << '\n'
     << "c=" << format_double(c) << '\n'
     << "alpha=" << format_double(alpha) << '\n'
     << "gamma_max=" << format_double(gamma_max) << '\n'
     << "corpus=";
  for (std::size_t i = 0; i < corpus.size(); ++i) os << (i ? ";" : "") << corpus[i];
  os << '\n'
     << "x_grid=" << x_grid << '\n'
     << "radii=" << radii << '\n'
     << "seed=" << seed << '\n'
     << "mc_samples=" << mc_samples << '\n';
  return os.str();
}

std::uint64_t HarnessConfig::hash() const { return fnv1a64(canonical()); }

Fixtures Fixtures::parse(const std::string& text) {
  Fixtures fx;
  bool have_hash = false;
  fx.version.clear();
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::stringstream hs(line.substr(1));
      std::string tag, value;
      hs >> tag >> value;
      if (tag == "config-hash") {
        try {
          fx.config_hash = std::stoull(value, nullptr, 16);
        } catch (const std::exception&) {
          fail(ErrorKind::missing_fixture, "malformed config hash in fixtures");
        }
        have_hash = true;
      } else if (tag == "fixtures-version") {
        fx.version = value;
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorKind::missing_fixture, "malformed fixtures line '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == value.size() && !value.empty())
      fx.values[key] = v;
    else
      fx.labels[key] = value;
  }
  if (!have_hash) fail(ErrorKind::missing_fixture, "fixtures lack a config-hash header");
  return fx;
}

Fixtures Fixtures::load(const std::string& path) {
  return parse(read_file(path, ErrorKind::missing_fixture, "fixtures"));
}

double Fixtures::get(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end()) fail(ErrorKind::missing_fixture, "fixture '" + key + "' is missing");
  return it->second;
}

std::string Fixtures::text() const {
  std::ostringstream os;
  os << "# config-hash " << hex64(config_hash) << '\n' << "# fixtures-version " << version << '\n';
  for (const auto& [k, v] : values) os << k << " = " << format_double(v) << '\n';
  for (const auto& [k, v] : labels) os << k << " = " << v << '\n';
  return os.str();
}

void Fixtures::check(const HarnessConfig& cfg) const {
  if (version != kVersion) fail(ErrorKind::missing_fixture, "fixtures version '" + version + "' is not supported");
  if (config_hash != cfg.hash())
    fail(ErrorKind::missing_fixture, "fixtures were produced under config " + hex64(config_hash) +
                                         ", current config is " + hex64(cfg.hash()) + "; rerun calibrate");
}

}  // namespace gegenbauer::harness
