#include "gegenbauer/transform.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <memory>
#include <sstream>

#include "gegenbauer/error.hpp"
#include "gegenbauer/measure.hpp"
#include "gegenbauer/parallel.hpp"
#include "gegenbauer/shift.hpp"
#include "gegenbauer/special_functions.hpp"

namespace gegenbauer {

namespace {

constexpr int kPanelNodes = 16;

QuadratureSpec forward_spec() { return QuadratureSpec{}.with_tol(1e-300, 1e-9); }

// Nodes and weights for the integral of g(s) sh^(2 lambda) s ds over the
// pieces between `edges`. A piece starting at 0 uses s = L u^(1/(1+2 lambda)),
// which absorbs s^(2 lambda).
FixedRule weighted_rule(const GegenbauerParams& p, const std::vector<double>& edges, int panels) {
  const double two_l = 2.0 * p.lambda();
  FixedRule out;
  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    const double a = edges[e], b = edges[e + 1];
    if (b <= a) continue;
    if (a == 0.0) {
      const double k = 1.0 / (1.0 + two_l);
      const FixedRule u = composite_gauss({0.0, 1.0}, panels, kPanelNodes);
      const double scale = std::pow(b, 1.0 + two_l) * k;
      for (std::size_t i = 0; i < u.nodes.size(); ++i) {
        const double s = b * std::pow(u.nodes[i], k);
        out.nodes.push_back(s);
        out.weights.push_back(scale * u.weights[i] * std::pow(std::sinh(s) / s, two_l));
      }
    } else {
      const FixedRule r = composite_gauss({a, b}, panels, kPanelNodes);
      for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        out.nodes.push_back(r.nodes[i]);
        out.weights.push_back(r.weights[i] * std::pow(std::sinh(r.nodes[i]), two_l));
      }
    }
  }
  return out;
}

std::vector<double> piece_edges(double lo, double hi, const std::vector<double>& features) {
  std::vector<double> edges{lo};
  for (double s : features)
    if (s > lo && s < hi) edges.push_back(s);
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

// For each gamma, the sum over nodes of w_j g(s_j) P_gamma(ch s_j).
std::vector<double> fixed_p_transform(const GegenbauerParams& p, const FixedRule& rule, const std::vector<double>& g,
                                      const std::vector<double>& gammas) {
  std::vector<double> out(gammas.size());
  std::vector<double> terms(rule.nodes.size());
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
      terms[j] = g[j] == 0.0 ? 0.0 : rule.weights[j] * g[j] * legendre_p(p, gammas[k], rule.nodes[j]);
    out[k] = pairwise_sum(terms);
  }
  return out;
}

struct RowWithError {
  std::vector<double> value;
  std::vector<double> error;
};

// P-transform of a smooth function supported in [lo, hi] at two resolutions.
RowWithError reference_transform(const GegenbauerParams& p, const std::function<double(double)>& g, double lo,
                                 double hi, const std::vector<double>& gammas) {
  RowWithError out;
  std::vector<double> coarse;
  for (int panels : {16, 8}) {
    const FixedRule rule = weighted_rule(p, {lo, hi}, panels);
    std::vector<double> vals(rule.nodes.size());
    for (std::size_t j = 0; j < vals.size(); ++j) vals[j] = g(rule.nodes[j]);
    auto row = fixed_p_transform(p, rule, vals, gammas);
    if (panels == 16)
      out.value = std::move(row);
    else
      coarse = std::move(row);
  }
  out.error.resize(gammas.size());
  for (std::size_t k = 0; k < gammas.size(); ++k) out.error[k] = std::abs(out.value[k] - coarse[k]);
  return out;
}

std::vector<double> quotient_row(const GegenbauerParams& p, const TestFunction& ref, double t,
                                 const std::vector<double>& gammas) {
  require(ref.support.has_value(), "multiplier reference needs compact support");
  const auto [a, b] = *ref.support;
  require(a >= t, "multiplier reference must be supported beyond t");
  const auto den = reference_transform(p, ref.of_x, a, b, gammas);
  const auto num = reference_transform(p, [&](double s) { return shift_apply(p, ref, t, s); }, a - t, b + t, gammas);
  std::vector<double> out(gammas.size());
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    if (!(std::abs(den.value[k]) > 100.0 * den.error[k])) {
      std::ostringstream os;
      os << "reference transform " << den.value[k] << " within 100x its error " << den.error[k] << " at gamma "
         << gammas[k];
      fail(ErrorKind::ill_conditioned, os.str());
    }
    out[k] = num.value[k] / den.value[k];
  }
  return out;
}

void require_gammas(const std::vector<double>& gammas) {
  for (double g : gammas) require(std::isfinite(g) && g >= 1.0, "degrees must be >= 1");
}

}  // namespace

SpectralGrid spectral_grid(const GegenbauerParams& p, double gamma_max, int near_nodes, double panel_width,
                           int panel_nodes) {
  const double l = p.lambda();
  SpectralGrid out;
  out.gamma_max = gamma_max;
  require(std::isfinite(gamma_max) && gamma_max > 1.0 + out.delta0, "gamma_max must exceed 1.1");
  require(panel_width > 0.0, "panel width must be positive");
  const double k = 1.0 / (l + 0.5);
  const FixedRule u = gauss_legendre(near_nodes);
  for (std::size_t i = 0; i < u.nodes.size(); ++i) {
    const double ui = 0.5 * (u.nodes[i] + 1.0);
    const double g = 1.0 + out.delta0 * std::pow(ui, k);
    out.gamma.push_back(g);
    out.weight.push_back(0.5 * u.weights[i] * std::pow(out.delta0, l + 0.5) * k * std::pow(g + 1.0, l - 0.5));
  }
  const double start = 1.0 + out.delta0;
  const int panels = std::max(1, static_cast<int>(std::ceil((gamma_max - start) / panel_width)));
  const FixedRule far = composite_gauss({start, gamma_max}, panels, panel_nodes);
  for (std::size_t i = 0; i < far.nodes.size(); ++i) {
    const double g = far.nodes[i];
    out.gamma.push_back(g);
    out.weight.push_back(far.weights[i] * std::pow(g * g - 1.0, l - 0.5));
  }
  return out;
}

void SpectralFunction::validate() const {
  require(gamma_grid.size() == values.size() && values.size() == weights.size(), "spectral arrays must match");
  for (std::size_t i = 0; i < gamma_grid.size(); ++i) {
    require(gamma_grid[i] > 1.0, "spectral grid must start above 1");
    if (i > 0) require(gamma_grid[i] > gamma_grid[i - 1], "spectral grid must be increasing");
    if (!std::isfinite(values[i])) fail(ErrorKind::non_finite, "spectral value is not finite");
  }
}

std::string SpectralFunction::to_csv() const {
  std::ostringstream os;
  os << std::setprecision(17) << "gamma,value\n";
  for (std::size_t i = 0; i < gamma_grid.size(); ++i) os << gamma_grid[i] << ',' << values[i] << '\n';
  return os.str();
}

SpectralFunction SpectralFunction::scaled(double c) const {
  SpectralFunction out = *this;
  for (double& v : out.values) v *= c;
  return out;
}

IntegralResult forward_p_result(const GegenbauerParams& p, const TestFunction& f, const Degree& gamma) {
  if (f.constant && *f.constant == 0.0) return {};
  if (f.support && f.support->first >= f.support->second) return {};
  const double g = gamma.value();
  const double lo = f.support ? f.support->first : 0.0;
  const double hi = truncation_extent(f, 1e-14);
  const auto bps = f.features();
  return weighted_integral(p, [&](double s) { return f.at_x(s) * legendre_p(p, g, s); }, lo, hi, forward_spec(), bps);
}

double forward_p(const GegenbauerParams& p, const TestFunction& f, const Degree& gamma) {
  return forward_p_result(p, f, gamma).value;
}

SpectralFunction forward_p_spectrum(const GegenbauerParams& p, const TestFunction& f, const SpectralGrid& grid,
                                    int jobs) {
  SpectralFunction out;
  out.gamma_grid = grid.gamma;
  out.weights = grid.weight;
  out.values = parallel_map(grid.gamma.size(), jobs, [&](std::size_t i) { return forward_p(p, f, Degree(grid.gamma[i])); });
  out.quadrature_note = {{"abs_tol", forward_spec().abs_tol}, {"rel_tol", forward_spec().rel_tol},
                         {"gamma_max", grid.gamma_max}, {"delta0", grid.delta0}};
  return out;
}

QReferences q_references(double t) {
  require(std::isfinite(t) && t >= 0.0, "multiplier needs t >= 0");
  const double b = std::max(1.0, t + 0.25);
  return {bump(b, b + 1.0), bump(b + 0.2, b + 0.8)};
}

QRow legendre_q_row(const GegenbauerParams& p, double t, const std::vector<double>& gammas) {
  require(std::isfinite(t) && t >= 0.0, "multiplier needs t >= 0");
  require_gammas(gammas);
  QRow out;
  if (t == 0.0) {
    out.values.assign(gammas.size(), 1.0);
    return out;
  }
  const auto refs = q_references(t);
  out.values = quotient_row(p, refs.primary, t, gammas);
  const auto second = quotient_row(p, refs.secondary, t, gammas);
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    const double scale = std::max(std::abs(out.values[k]), std::abs(second[k]));
    const double spread = scale > 0.0 ? std::abs(out.values[k] - second[k]) / scale : 0.0;
    out.max_spread = std::max(out.max_spread, spread);
    if (!(spread < kQSpreadTolerance)) {
      std::ostringstream os;
      os << "multiplier references disagree by " << spread << " at t = " << t << ", gamma = " << gammas[k];
      fail(ErrorKind::calibration_failed, os.str());
    }
  }
  return out;
}

double legendre_q(const GegenbauerParams& p, const Degree& gamma, double t) {
  return legendre_q_row(p, t, {gamma.value()}).values.front();
}

double multiplier_quotient(const GegenbauerParams& p, const TestFunction& reference, double t, const Degree& gamma) {
  require(std::isfinite(t) && t >= 0.0, "multiplier needs t >= 0");
  if (t == 0.0) return 1.0;
  const double den = forward_p(p, reference, gamma);
  if (den == 0.0) fail(ErrorKind::ill_conditioned, "reference transform vanishes");
  return forward_p(p, shifted_function(p, reference, t), gamma) / den;
}

MultiplierCalibration::MultiplierCalibration(GegenbauerParams p, std::vector<double> gammas)
    : params_(p), gammas_(std::move(gammas)) {
  require_gammas(gammas_);
}

void MultiplierCalibration::precompute(const std::vector<double>& ts, int jobs) {
  const auto rows = parallel_map(ts.size(), jobs, [&](std::size_t i) { return legendre_q_row(params_, ts[i], gammas_); });
  for (std::size_t i = 0; i < ts.size(); ++i) {
    rows_[ts[i]] = rows[i].values;
    max_spread_ = std::max(max_spread_, rows[i].max_spread);
  }
}

bool MultiplierCalibration::has(double t) const { return rows_.count(t) > 0; }

const std::vector<double>& MultiplierCalibration::row(double t) const {
  const auto it = rows_.find(t);
  if (it == rows_.end()) fail(ErrorKind::invalid_argument, "multiplier table has no row for this t");
  return it->second;
}

namespace {

std::vector<double> forward_q_values(const GegenbauerParams& p, const TestFunction& f, const std::vector<double>& gammas,
                                     int jobs) {
  require_gammas(gammas);
  if (f.constant && *f.constant == 0.0) return std::vector<double>(gammas.size(), 0.0);
  if (!f.support) {
    const double gmax = *std::max_element(gammas.begin(), gammas.end());
    if (!(f.decay && *f.decay > gmax + 2.0 * p.lambda()))
      fail(ErrorKind::divergent, "Q transform of " + f.name + " diverges: decay must exceed gamma + 2 lambda");
  }
  const double lo = f.support ? f.support->first : 0.0;
  const double hi = truncation_extent(f, 1e-14);
  const FixedRule rule = weighted_rule(p, piece_edges(lo, hi, f.features()), 4);
  const auto per_node = parallel_map(rule.nodes.size(), jobs, [&](std::size_t j) {
    const double v = f.at_x(rule.nodes[j]);
    if (v == 0.0) return std::vector<double>(gammas.size(), 0.0);
    auto row = legendre_q_row(p, rule.nodes[j], gammas).values;
    for (double& q : row) q *= rule.weights[j] * v;
    return row;
  });
  std::vector<double> out(gammas.size());
  std::vector<double> terms(per_node.size());
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    for (std::size_t j = 0; j < per_node.size(); ++j) terms[j] = per_node[j][k];
    out[k] = pairwise_sum(terms);
  }
  return out;
}

CStarCalibration fit_constant(const std::vector<double>& raw, const std::vector<double>& exact,
                              const CalibrationOptions& opts, const std::string& name) {
  double num = 0.0, den = 0.0, norm = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double r = opts.prefactor * raw[i];
    num += r * exact[i];
    den += r * r;
    norm += exact[i] * exact[i];
  }
  if (!(den > 0.0) || !(norm > 0.0)) fail(ErrorKind::calibration_failed, "degenerate calibration data");
  CStarCalibration out;
  out.value = num / den;
  out.reference_function = name;
  out.gamma_max = opts.gamma_max;
  double res = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double d = out.value * opts.prefactor * raw[i] - exact[i];
    res += d * d;
  }
  out.residual = std::sqrt(res / norm);
  if (!std::isfinite(out.value) || !(out.value > 0.0)) {
    std::ostringstream os;
    os << "calibrated constant " << out.value << " is not finite and positive";
    fail(ErrorKind::calibration_failed, os.str());
  }
  if (!(out.residual <= opts.ceiling)) {
    std::ostringstream os;
    os << "calibration residual " << out.residual << " above ceiling " << opts.ceiling;
    fail(ErrorKind::calibration_failed, os.str());
  }
  return out;
}

std::vector<double> calibration_grid(const TestFunction& ref, const CalibrationOptions& opts) {
  if (!opts.x_grid.empty()) return opts.x_grid;
  require(ref.support.has_value(), "calibration reference without support needs an explicit x grid");
  const auto [a, b] = *ref.support;
  std::vector<double> xs;
  for (int k = 1; k <= 9; ++k) xs.push_back(a + (b - a) * k / 10.0);
  return xs;
}

}  // namespace

double forward_q(const GegenbauerParams& p, const TestFunction& f, const Degree& gamma) {
  return forward_q_values(p, f, {gamma.value()}, 1).front();
}

SpectralFunction forward_q_spectrum(const GegenbauerParams& p, const TestFunction& f, const SpectralGrid& grid,
                                    int jobs) {
  SpectralFunction out;
  out.gamma_grid = grid.gamma;
  out.weights = grid.weight;
  out.values = forward_q_values(p, f, grid.gamma, jobs);
  out.quadrature_note = {{"panels_per_piece", 4}, {"nodes_per_panel", kPanelNodes}, {"gamma_max", grid.gamma_max},
                         {"delta0", grid.delta0}};
  return out;
}

CStarCalibration calibrate_cstar(const GegenbauerParams& p, const TestFunction& reference,
                                 const CalibrationOptions& opts) {
  const auto xs = calibration_grid(reference, opts);
  const auto grid = spectral_grid(p, opts.gamma_max);
  const auto fhat = forward_p_spectrum(p, reference, grid, opts.jobs);
  const auto raw = parallel_map(xs.size(), opts.jobs, [&](std::size_t i) {
    const auto q = legendre_q_row(p, xs[i], grid.gamma).values;
    std::vector<double> terms(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) terms[k] = grid.weight[k] * fhat.values[k] * q[k];
    return pairwise_sum(terms);
  });
  std::vector<double> exact(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) exact[i] = reference.at_x(xs[i]);
  return fit_constant(raw, exact, opts, reference.name);
}

CStarCalibration calibrate_cq(const GegenbauerParams& p, const TestFunction& reference, const CalibrationOptions& opts) {
  const auto xs = calibration_grid(reference, opts);
  const auto grid = spectral_grid(p, opts.gamma_max);
  const auto fhat = forward_q_spectrum(p, reference, grid, opts.jobs);
  std::vector<double> raw(xs.size()), exact(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<double> terms(grid.gamma.size());
    for (std::size_t k = 0; k < terms.size(); ++k)
      terms[k] = grid.weight[k] * fhat.values[k] * legendre_p(p, grid.gamma[k], xs[i]);
    raw[i] = pairwise_sum(terms);
    exact[i] = reference.at_x(xs[i]);
  }
  return fit_constant(raw, exact, opts, reference.name);
}

double inverse_p(const GegenbauerParams& p, const SpectralFunction& fhat, double x, const CStarCalibration& cstar) {
  fhat.validate();
  require(cstar.value > 0.0, "inverse transform needs a calibrated constant");
  require(std::isfinite(x) && x >= 0.0, "inverse transform needs x >= 0");
  if (std::all_of(fhat.values.begin(), fhat.values.end(), [](double v) { return v == 0.0; })) return 0.0;
  const auto q = legendre_q_row(p, x, fhat.gamma_grid).values;
  std::vector<double> terms(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) terms[k] = fhat.weights[k] * fhat.values[k] * q[k];
  return cstar.value * pairwise_sum(terms);
}

double inverse_q(const GegenbauerParams& p, const SpectralFunction& fhat_q, double x, const CStarCalibration& cq) {
  fhat_q.validate();
  require(cq.value > 0.0, "inverse transform needs a calibrated constant");
  require(std::isfinite(x) && x >= 0.0, "inverse transform needs x >= 0");
  std::vector<double> terms(fhat_q.values.size());
  for (std::size_t k = 0; k < terms.size(); ++k)
    terms[k] = fhat_q.values[k] == 0.0 ? 0.0 : fhat_q.weights[k] * fhat_q.values[k] * legendre_p(p, fhat_q.gamma_grid[k], x);
  return cq.value * pairwise_sum(terms);
}

RoundTrip round_trip_p(const GegenbauerParams& p, const TestFunction& f, const CStarCalibration& cstar,
                       const std::vector<double>& xs, int jobs) {
  RoundTrip out;
  out.xs = xs;
  const auto fhat = forward_p_spectrum(p, f, spectral_grid(p, cstar.gamma_max), jobs);
  out.reconstructed = parallel_map(xs.size(), jobs, [&](std::size_t i) { return inverse_p(p, fhat, xs[i], cstar); });
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out.exact.push_back(f.at_x(xs[i]));
    num += (out.reconstructed[i] - out.exact[i]) * (out.reconstructed[i] - out.exact[i]);
    den += out.exact[i] * out.exact[i];
  }
  if (!(den > 0.0)) fail(ErrorKind::ill_conditioned, "round trip on a function vanishing on the grid");
  out.relative_l2 = std::sqrt(num / den);
  return out;
}

TestFunction shifted_function(const GegenbauerParams& p, const TestFunction& f, double t) {
  require(std::isfinite(t) && t >= 0.0, "shift needs t >= 0");
  if (t == 0.0 || f.constant) return f;
  TestFunction g;
  std::ostringstream os;
  os << "A_" << t << "(" << f.name << ")";
  g.name = os.str();
  auto src = std::make_shared<TestFunction>(f);
  g.of_x = [p, src, t](double s) { return shift_apply(p, *src, t, s); };
  if (f.support) g.support = {{std::max(0.0, f.support->first - t), f.support->second + t}};
  g.decay = f.decay;
  g.breakpoints = shifted_features(f, t);
  g.nonnegative = f.nonnegative;
  return g;
}

ParsevalCheck parseval_check(const GegenbauerParams& p, const TestFunction& f, const TestFunction& g, double t,
                             const CStarCalibration& cstar, bool with_q, int jobs) {
  ParsevalCheck out;
  if ((g.constant && *g.constant == 0.0) || (f.constant && *f.constant == 0.0)) return out;
  const TestFunction ag = shifted_function(p, g, t);
  const double lo = f.support ? f.support->first : 0.0;
  const double hi = std::min(truncation_extent(f, 1e-14), truncation_extent(ag, 1e-14));
  auto bps = f.features();
  const auto more = ag.features();
  bps.insert(bps.end(), more.begin(), more.end());
  if (hi > lo)
    out.lhs = weighted_integral(p, [&](double s) { return f.at_x(s) * ag.at_x(s); }, lo, hi, outer_spec(), bps).value;
  const auto grid = spectral_grid(p, cstar.gamma_max);
  const auto fp = forward_p_spectrum(p, f, grid, jobs);
  const auto agp = forward_p_spectrum(p, ag, grid, jobs);
  std::vector<double> terms(grid.gamma.size());
  for (std::size_t k = 0; k < terms.size(); ++k) terms[k] = grid.weight[k] * fp.values[k] * agp.values[k];
  out.rhs_p = cstar.value * pairwise_sum(terms);
  if (with_q) {
    const auto agq = forward_q_spectrum(p, ag, grid, jobs);
    for (std::size_t k = 0; k < terms.size(); ++k) terms[k] = grid.weight[k] * fp.values[k] * agq.values[k];
    out.rhs_q = cstar.value * pairwise_sum(terms);
  }
  return out;
}

std::pair<double, double> shift_multiplier_check(const GegenbauerParams& p, const TestFunction& f, double t,
                                                 const Degree& gamma) {
  if (f.constant && *f.constant == 0.0) return {0.0, 0.0};
  const double lhs = forward_p(p, shifted_function(p, f, t), gamma);
  const double rhs = forward_p(p, f, gamma) * legendre_q(p, gamma, t);
  return {lhs, rhs};
}

std::pair<double, double> g_multiplier_check(const GegenbauerParams& p, const TestFunction& f, const Degree& gamma) {
  require(f.support.has_value() && f.support->first > 0.05, "G multiplier check needs support away from 0");
  const auto [a, b] = *f.support;
  TestFunction gf;
  gf.name = "G(" + f.name + ")";
  auto src = std::make_shared<TestFunction>(f);
  gf.of_x = [p, src](double s) { return apply_G(p, [&](double y) { return src->eval(y); }, s); };
  gf.support = {{a, b}};
  const double lhs = forward_p(p, gf, gamma);
  return {lhs, gamma.eigenvalue(p) * forward_p(p, f, gamma)};
}

NominalCStar nominal_cstar(const GegenbauerParams& p) {
  const double l = p.lambda();
  NominalCStar out;
  const double c = (5.0 - 2.0 * l) / 4.0;
  out.f_half = gauss_2f1(1.0, 0.5 - l, c, 0.5);
  out.f_shifted = gauss_2f1(1.0, 0.5 - l, c, (1.0 - 2.0 * l) / 2.0);
  out.numerator = std::pow(2.0, 1.5 - l) * std::sqrt(M_PI) * gamma_fn(l + 1.0) * gamma_fn((3.0 + 2.0 * l) / 4.0) /
                  (gamma_fn(l + 0.5) * gamma_fn(c) * std::cos(M_PI * l));
  out.value = out.numerator / (out.f_half - out.f_shifted);
  return out;
}

}  // namespace gegenbauer
