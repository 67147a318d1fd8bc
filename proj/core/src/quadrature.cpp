#include "gegenbauer/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "gegenbauer/error.hpp"

namespace gegenbauer {

namespace {

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  int piece;
  double a, b, value, error;
};

double checked(const Integrand& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << "integrand returned " << v << " at " << x;
    fail(ErrorKind::non_finite, os.str());
  }
  return v;
}

void gk15(const Integrand& f, Segment& s) {
  const double c = 0.5 * (s.a + s.b);
  const double h = 0.5 * (s.b - s.a);
  const double fc = checked(f, c);
  double kron = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = checked(f, c - dx);
    const double f2 = checked(f, c + dx);
    kron += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  s.value = kron * h;
  s.error = std::abs((kron - gauss) * h);
}

IntegralResult adaptive(const std::vector<Integrand>& pieces, std::vector<Segment> segs, const QuadratureSpec& spec) {
  require(spec.abs_tol >= 0.0 && spec.rel_tol >= 0.0, "tolerances must be non-negative");
  require(spec.max_subdivisions >= 1, "max_subdivisions must be positive");
  IntegralResult out;
  if (segs.empty()) return out;
  for (auto& s : segs) gk15(pieces[s.piece], s);
  int used = static_cast<int>(segs.size());
  auto totals = [&](double& v, double& e) {
    v = 0.0;
    e = 0.0;
    for (const auto& s : segs) {
      v += s.value;
      e += s.error;
    }
  };
  double value = 0.0, error = 0.0;
  totals(value, error);
  while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
    if (used >= spec.max_subdivisions) {
      std::ostringstream os;
      os << "error " << error << " after " << used << " subdivisions (value " << value << ")";
      fail(ErrorKind::tolerance_not_met, os.str());
    }
    auto worst = std::max_element(segs.begin(), segs.end(),
                                  [](const Segment& l, const Segment& r) { return l.error < r.error; });
    const double mid = 0.5 * (worst->a + worst->b);
    if (!(mid > worst->a && mid < worst->b)) {
      std::ostringstream os;
      os << "interval exhausted near " << mid << " with error " << error;
      fail(ErrorKind::tolerance_not_met, os.str());
    }
    Segment right{worst->piece, mid, worst->b, 0.0, 0.0};
    worst->b = mid;
    gk15(pieces[worst->piece], *worst);
    gk15(pieces[right.piece], right);
    segs.push_back(right);
    ++used;
    totals(value, error);
  }
  out.value = value;
  out.error_estimate = error;
  out.subdivisions_used = used;
  return out;
}

std::vector<double> partition(double a, double b, const std::vector<double>& breakpoints) {
  std::vector<double> pts{a};
  std::vector<double> inner;
  for (double p : breakpoints)
    if (p > a && p < b) inner.push_back(p);
  std::sort(inner.begin(), inner.end());
  for (double p : inner)
    if (p > pts.back()) pts.push_back(p);
  pts.push_back(b);
  return pts;
}

void check_interval(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || b < a) {
    std::ostringstream os;
    os << "bad interval [" << a << ", " << b << "]";
    fail(ErrorKind::invalid_interval, os.str());
  }
}

}  // namespace

IntegralResult integrate_finite(const Integrand& f, double a, double b, const QuadratureSpec& spec,
                                const std::vector<double>& breakpoints) {
  check_interval(a, b);
  if (a == b) return {};
  const auto pts = partition(a, b, breakpoints);
  std::vector<Segment> segs;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) segs.push_back({0, pts[i], pts[i + 1], 0.0, 0.0});
  return adaptive({f}, std::move(segs), spec);
}

IntegralResult integrate_singular(const Integrand& g, double a, double b, const QuadratureSpec& spec,
                                  const std::vector<double>& breakpoints) {
  check_interval(a, b);
  const double bl = spec.beta_left, br = spec.beta_right;
  require(bl > -1.0 && br > -1.0, "endpoint exponents must exceed -1");
  if (a == b) return {};
  auto pts = partition(a, b, breakpoints);
  if (pts.size() == 2) pts.insert(pts.begin() + 1, 0.5 * (a + b));
  const std::size_t n = pts.size() - 1;

  std::vector<Integrand> pieces;
  std::vector<Segment> segs;
  // Left piece: t = a + h s^(1/(1+bl)) absorbs (t-a)^bl exactly.
  {
    const double h = pts[1] - a;
    const double q = 1.0 / (1.0 + bl);
    const double scale = std::pow(h, 1.0 + bl) * q;
    pieces.push_back([=, &g](double s) {
      const double d = h * std::pow(s, q);
      const double t = a + d;
      const double wr = br == 0.0 ? 1.0 : std::pow(b - t, br);
      return scale * wr * g(t);
    });
    segs.push_back({0, 0.0, 1.0, 0.0, 0.0});
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    pieces.push_back([=, &g](double t) {
      const double wl = bl == 0.0 ? 1.0 : std::pow(t - a, bl);
      const double wr = br == 0.0 ? 1.0 : std::pow(b - t, br);
      return wl * wr * g(t);
    });
    segs.push_back({static_cast<int>(pieces.size() - 1), pts[i], pts[i + 1], 0.0, 0.0});
  }
  {
    const double h = b - pts[n - 1];
    const double q = 1.0 / (1.0 + br);
    const double scale = std::pow(h, 1.0 + br) * q;
    pieces.push_back([=, &g](double s) {
      const double d = h * std::pow(s, q);
      const double t = b - d;
      const double wl = bl == 0.0 ? 1.0 : std::pow(t - a, bl);
      return scale * wl * g(t);
    });
    segs.push_back({static_cast<int>(pieces.size() - 1), 0.0, 1.0, 0.0, 0.0});
  }
  return adaptive(pieces, std::move(segs), spec);
}

IntegralResult integrate_semi_infinite(const Integrand& f, double a, const QuadratureSpec& spec,
                                       const std::vector<double>& breakpoints) {
  const auto& tp = spec.truncation;
  require(std::isfinite(a), "semi-infinite lower limit must be finite");
  require(tp.cutoff > a, "truncation cutoff must exceed the lower limit");
  require(tp.tail_bound_exponent > 0.0 || tp.tail_majorant, "tail certification needs a positive decay rate");
  auto tail_estimate = [&](double T) {
    if (tp.tail_majorant) return std::abs(tp.tail_majorant(T));
    const double kappa = tp.tail_bound_exponent;
    const double delta = 0.25 / kappa;
    double m = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double ti = T - i * delta;
      if (ti <= a) break;
      m = std::max(m, std::abs(checked(f, ti)) * std::exp(-kappa * i * delta));
    }
    return m / kappa;
  };
  double T = tp.cutoff;
  double tail = tail_estimate(T);
  for (int k = 0; tail > tp.tail_tol; ++k) {
    if (k >= tp.max_extensions) {
      std::ostringstream os;
      os << "tail " << tail << " beyond T = " << T << " exceeds " << tp.tail_tol;
      fail(ErrorKind::tolerance_not_met, os.str());
    }
    T = a + 2.0 * (T - a);
    tail = tail_estimate(T);
  }
  QuadratureSpec inner = spec;
  inner.beta_right = 0.0;
  IntegralResult r = spec.beta_left != 0.0 ? integrate_singular(f, a, T, inner, breakpoints)
                                           : integrate_finite(f, a, T, inner, breakpoints);
  r.error_estimate += tail;
  return r;
}

FixedRule gauss_legendre(int n) {
  require(n >= 1 && n <= 512, "Gauss-Legendre order must lie in [1, 512]");
  FixedRule r;
  r.nodes.resize(static_cast<std::size_t>(n));
  r.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[static_cast<std::size_t>(i)] = -x;
    r.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    r.weights[static_cast<std::size_t>(i)] = w;
    r.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) r.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return r;
}

FixedRule composite_gauss(const std::vector<double>& edges, int panels, int n) {
  require(edges.size() >= 2 && panels >= 1, "composite rule needs two edges and a panel");
  const FixedRule base = gauss_legendre(n);
  FixedRule out;
  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    check_interval(edges[e], edges[e + 1]);
    const double h = (edges[e + 1] - edges[e]) / panels;
    if (h == 0.0) continue;
    for (int k = 0; k < panels; ++k) {
      const double mid = edges[e] + (k + 0.5) * h;
      for (std::size_t i = 0; i < base.nodes.size(); ++i) {
        out.nodes.push_back(mid + 0.5 * h * base.nodes[i]);
        out.weights.push_back(0.5 * h * base.weights[i]);
      }
    }
  }
  return out;
}

McResult mc_oracle(const std::function<double(const std::vector<double>&)>& f,
                   const std::vector<std::pair<double, double>>& box, std::int64_t n, std::uint64_t seed) {
  require(!box.empty() && box.size() <= 2, "mc_oracle supports one or two dimensions");
  require(n >= 2, "mc_oracle needs at least two samples");
  double volume = 1.0;
  for (const auto& [lo, hi] : box) {
    check_interval(lo, hi);
    volume *= hi - lo;
  }
  std::mt19937_64 rng(seed);
  std::vector<double> x(box.size());
  double sum = 0.0, sum2 = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::size_t d = 0; d < box.size(); ++d) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      x[d] = box[d].first + u * (box[d].second - box[d].first);
    }
    const double v = f(x);
    if (!std::isfinite(v)) fail(ErrorKind::non_finite, "Monte-Carlo sample is not finite");
    sum += v;
    sum2 += v * v;
  }
  const double mean = sum / static_cast<double>(n);
  const double var = std::max(0.0, sum2 / static_cast<double>(n) - mean * mean);
  return {volume * mean, volume * std::sqrt(var / static_cast<double>(n - 1))};
}

}  // namespace gegenbauer
