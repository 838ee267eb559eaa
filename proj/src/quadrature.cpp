#include "rfisher/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <vector>

namespace rfisher::quadrature {

namespace {

// QUADPACK qk15 abscissae (descending) and weights. Entries 1, 3, 5, 7 are the
// 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  int depth;
  bool operator<(const Panel& other) const { return error < other.error; }
};

// Rule on [a, b] with the QUADPACK error heuristic.
template <class F>
Panel apply_rule(F& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  double resabs = std::abs(resk);
  std::array<double, 7> f1{}, f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));

  resk *= half;
  resg *= half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs(resk - resg);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();
  if (resabs > uflow / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
  return Panel{a, b, resk, err, depth};
}

} // namespace

NonFiniteIntegrand::NonFiniteIntegrand(double node, double sample)
    : std::runtime_error([&] {
        char buf[128];
        std::snprintf(buf, sizeof buf, "non-finite integrand value %g at node %.17g", sample, node);
        return std::string(buf);
      }()),
      node_(node) {}

PanelEstimate gauss_kronrod_15(const Integrand& f, double a, double b) {
  auto g = [&](double x) { return f(x); };
  const Panel p = apply_rule(g, a, b, 0);
  return {p.value, p.error};
}

QuadratureResult integrate(const Integrand& f, const QuadratureSpec& spec) {
  if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0))
    throw std::invalid_argument("integrate: tolerances must be > 0");
  if (spec.max_refinements < 1) throw std::invalid_argument("integrate: max_refinements must be >= 1");
  if (!(spec.scale > 0.0) || !std::isfinite(spec.scale))
    throw std::invalid_argument("integrate: scale must be finite and > 0");
  if (spec.initial_panels < 1) throw std::invalid_argument("integrate: initial_panels must be >= 1");

  const double L = spec.scale;
  const bool full = spec.domain == Domain::full_line;
  long evaluations = 0;
  // Transformed integrand on (0, 1); t = 0 and t = 1 are never sampled.
  auto mapped = [&](double t) {
    ++evaluations;
    const double one_minus = 1.0 - t;
    const double s = L * t / one_minus;
    const double jac = L / (one_minus * one_minus);
    const double v = full ? f(s) + f(-s) : f(s);
    if (!std::isfinite(v)) throw NonFiniteIntegrand(s, v);
    const double w = v == 0.0 ? 0.0 : v * jac;
    if (!std::isfinite(w)) throw NonFiniteIntegrand(s, w);
    return w;
  };

  std::priority_queue<Panel> active;
  std::vector<Panel> frozen; // panels at the depth limit
  double total_err = 0.0;
  double total = 0.0;
  double frozen_err = 0.0;
  const double width = 1.0 / spec.initial_panels;
  for (int i = 0; i < spec.initial_panels; ++i) {
    const double a = i * width;
    const double b = (i + 1 == spec.initial_panels) ? 1.0 : (i + 1) * width;
    Panel p = apply_rule(mapped, a, b, 0);
    total += p.value;
    total_err += p.error;
    active.push(p);
  }

  auto tolerance = [&] { return std::max(spec.rel_tol * std::abs(total), spec.abs_tol); };
  bool converged = total_err <= tolerance();
  while (!converged && !active.empty() && evaluations + 30 <= spec.max_evaluations) {
    Panel worst = active.top();
    active.pop();
    if (worst.depth >= spec.max_refinements) {
      frozen.push_back(worst);
      frozen_err += worst.error;
      if (frozen_err > tolerance()) break;
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = apply_rule(mapped, worst.a, mid, worst.depth + 1);
    Panel right = apply_rule(mapped, mid, worst.b, worst.depth + 1);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    active.push(left);
    active.push(right);
    converged = total_err <= tolerance();
  }

  // Re-sum in domain order to shed drift in the running totals.
  std::vector<Panel> panels = std::move(frozen);
  while (!active.empty()) {
    panels.push_back(active.top());
    active.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  QuadratureResult out;
  for (const Panel& p : panels) {
    out.value += p.value;
    out.error_estimate += p.error;
  }
  out.evaluations = evaluations;
  out.converged = out.error_estimate <= std::max(spec.rel_tol * std::abs(out.value), spec.abs_tol);
  return out;
}

} // namespace rfisher::quadrature
