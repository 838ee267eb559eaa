#include "rfisher/relative_fisher.hpp"

#include "rfisher/wavefunctions.hpp"

#include <cmath>
#include <numbers>

namespace rfisher {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

bool is_integral(double x) { return std::isfinite(x) && x == std::floor(x) && std::abs(x) < 1e9; }

double php_lambda(const QuantumState& st) {
  return php_derived(std::get<Pseudoharmonic>(st.system), st.l).lambda;
}

} // namespace

double closed_form_ir(const QuantumState& target) {
  validate(target);
  const bool pos = target.space == Space::position;
  switch (target.kind()) {
  case SystemKind::qho1d: {
    const double w = std::get<Oscillator1D>(target.system).omega;
    return pos ? 4.0 * kSqrt2 * w * target.n : 8.0 * kSqrt2 * target.n / w;
  }
  case SystemKind::qho3d: {
    const double w = std::get<Oscillator3D>(target.system).omega;
    return pos ? 16.0 * w * target.n : 16.0 * target.n / w;
  }
  case SystemKind::hydrogen: {
    const double Z = std::get<Hydrogenic>(target.system).Z;
    const double n = target.n;
    const double k = target.n - target.l - 1;
    if (k == 0) return 0.0;
    const double lp1 = target.l + 1.0;
    return pos ? 8.0 * k / (Z * n * n * n) : 16.0 * Z * n * n * (n * n - lp1 * lp1);
  }
  case SystemKind::php: {
    const double lambda = php_lambda(target);
    return pos ? 32.0 * target.n * lambda : 8.0 * target.n / lambda;
  }
  }
  return 0.0;
}

std::optional<Rational> closed_form_ir_exact(const QuantumState& target) {
  validate(target);
  if (target.kind() != SystemKind::hydrogen) return std::nullopt;
  const double Zd = std::get<Hydrogenic>(target.system).Z;
  if (!is_integral(Zd)) return std::nullopt;
  const std::int64_t Z = static_cast<std::int64_t>(Zd);
  const std::int64_t n = target.n;
  const std::int64_t k = n - target.l - 1;
  const std::int64_t lp1 = target.l + 1;
  if (target.space == Space::position) return Rational(8 * k, Z * n * n * n);
  return Rational(16 * Z * n * n * (n * n - lp1 * lp1));
}

quadrature::QuadratureResult ir_integral(const QuantumState& target, const QuantumState& reference,
                                         const quadrature::QuadratureSpec& base) {
  validate(target);
  validate(reference);
  if (!(target.system == reference.system) || target.space != reference.space ||
      target.l != reference.l)
    throw std::invalid_argument("ir_integral: reference must share system, space and l with target");
  if (reference.radial_nodes() != 0)
    throw std::invalid_argument("ir_integral: reference state has interior nodes");

  const bool radial = target.kind() != SystemKind::qho1d;
  auto integrand = [&](double s) {
    const WaveTerms t = wave_terms(target, s);
    const double ref_log_derivative = wave_terms(reference, s).log_derivative();
    const double env = std::exp(t.log_envelope);
    // psi_t' - psi_t * ref'/ref, with the target envelope factored out.
    const double d = env * (t.dpoly + t.poly * (t.dlog_envelope - ref_log_derivative));
    return radial ? 4.0 * s * s * d * d : 4.0 * d * d;
  };
  return quadrature::integrate(integrand, spec_for(target, base));
}

IRResult numeric_ir(const QuantumState& target, const quadrature::QuadratureSpec& base) {
  IRResult out;
  out.closed_form = closed_form_ir(target);
  const auto q = ir_integral(target, reference_state(target), base);
  out.quadrature = q;
  if (!q.converged) return out;
  out.numeric = q.value;
  out.abs_diff = std::abs(q.value - out.closed_form);
  out.rel_diff = *out.abs_diff / std::max(out.closed_form, 1e-12);
  return out;
}

double ir_spacing(const SystemParams& params, Space space) {
  validate(params);
  const bool pos = space == Space::position;
  switch (kind_of(params)) {
  case SystemKind::qho1d: {
    const double w = std::get<Oscillator1D>(params).omega;
    return pos ? 4.0 * kSqrt2 * w : 8.0 * kSqrt2 / w;
  }
  case SystemKind::qho3d: {
    const double w = std::get<Oscillator3D>(params).omega;
    return pos ? 8.0 * w : 8.0 / w;
  }
  case SystemKind::php: {
    const auto& p = std::get<Pseudoharmonic>(params);
    // Written as in the closed forms: (32/re) sqrt(mu De/2) and 8 re sqrt(2/(mu De)).
    return pos ? 32.0 / p.re * std::sqrt(p.mu * p.De / 2.0) : 8.0 * p.re * std::sqrt(2.0 / (p.mu * p.De));
  }
  case SystemKind::hydrogen:
    throw UnsupportedFamily("ir_spacing: hydrogenic IR has no constant spacing");
  }
  return 0.0;
}

double ir_product(const QuantumState& target) {
  return closed_form_ir(target.in_space(Space::position)) *
         closed_form_ir(target.in_space(Space::momentum));
}

IrMaximum hydrogen_ir_max(int l) {
  if (l < 0) throw std::invalid_argument("hydrogen_ir_max: l must be >= 0");
  // 8(n-l-1)/n^3 is unimodal in n; walk up until it turns over.
  auto at = [l](std::int64_t n) { return Rational(8 * (n - l - 1), n * n * n); };
  std::int64_t best = l + 1;
  Rational best_value = at(best);
  for (std::int64_t n = l + 2;; ++n) {
    const Rational v = at(n);
    if (v < best_value) break;
    if (best_value < v) {
      best = n;
      best_value = v;
    }
  }
  return IrMaximum{static_cast<int>(best), best_value.to_double(), best_value};
}

HydrogenAsymptotics hydrogen_asymptotics(int n, int l, double Z) {
  if (l < 0 || l > n - 1) throw std::invalid_argument("hydrogen_asymptotics: need 0 <= l <= n-1");
  const double e = hydrogen_energy(Z, n);
  return {-16.0 * e / (Z * Z * Z), 4.0 * std::pow(Z, 5) / (e * e)};
}

} // namespace rfisher
