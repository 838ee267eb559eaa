#include "rfisher/wavefunctions.hpp"

#include "rfisher/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rfisher {

namespace {

using specfun::ln_factorial;
using specfun::ln_gamma;
constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

// Scaled Hermite function N H_n(a s) exp(-(a s)^2 / 2), N = (a^2/pi)^(1/4) / sqrt(2^n n!).
WaveTerms hermite_terms(int n, double a, double s) {
  const double y = a * s;
  const auto h = specfun::hermite(n, y);
  WaveTerms t;
  t.log_envelope = 0.25 * std::log(a * a / kPi) - 0.5 * (n * kLn2 + ln_factorial(n)) - 0.5 * y * y;
  t.dlog_envelope = -a * y;
  t.poly = h.value;
  t.dpoly = a * h.derivative;
  return t;
}

// N s^k exp(-c s^2) L_nr^alpha(b s^2) with ln N supplied.
WaveTerms gaussian_laguerre_terms(double log_norm, double k, double c, int nr, double alpha,
                                  double b, double s) {
  const auto lag = specfun::assoc_laguerre(nr, alpha, b * s * s);
  WaveTerms t;
  t.log_envelope = log_norm + k * std::log(s) - c * s * s;
  t.dlog_envelope = k / s - 2.0 * c * s;
  t.poly = lag.value;
  t.dpoly = 2.0 * b * s * lag.derivative;
  return t;
}

WaveTerms qho3d_terms(const QuantumState& st, double s) {
  const double w = std::get<Oscillator3D>(st.system).omega;
  const int nr = st.n;
  const int l = st.l;
  const double lg = ln_factorial(nr) - ln_gamma(nr + l + 1.5);
  if (st.space == Space::position) {
    const double log_norm = 0.5 * (kLn2 + (l + 1.5) * std::log(w) + lg);
    return gaussian_laguerre_terms(log_norm, l, 0.5 * w, nr, l + 0.5, w, s);
  }
  const double log_norm = 0.5 * (kLn2 - (l + 1.5) * std::log(w) + lg);
  return gaussian_laguerre_terms(log_norm, l, 0.5 / w, nr, l + 0.5, 1.0 / w, s);
}

WaveTerms php_terms(const QuantumState& st, double s) {
  const auto& p = std::get<Pseudoharmonic>(st.system);
  const auto d = php_derived(p, st.l);
  const int nr = st.n;
  const double two_lambda = 2.0 * d.lambda;
  const double lg = ln_factorial(nr) - ln_gamma(nr + d.gamma_l + 1.5);
  const double power = d.gamma_l + 1.5; // (2 gamma_l + 3) / 2
  if (st.space == Space::position) {
    const double log_norm = 0.5 * (kLn2 + power * std::log(two_lambda) + lg);
    return gaussian_laguerre_terms(log_norm, d.gamma_l, d.lambda, nr, d.gamma_l + 0.5, two_lambda, s);
  }
  const double log_norm = 0.5 * (kLn2 - power * std::log(two_lambda) + lg);
  return gaussian_laguerre_terms(log_norm, d.gamma_l, 0.25 / d.lambda, nr, d.gamma_l + 0.5,
                                 1.0 / two_lambda, s);
}

WaveTerms hydrogen_terms(const QuantumState& st, double s) {
  const double Z = std::get<Hydrogenic>(st.system).Z;
  const int n = st.n;
  const int l = st.l;
  const int k = n - l - 1;
  const double lfac = ln_factorial(k) - ln_factorial(n + l);
  WaveTerms t;
  if (st.space == Space::position) {
    // (2 Z^{3/2} / n^2) sqrt(k!/(n+l)!) xi^l e^{-xi/2} L_k^{2l+1}(xi), xi = 2 Z r / n
    const double xi = 2.0 * Z * s / n;
    const auto lag = specfun::assoc_laguerre(k, 2.0 * l + 1.0, xi);
    t.log_envelope = kLn2 + 1.5 * std::log(Z) - 2.0 * std::log(double(n)) + 0.5 * lfac +
                     l * std::log(xi) - 0.5 * xi;
    t.dlog_envelope = l / s - Z / n;
    t.poly = lag.value;
    t.dpoly = (2.0 * Z / n) * lag.derivative;
    return t;
  }
  // n^2 sqrt(2/pi k!/(n+l)!) 2^{2l+2} l! n^l Z^{-3/2} (p/Z)^l / (t^2+1)^{l+2} C_k^{l+1}(q),
  // t = n p / Z, q = (t^2 - 1) / (t^2 + 1)
  const double tt = n * s / Z;
  const double t2p1 = tt * tt + 1.0;
  const double q = (tt * tt - 1.0) / t2p1;
  const auto geg = specfun::gegenbauer(k, l + 1.0, q);
  t.log_envelope = 2.0 * std::log(double(n)) + 0.5 * (std::log(2.0 / kPi) + lfac) +
                   (2.0 * l + 2.0) * kLn2 + ln_factorial(l) + l * std::log(double(n)) -
                   1.5 * std::log(Z) + l * std::log(s / Z) - (l + 2.0) * std::log(t2p1);
  const double dt_dp = n / Z;
  t.dlog_envelope = l / s - (l + 2.0) * 2.0 * tt * dt_dp / t2p1;
  const double dq_dt = 4.0 * tt / (t2p1 * t2p1);
  t.poly = geg.value;
  t.dpoly = geg.derivative * dq_dt * dt_dp;
  return t;
}

} // namespace

WaveSample WaveTerms::sample() const {
  const double env = std::exp(log_envelope);
  return {env * poly, env * (dlog_envelope * poly + dpoly)};
}

WaveSample eval_1d_qho(int n, double omega, Space space, double coordinate) {
  return wave_terms(QuantumState::qho1d(omega, n, space), coordinate).sample();
}

WaveTerms wave_terms(const QuantumState& state, double s) {
  if (state.kind() == SystemKind::qho1d) {
    const double w = std::get<Oscillator1D>(state.system).omega;
    // position argument sqrt(omega) / 2^{1/4} x, momentum argument 2^{1/4} / sqrt(omega) p
    const double a = state.space == Space::position ? std::sqrt(w) / std::pow(2.0, 0.25)
                                                    : std::pow(2.0, 0.25) / std::sqrt(w);
    return hermite_terms(state.n, a, s);
  }
  if (!(s > 0.0)) throw std::domain_error("radial coordinate must be > 0");
  switch (state.kind()) {
  case SystemKind::qho3d: return qho3d_terms(state, s);
  case SystemKind::hydrogen: return hydrogen_terms(state, s);
  case SystemKind::php: return php_terms(state, s);
  default: break;
  }
  throw std::logic_error("unreachable system kind");
}

WaveSample eval_radial(const QuantumState& state, double s) {
  if (state.kind() == SystemKind::qho1d)
    throw std::invalid_argument("eval_radial: 1D oscillator has no radial function");
  validate(state);
  return wave_terms(state, s).sample();
}

WaveSample evaluate(const QuantumState& state, double s) {
  validate(state);
  return wave_terms(state, s).sample();
}

double natural_scale(const QuantumState& state) {
  const bool pos = state.space == Space::position;
  switch (state.kind()) {
  case SystemKind::qho1d:
  case SystemKind::qho3d: {
    const double w = state.kind() == SystemKind::qho1d ? std::get<Oscillator1D>(state.system).omega
                                                       : std::get<Oscillator3D>(state.system).omega;
    return pos ? 1.0 / std::sqrt(w) : std::sqrt(w);
  }
  case SystemKind::hydrogen: {
    const double Z = std::get<Hydrogenic>(state.system).Z;
    return pos ? state.n / Z : Z / state.n;
  }
  case SystemKind::php: {
    const double lambda = php_derived(std::get<Pseudoharmonic>(state.system), state.l).lambda;
    return pos ? 1.0 / std::sqrt(lambda) : std::sqrt(lambda);
  }
  }
  return 1.0;
}

quadrature::QuadratureSpec spec_for(const QuantumState& state, quadrature::QuadratureSpec base) {
  base.domain = state.kind() == SystemKind::qho1d ? quadrature::Domain::full_line
                                                  : quadrature::Domain::half_line;
  base.scale = natural_scale(state);
  return base;
}

double normalization_defect(const QuantumState& state, const quadrature::QuadratureSpec& base) {
  validate(state);
  const bool radial = state.kind() != SystemKind::qho1d;
  auto density = [&](double s) {
    const double v = wave_terms(state, s).sample().value;
    return radial ? s * s * v * v : v * v;
  };
  const auto res = quadrature::integrate(density, spec_for(state, base));
  if (!res.converged)
    throw std::runtime_error("normalization quadrature did not converge for " +
                             to_string(state.kind()) + " " + numbers_label(state));
  return std::abs(res.value - 1.0);
}

} // namespace rfisher
