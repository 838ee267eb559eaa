#include "rfisher/systems.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rfisher {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw std::invalid_argument(std::string(name) + " must be finite and > 0");
}

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

} // namespace

std::string to_string(Space space) {
  return space == Space::position ? "position" : "momentum";
}

Space parse_space(const std::string& text) {
  if (text == "position") return Space::position;
  if (text == "momentum") return Space::momentum;
  throw std::invalid_argument("unknown space: " + text);
}

SystemKind kind_of(const SystemParams& params) {
  return std::visit(overloaded{[](const Oscillator1D&) { return SystemKind::qho1d; },
                               [](const Oscillator3D&) { return SystemKind::qho3d; },
                               [](const Hydrogenic&) { return SystemKind::hydrogen; },
                               [](const Pseudoharmonic&) { return SystemKind::php; }},
                    params);
}

std::string to_string(SystemKind kind) {
  switch (kind) {
  case SystemKind::qho1d: return "qho1d";
  case SystemKind::qho3d: return "qho3d";
  case SystemKind::hydrogen: return "hydrogen";
  case SystemKind::php: return "php";
  }
  return "unknown";
}

SystemKind parse_system_kind(const std::string& text) {
  if (text == "qho1d") return SystemKind::qho1d;
  if (text == "qho3d") return SystemKind::qho3d;
  if (text == "hydrogen") return SystemKind::hydrogen;
  if (text == "php") return SystemKind::php;
  throw std::invalid_argument("unknown system: " + text);
}

void validate(const SystemParams& params) {
  std::visit(overloaded{[](const Oscillator1D& p) { require_positive(p.omega, "omega"); },
                        [](const Oscillator3D& p) { require_positive(p.omega, "omega"); },
                        [](const Hydrogenic& p) { require_positive(p.Z, "Z"); },
                        [](const Pseudoharmonic& p) {
                          require_positive(p.mu, "mu");
                          require_positive(p.De, "De");
                          require_positive(p.re, "re");
                        }},
             params);
}

bool operator==(const Oscillator1D& a, const Oscillator1D& b) { return a.omega == b.omega; }
bool operator==(const Oscillator3D& a, const Oscillator3D& b) { return a.omega == b.omega; }
bool operator==(const Hydrogenic& a, const Hydrogenic& b) { return a.Z == b.Z; }
bool operator==(const Pseudoharmonic& a, const Pseudoharmonic& b) {
  return a.mu == b.mu && a.De == b.De && a.re == b.re;
}

bool operator==(const QuantumState& a, const QuantumState& b) {
  return a.system == b.system && a.space == b.space && a.n == b.n && a.l == b.l;
}

void validate(const QuantumState& state) {
  validate(state.system);
  if (state.kind() == SystemKind::hydrogen) {
    if (state.n < 1) throw std::invalid_argument("hydrogenic n must be >= 1");
    if (state.l < 0 || state.l > state.n - 1)
      throw std::invalid_argument("hydrogenic l must satisfy 0 <= l <= n-1");
    return;
  }
  if (state.n < 0) throw std::invalid_argument("quantum number n must be >= 0");
  if (state.l < 0) throw std::invalid_argument("quantum number l must be >= 0");
  if (state.kind() == SystemKind::qho1d && state.l != 0)
    throw std::invalid_argument("1D oscillator has no l quantum number");
}

QuantumState QuantumState::qho1d(double omega, int n, Space space) {
  QuantumState s{Oscillator1D{omega}, space, n, 0};
  validate(s);
  return s;
}

QuantumState QuantumState::qho3d(double omega, int nr, int l, Space space) {
  QuantumState s{Oscillator3D{omega}, space, nr, l};
  validate(s);
  return s;
}

QuantumState QuantumState::hydrogenic(double Z, int n, int l, Space space) {
  QuantumState s{Hydrogenic{Z}, space, n, l};
  validate(s);
  return s;
}

QuantumState QuantumState::pseudoharmonic(const Pseudoharmonic& params, int nr, int l,
                                          Space space) {
  QuantumState s{params, space, nr, l};
  validate(s);
  return s;
}

int QuantumState::radial_nodes() const {
  return kind() == SystemKind::hydrogen ? n - l - 1 : n;
}

QuantumState QuantumState::with_numbers(int n_new, int l_new) const {
  QuantumState s{system, space, n_new, l_new};
  validate(s);
  return s;
}

QuantumState QuantumState::in_space(Space other) const {
  QuantumState s = *this;
  s.space = other;
  return s;
}

QuantumState reference_state(const QuantumState& target) {
  validate(target);
  QuantumState ref = target;
  switch (target.kind()) {
  case SystemKind::qho1d: ref.n = 0; break;
  case SystemKind::qho3d:
  case SystemKind::php: ref.n = 0; break;
  case SystemKind::hydrogen: ref.n = target.l + 1; break;
  }
  return ref;
}

PhpDerived php_derived(const Pseudoharmonic& params, int l) {
  validate(SystemParams{params});
  if (l < 0) throw std::invalid_argument("php_derived: l must be >= 0");
  const double two_l1 = 2.0 * l + 1.0;
  const double coupling = 8.0 * params.mu * params.De * params.re * params.re;
  PhpDerived out;
  out.gamma_l = 0.5 * (-1.0 + std::sqrt(two_l1 * two_l1 + coupling));
  out.lambda = std::sqrt(params.mu * params.De / (2.0 * params.re * params.re));
  return out;
}

double hydrogen_energy(double Z, int n) {
  require_positive(Z, "Z");
  if (n < 1) throw std::invalid_argument("hydrogen_energy: n must be >= 1");
  return -Z * Z / (2.0 * n * n);
}

std::string params_digest(const SystemParams& params) {
  return std::visit(
      overloaded{[](const Oscillator1D& p) { return "omega=" + fmt_g(p.omega); },
                 [](const Oscillator3D& p) { return "omega=" + fmt_g(p.omega); },
                 [](const Hydrogenic& p) { return "Z=" + fmt_g(p.Z); },
                 [](const Pseudoharmonic& p) {
                   return "mu=" + fmt_g(p.mu) + ";De=" + fmt_g(p.De) + ";re=" + fmt_g(p.re);
                 }},
      params);
}

std::string numbers_label(const QuantumState& state) {
  switch (state.kind()) {
  case SystemKind::qho1d: return "n=" + std::to_string(state.n);
  case SystemKind::hydrogen:
    return "n=" + std::to_string(state.n) + ";l=" + std::to_string(state.l);
  default: return "nr=" + std::to_string(state.n) + ";l=" + std::to_string(state.l);
  }
}

} // namespace rfisher
