#pragma once

#include <string>
#include <variant>

namespace rfisher {

/// Conjugate-space selector.
enum class Space { position, momentum };

std::string to_string(Space space);
Space parse_space(const std::string& text);

// Physical parameters, all in atomic units.
struct Oscillator1D {
  double omega = 1.0;
};
struct Oscillator3D {
  double omega = 1.0;
};
struct Hydrogenic {
  double Z = 1.0; ///< nuclear charge; real-valued so screened charges are allowed
};
struct Pseudoharmonic {
  double mu = 1.0; ///< reduced mass
  double De = 1.0; ///< dissociation energy
  double re = 1.0; ///< equilibrium separation
};

using SystemParams = std::variant<Oscillator1D, Oscillator3D, Hydrogenic, Pseudoharmonic>;

enum class SystemKind { qho1d, qho3d, hydrogen, php };

SystemKind kind_of(const SystemParams& params);
std::string to_string(SystemKind kind);
SystemKind parse_system_kind(const std::string& text);

/// Throws std::invalid_argument unless every parameter is finite and > 0.
void validate(const SystemParams& params);

/// One stationary state in one space.
///
/// `n` is the state index for the 1D oscillator, the principal quantum number
/// for hydrogenic systems, and the radial quantum number n_r for the 3D
/// oscillator and the pseudoharmonic potential. `l` is unused (0) in 1D.
/// The magnetic quantum number is not carried: the relative Fisher
/// information is independent of it when target and reference share m.
struct QuantumState {
  SystemParams system;
  Space space = Space::position;
  int n = 0;
  int l = 0;

  static QuantumState qho1d(double omega, int n, Space space);
  static QuantumState qho3d(double omega, int nr, int l, Space space);
  static QuantumState hydrogenic(double Z, int n, int l, Space space);
  static QuantumState pseudoharmonic(const Pseudoharmonic& params, int nr, int l, Space space);

  SystemKind kind() const { return kind_of(system); }

  /// Interior radial nodes: n_r for oscillators and PHP, n - l - 1 for hydrogen,
  /// n for the 1D oscillator (zeros on the full line).
  int radial_nodes() const;

  /// Same system and space, with another set of quantum numbers.
  QuantumState with_numbers(int n_new, int l_new) const;
  QuantumState in_space(Space other) const;

  friend bool operator==(const QuantumState&, const QuantumState&);
};

bool operator==(const Oscillator1D&, const Oscillator1D&);
bool operator==(const Oscillator3D&, const Oscillator3D&);
bool operator==(const Hydrogenic&, const Hydrogenic&);
bool operator==(const Pseudoharmonic&, const Pseudoharmonic&);

/// Throws std::invalid_argument for parameters or quantum numbers outside
/// their ranges (hydrogen: n >= 1, 0 <= l <= n-1; others: n >= 0, l >= 0).
void validate(const QuantumState& state);

/// Node-less reference for `target`: n = 0 (1D), n_r = 0 at the same l
/// (3D oscillator, PHP), circular state n = l + 1 (hydrogen).
QuantumState reference_state(const QuantumState& target);

struct PhpDerived {
  double gamma_l = 0.0; ///< effective angular exponent, >= l
  double lambda = 0.0;  ///< Gaussian width parameter, inverse length squared
};

PhpDerived php_derived(const Pseudoharmonic& params, int l);

/// Bound-state energy -Z^2 / (2 n^2).
double hydrogen_energy(double Z, int n);

/// Short deterministic parameter description, e.g. "omega=1.5".
std::string params_digest(const SystemParams& params);

/// Quantum numbers as text, e.g. "n=3;l=1" or "nr=2;l=0".
std::string numbers_label(const QuantumState& state);

} // namespace rfisher
