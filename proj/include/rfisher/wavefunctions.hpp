#pragma once

#include "rfisher/quadrature.hpp"
#include "rfisher/systems.hpp"

namespace rfisher {

/// Wavefunction value and its derivative with respect to the coordinate.
struct WaveSample {
  double value = 0.0;
  double derivative = 0.0;
};

/// A wavefunction at one point, split as envelope * polynomial.
///
/// The envelope (normalization, power law and decaying factor) is kept as a
/// logarithm so that large exponents such as the pseudoharmonic gamma_l do
/// not overflow. `dlog_envelope` is d/ds of that logarithm and `dpoly` is
/// d/ds of the polynomial factor, chain rule included.
struct WaveTerms {
  double log_envelope = 0.0;
  double dlog_envelope = 0.0;
  double poly = 1.0;
  double dpoly = 0.0;

  WaveSample sample() const;
  /// psi'/psi; finite wherever poly != 0.
  double log_derivative() const { return dlog_envelope + dpoly / poly; }
};

/// Normalized 1D oscillator eigenfunction in position (x) or momentum (p)
/// space. Any real argument.
WaveSample eval_1d_qho(int n, double omega, Space space, double coordinate);

/// Envelope/polynomial split for any state. Radial systems require s > 0
/// (std::domain_error otherwise); the 1D oscillator accepts any real s.
WaveTerms wave_terms(const QuantumState& state, double s);

/// Normalized radial function R(s) of a 3D state with analytic dR/ds.
/// Throws std::domain_error for s <= 0 and std::invalid_argument for 1D states.
WaveSample eval_radial(const QuantumState& state, double s);

/// Either eval_1d_qho or eval_radial depending on the system.
WaveSample evaluate(const QuantumState& state, double s);

/// Natural length of the state's density, used as the quadrature transform
/// scale: 1/sqrt(omega), n/Z, 1/sqrt(lambda) in position space and
/// sqrt(omega), Z/n, sqrt(lambda) in momentum space.
double natural_scale(const QuantumState& state);

/// Quadrature spec matching the state's domain and natural scale.
quadrature::QuadratureSpec spec_for(const QuantumState& state,
                                    quadrature::QuadratureSpec base = {});

/// |integral of s^2 R^2 ds - 1| (radial) or |integral of psi^2 dx - 1| (1D).
/// Throws std::runtime_error if the quadrature does not converge.
double normalization_defect(const QuantumState& state, const quadrature::QuadratureSpec& base = {});

} // namespace rfisher
