#pragma once

#include "rfisher/quadrature.hpp"
#include "rfisher/rational.hpp"
#include "rfisher/systems.hpp"

#include <optional>
#include <stdexcept>

namespace rfisher {

/// Closed-form relative Fisher information with an optional numeric check.
struct IRResult {
  double closed_form = 0.0;
  std::optional<double> numeric;
  std::optional<double> abs_diff;
  std::optional<double> rel_diff;
  std::optional<quadrature::QuadratureResult> quadrature;
};

/// ir_spacing was asked for a family without a constant spacing.
class UnsupportedFamily : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Closed-form IR of `target` relative to reference_state(target):
///   1D oscillator    4 sqrt2 omega n            | 8 sqrt2 n / omega
///   3D oscillator    16 omega n_r               | 16 n_r / omega
///   hydrogenic       8 (n-l-1) / (Z n^3)        | 16 Z n^2 (n^2 - (l+1)^2)
///   pseudoharmonic   32 n_r lambda              | 8 n_r / lambda
/// (position | momentum). The target's own reference yields 0.
double closed_form_ir(const QuantumState& target);

/// Exact value for hydrogenic targets with integral Z; empty otherwise.
std::optional<Rational> closed_form_ir_exact(const QuantumState& target);

/// 4 * integral of s^2 (R_t' - R_t R_ref'/R_ref)^2 over the half line, or
/// 4 * integral of (psi_t' - psi_t psi_ref'/psi_ref)^2 over the full line in
/// 1D. Throws std::invalid_argument if `reference` has interior nodes or
/// belongs to another system, space or l.
quadrature::QuadratureResult ir_integral(const QuantumState& target, const QuantumState& reference,
                                         const quadrature::QuadratureSpec& base = {});

/// Numeric IR against reference_state(target), compared with the closed form.
/// Quadrature failure is reported in the result, not thrown.
IRResult numeric_ir(const QuantumState& target, const quadrature::QuadratureSpec& base = {});

/// Constant IR difference between neighbouring states: 4 sqrt2 omega and
/// 8 sqrt2/omega (1D, per unit n); 8 omega and 8/omega (3D oscillator, per
/// unit principal number n = 2 n_r + l); 32 lambda and 8/lambda (PHP, per
/// unit n_r). Throws UnsupportedFamily for hydrogenic systems.
double ir_spacing(const SystemParams& params, Space space);

/// closed_form_ir in position times closed_form_ir in momentum.
double ir_product(const QuantumState& target);

struct IrMaximum {
  int n_star = 0;
  double value = 0.0;
  Rational exact;
};

/// Principal number maximizing the hydrogenic position-space IR 8(n-l-1)/n^3
/// at fixed l (Z = 1; other Z rescale the value only).
IrMaximum hydrogen_ir_max(int l);

struct HydrogenAsymptotics {
  double ir_position = 0.0; ///< -16 E_n / Z^3
  double ir_momentum = 0.0; ///< 4 Z^5 / E_n^2
};

/// Large-n approximations in terms of the bound-state energy E_n.
HydrogenAsymptotics hydrogen_asymptotics(int n, int l, double Z);

} // namespace rfisher
