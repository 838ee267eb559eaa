#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace rfisher::quadrature {

enum class Domain { half_line, full_line };

/// Integration request.
///
/// The half line is mapped to (0, 1) by s = scale * t / (1 - t) and integrated
/// with adaptive 15-point Gauss-Kronrod panels, which never sample t = 0 or
/// t = 1. The full line is folded onto the half line as f(s) + f(-s).
struct QuadratureSpec {
  Domain domain = Domain::half_line;
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_refinements = 40;     ///< maximum bisection depth of any panel
  double scale = 1.0;           ///< transform length; the integrand's natural size
  int initial_panels = 32;      ///< uniform partition of (0, 1) before refinement
  long max_evaluations = 400000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Thrown when the integrand returns NaN or infinity at a node.
class NonFiniteIntegrand : public std::runtime_error {
public:
  NonFiniteIntegrand(double node, double sample);
  double node() const { return node_; }

private:
  double node_;
};

using Integrand = std::function<double(double)>;

/// Throws std::invalid_argument for a malformed spec. Non-convergence is
/// reported through `converged`, never thrown.
QuadratureResult integrate(const Integrand& f, const QuadratureSpec& spec = {});

/// One Gauss-Kronrod panel on [a, b]: Kronrod value and the scaled
/// |K15 - G7| error estimate used by the adaptive driver.
struct PanelEstimate {
  double kronrod = 0.0;
  double error = 0.0;
};
PanelEstimate gauss_kronrod_15(const Integrand& f, double a, double b);

} // namespace rfisher::quadrature
