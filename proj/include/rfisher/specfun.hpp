#pragma once

// Orthogonal polynomials and gamma-function helpers used by every wavefunction.
// Polynomials are evaluated by forward three-term recurrence in double
// precision; accuracy degrades above degree ~60.

namespace rfisher::specfun {

/// Polynomial value and its first derivative at one point.
struct PolyEval {
  double value = 0.0;
  double derivative = 0.0;
};

/// Physicists' Hermite polynomial H_n(x); H_n' = 2n H_{n-1}.
PolyEval hermite(int n, double x);

/// Associated Laguerre polynomial L_n^alpha(x), alpha > -1;
/// d/dx L_n^alpha = -L_{n-1}^{alpha+1}.
PolyEval assoc_laguerre(int n, double alpha, double x);

/// Gegenbauer polynomial C_n^alpha(x), alpha > 0;
/// d/dx C_n^alpha = 2 alpha C_{n-1}^{alpha+1}.
PolyEval gegenbauer(int n, double alpha, double x);

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double ln_gamma(double x);

/// ln(n!) for n >= 0.
double ln_factorial(int n);

} // namespace rfisher::specfun
