#include "rfisher/specfun.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace rfisher::specfun {

namespace {

void require_degree(int n, const char* who) {
  if (n < 0)
    throw std::invalid_argument(std::string(who) + ": degree must be >= 0, got " +
                                std::to_string(n));
}

// Value of H_n(x) only.
double hermite_value(int n, double x) {
  if (n == 0) return 1.0;
  double h0 = 1.0;
  double h1 = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double laguerre_value(int n, double alpha, double x) {
  if (n == 0) return 1.0;
  double l0 = 1.0;
  double l1 = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double l2 = ((2.0 * k + 1.0 + alpha - x) * l1 - (k + alpha) * l0) / (k + 1.0);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

double gegenbauer_value(int n, double alpha, double x) {
  if (n == 0) return 1.0;
  double c0 = 1.0;
  double c1 = 2.0 * alpha * x;
  for (int k = 1; k < n; ++k) {
    const double c2 = (2.0 * x * (k + alpha) * c1 - (k + 2.0 * alpha - 1.0) * c0) / (k + 1.0);
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

} // namespace

PolyEval hermite(int n, double x) {
  require_degree(n, "hermite");
  PolyEval out{hermite_value(n, x), 0.0};
  if (n > 0) out.derivative = 2.0 * n * hermite_value(n - 1, x);
  return out;
}

PolyEval assoc_laguerre(int n, double alpha, double x) {
  require_degree(n, "assoc_laguerre");
  if (!(alpha > -1.0))
    throw std::invalid_argument("assoc_laguerre: alpha must be > -1");
  PolyEval out{laguerre_value(n, alpha, x), 0.0};
  if (n > 0) out.derivative = -laguerre_value(n - 1, alpha + 1.0, x);
  return out;
}

PolyEval gegenbauer(int n, double alpha, double x) {
  require_degree(n, "gegenbauer");
  if (!(alpha > 0.0))
    throw std::invalid_argument("gegenbauer: alpha must be > 0");
  PolyEval out{gegenbauer_value(n, alpha, x), 0.0};
  if (n > 0) out.derivative = 2.0 * alpha * gegenbauer_value(n - 1, alpha + 1.0, x);
  return out;
}

double ln_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("ln_gamma: argument must be finite and > 0, got " +
                            std::to_string(x));
  return boost::math::lgamma(x);
}

double ln_factorial(int n) {
  require_degree(n, "ln_factorial");
  return ln_gamma(n + 1.0);
}

} // namespace rfisher::specfun
