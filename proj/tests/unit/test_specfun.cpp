#include "rfisher/quadrature.hpp"
#include "rfisher/specfun.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace rfisher;
using namespace rfisher::specfun;
using rfisher::test::rel_err;

TEST_CASE("hermite small degrees") {
  CHECK(hermite(0, 0.7).value == 1.0);
  CHECK(hermite(0, 0.7).derivative == 0.0);
  CHECK(hermite(1, 1.0).value == 2.0);
  CHECK(hermite(1, 1.0).derivative == 2.0);
  // H3 = 8x^3 - 12x, H3' = 24x^2 - 12
  CHECK(hermite(3, 0.5).value == doctest::Approx(-5.0).epsilon(1e-15));
  CHECK(hermite(3, 0.5).derivative == doctest::Approx(-6.0).epsilon(1e-15));
}

TEST_CASE("laguerre small degrees") {
  CHECK(assoc_laguerre(0, 1.5, 3.2).value == 1.0);
  CHECK(assoc_laguerre(0, 1.5, 3.2).derivative == 0.0);
  CHECK(assoc_laguerre(1, 0.5, 2.0).value == doctest::Approx(-0.5));
  CHECK(assoc_laguerre(1, 0.5, 2.0).derivative == -1.0);
  // ((a+1)(a+2) - 2(a+2)x + x^2)/2 at a = 0.5, x = 1
  CHECK(assoc_laguerre(2, 0.5, 1.0).value == doctest::Approx(-0.125).epsilon(1e-15));
}

TEST_CASE("gegenbauer small degrees") {
  CHECK(gegenbauer(0, 2.0, 0.3).value == 1.0);
  CHECK(gegenbauer(0, 2.0, 0.3).derivative == 0.0);
  CHECK(gegenbauer(1, 2.0, 0.3).value == doctest::Approx(1.2).epsilon(1e-15));
  CHECK(gegenbauer(1, 2.0, 0.3).derivative == doctest::Approx(4.0));
  // 2a(a+1)x^2 - a
  CHECK(gegenbauer(2, 1.5, -0.5).value == doctest::Approx(0.375).epsilon(1e-15));
}

TEST_CASE("higher degrees against mpmath") {
  CHECK(rel_err(assoc_laguerre(5, 2.5, 3.7).value, 2.0766806666666673294) < 1e-13);
  CHECK(rel_err(assoc_laguerre(5, 2.5, 3.7).derivative, 3.7306833333333328707) < 1e-12);
  CHECK(rel_err(hermite(7, 1.3).value, 1010.9230976000000216) < 1e-13);
  CHECK(rel_err(hermite(7, 1.3).derivative, 487.02886399999942772) < 1e-12);
  CHECK(rel_err(gegenbauer(6, 2.5, 0.3).value, 6.0109021874999995307) < 1e-13);
  CHECK(rel_err(gegenbauer(6, 2.5, 0.3).derivative, 42.268668750000003912) < 1e-12);
}

TEST_CASE("invalid degrees and parameters") {
  CHECK_THROWS_AS(hermite(-1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(assoc_laguerre(2, -1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(gegenbauer(2, 0.0, 0.5), std::invalid_argument);
}

TEST_CASE("ln_gamma") {
  CHECK(ln_gamma(1.0) == 0.0);
  CHECK(ln_gamma(2.0) == 0.0);
  CHECK(rel_err(ln_gamma(0.5), 0.5 * std::log(std::numbers::pi)) < 1e-15);
  CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(ln_gamma(-2.5), std::domain_error);

  // mpmath loggamma at 40 digits.
  const std::pair<double, double> table[] = {
      {0.5, 0.57236494292470008707},   {0.75, 0.20328095143129537148},  {1.5, -0.12078223763524522235},
      {2.5, 0.28468287047291915963},   {3.3, 0.98709857789473458788},   {7.5, 7.5343642367587329552},
      {10.25, 13.368023671476046295},  {33.1, 81.906241085677230312},   {100.5, 361.43554046777762156},
      {250.75, 1132.6644916865745857}, {499.5, 2602.0092968128980469}};
  for (auto [x, want] : table) {
    CAPTURE(x);
    CHECK(rel_err(ln_gamma(x), want) <= 1e-13);
  }
  // Recurrence ln G(x+1) = ln G(x) + ln x on random points.
  for (int i = 0; i < 200; ++i) {
    const double x = test::uniform(0.5, 499.0);
    CAPTURE(x);
    CHECK(std::abs(ln_gamma(x + 1.0) - ln_gamma(x) - std::log(x)) <= 1e-13 * std::max(1.0, std::abs(ln_gamma(x + 1.0))));
  }
}

TEST_CASE("analytic derivatives match central differences") {
  const double h = 1e-6;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = test::uniform_int(1, 60);
    {
      const double x = test::uniform(-2.0, 2.0);
      const double fd = (hermite(n, x + h).value - hermite(n, x - h).value) / (2 * h);
      const double d = hermite(n, x).derivative;
      CAPTURE(n);
      CAPTURE(x);
      const double mag = std::abs(d) + std::abs(hermite(n, x).value);
      CHECK(std::abs(fd - d) <= 1e-6 * mag);
    }
    {
      const double a = test::uniform(-0.5, 20.0);
      const double x = test::uniform(0.0, 3.0 * n + a + 2.0);
      const double fd = (assoc_laguerre(n, a, x + h).value - assoc_laguerre(n, a, x - h).value) / (2 * h);
      const double d = assoc_laguerre(n, a, x).derivative;
      CAPTURE(n);
      CAPTURE(a);
      CAPTURE(x);
      const double mag = std::abs(d) + std::abs(assoc_laguerre(n, a, x).value);
      CHECK(std::abs(fd - d) <= 1e-6 * mag);
    }
    {
      const double a = test::uniform(0.2, 10.0);
      const double x = test::uniform(-0.99, 0.99);
      const double fd = (gegenbauer(n, a, x + h).value - gegenbauer(n, a, x - h).value) / (2 * h);
      const double d = gegenbauer(n, a, x).derivative;
      CAPTURE(n);
      CAPTURE(a);
      CAPTURE(x);
      const double mag = std::abs(d) + std::abs(gegenbauer(n, a, x).value);
      CHECK(std::abs(fd - d) <= 1e-6 * mag);
    }
  }
}

TEST_CASE("laguerre orthogonality by quadrature") {
  quadrature::QuadratureSpec spec;
  spec.rel_tol = 1e-12;
  spec.abs_tol = 1e-11;
  for (double a : {0.5, 1.5, 2.5}) {
    spec.scale = 1.0 + a;
    for (int i = 0; i <= 8; ++i)
      for (int j = 0; j <= i; ++j) {
        auto f = [&](double u) {
          return std::pow(u, a) * std::exp(-u) * assoc_laguerre(i, a, u).value * assoc_laguerre(j, a, u).value;
        };
        const auto r = quadrature::integrate(f, spec);
        CAPTURE(a);
        CAPTURE(i);
        CAPTURE(j);
        REQUIRE(r.converged);
        if (i == j) {
          const double want = std::exp(ln_gamma(i + a + 1.0) - ln_factorial(i));
          CHECK(rel_err(r.value, want) <= 1e-9);
        } else {
          const double norm = std::exp(0.5 * (ln_gamma(i + a + 1.0) - ln_factorial(i) + ln_gamma(j + a + 1.0) - ln_factorial(j)));
          CHECK(std::abs(r.value) <= 1e-9 * norm);
        }
      }
  }
}

TEST_CASE("hermite full-line orthogonality by quadrature") {
  quadrature::QuadratureSpec spec;
  spec.domain = quadrature::Domain::full_line;
  spec.rel_tol = 1e-12;
  auto norm = [](int m) { return std::exp(m * std::numbers::ln2 + ln_factorial(m)) * std::sqrt(std::numbers::pi); };
  for (int m = 0; m <= 8; ++m)
    for (int k = 0; k <= m; ++k) {
      const double scale = std::sqrt(norm(m) * norm(k));
      spec.abs_tol = 1e-11 * scale;
      auto f = [&](double y) { return std::exp(-y * y) * hermite(m, y).value * hermite(k, y).value; };
      const auto r = quadrature::integrate(f, spec);
      CAPTURE(m);
      CAPTURE(k);
      REQUIRE(r.converged);
      if (m == k)
        CHECK(rel_err(r.value, norm(m)) <= 1e-9);
      else
        CHECK(std::abs(r.value) <= 1e-9 * scale);
    }
}
