#include "rfisher/molecules.hpp"
#include "rfisher/quadrature.hpp"
#include "rfisher/specfun.hpp"
#include "rfisher/wavefunctions.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

using namespace rfisher;
using rfisher::test::rel_err;

namespace {

std::vector<QuantumState> grid(Space sp) {
  std::vector<QuantumState> out;
  for (int n = 0; n <= 8; ++n)
    for (double w : {0.5, 1.0, std::numbers::sqrt2, 3.0}) out.push_back(QuantumState::qho1d(w, n, sp));
  for (int nr = 0; nr <= 8; ++nr)
    for (int l = 0; l <= 4; ++l)
      for (double w : {0.5, 2.0}) out.push_back(QuantumState::qho3d(w, nr, l, sp));
  for (int n = 1; n <= 8; ++n)
    for (int l = 0; l < n && l <= 4; ++l)
      for (double Z : {1.0, 2.0, 5.0}) out.push_back(QuantumState::hydrogenic(Z, n, l, sp));
  for (const auto& rec : registry())
    for (int nr = 0; nr <= 8; ++nr) out.push_back(QuantumState::pseudoharmonic(to_atomic_units(rec), nr, 0, sp));
  return out;
}

} // namespace

TEST_CASE("1D oscillator values") {
  const auto a = eval_1d_qho(0, std::numbers::sqrt2, Space::position, 0.0);
  CHECK(a.value == doctest::Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-15));
  CHECK(a.derivative == 0.0);
  for (Space sp : {Space::position, Space::momentum})
    for (double w : {0.3, 1.0, 4.0}) CHECK(eval_1d_qho(1, w, sp, 0.0).value == 0.0);
  // (1/(sqrt2 pi))^{1/4} exp(-1/(2 sqrt2))
  CHECK(rel_err(eval_1d_qho(0, 1.0, Space::position, 1.0).value, 0.48365702009912712) < 1e-14);
  // Position and momentum coincide at omega = sqrt2.
  for (int n = 0; n <= 6; ++n) {
    const auto x = eval_1d_qho(n, std::numbers::sqrt2, Space::position, 0.77);
    const auto p = eval_1d_qho(n, std::numbers::sqrt2, Space::momentum, 0.77);
    CHECK(std::abs(std::abs(x.value) - std::abs(p.value)) < 1e-14);
  }
}

TEST_CASE("radial values") {
  const auto o = eval_radial(QuantumState::qho3d(1.0, 0, 0, Space::position), 0.5);
  CHECK(rel_err(o.value, 1.3257319328849591) < 1e-14);
  const auto h = eval_radial(QuantumState::hydrogenic(1.0, 1, 0, Space::position), 1.0);
  CHECK(rel_err(h.value, 2.0 * std::exp(-1.0)) < 1e-14);
  CHECK(rel_err(h.derivative, -2.0 * std::exp(-1.0)) < 1e-14);
  // 2p momentum vanishes at the origin like p.
  const auto st = QuantumState::hydrogenic(1.0, 2, 1, Space::momentum);
  CHECK(std::abs(eval_radial(st, 1e-8).value) < 1e-6);
  // Textbook 1s momentum radial function 4 sqrt(2/pi) / (p^2 + 1)^2.
  for (double p : {0.1, 0.7, 2.3}) {
    const double want = std::sqrt(2.0 / std::numbers::pi) * 4.0 / std::pow(p * p + 1.0, 2);
    CHECK(rel_err(eval_radial(QuantumState::hydrogenic(1.0, 1, 0, Space::momentum), p).value, want) < 1e-13);
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(eval_radial(QuantumState::hydrogenic(1.0, 2, 0, Space::position), 0.0), std::domain_error);
  CHECK_THROWS_AS(eval_radial(QuantumState::qho3d(1.0, 2, 0, Space::position), -1.0), std::domain_error);
  CHECK_THROWS_AS(eval_radial(QuantumState::qho1d(1.0, 2, Space::position), 1.0), std::invalid_argument);
  CHECK_NOTHROW(evaluate(QuantumState::qho1d(1.0, 2, Space::position), -1.0));
}

TEST_CASE("normalization over the test grid") {
  for (Space sp : {Space::position, Space::momentum})
    for (const auto& st : grid(sp)) {
      CAPTURE(to_string(st.kind()));
      CAPTURE(to_string(sp));
      CAPTURE(st.n);
      CAPTURE(st.l);
      CAPTURE(params_digest(st.system));
      CHECK(normalization_defect(st) <= 1e-9);
    }
  CHECK(normalization_defect(QuantumState::hydrogenic(1.0, 1, 0, Space::position)) <= 1e-10);
  CHECK(normalization_defect(QuantumState::qho3d(2.0, 3, 2, Space::momentum)) <= 1e-10);
}

TEST_CASE("analytic derivatives match central differences") {
  for (Space sp : {Space::position, Space::momentum})
    for (const auto& st : grid(sp)) {
      const double L = natural_scale(st);
      double lo = 0.05 * L, hi = 4.0 * L;
      if (st.kind() == SystemKind::qho1d) lo = -3.0 * L;
      if (st.kind() == SystemKind::php) {
        // s^gamma envelope pushes the density out to sqrt(gamma/2) L or sqrt(2 gamma) L.
        const double g = php_derived(std::get<Pseudoharmonic>(st.system), st.l).gamma_l;
        const double c = (sp == Space::position ? std::sqrt(g / 2.0) : std::sqrt(2.0 * g)) * L;
        lo = c - 3.0 * L;
        hi = c + 3.0 * L;
      }
      std::vector<double> pts(20);
      double dmax = 0.0;
      for (double& s : pts) {
        s = test::uniform(lo, hi);
        dmax = std::max(dmax, std::abs(evaluate(st, s).derivative));
      }
      for (double s : pts) {
        const double h = 1e-6 * L;
        const auto w = evaluate(st, s);
        if (std::abs(w.derivative) < 1e-3 * dmax) continue;
        const double fd = (evaluate(st, s + h).value - evaluate(st, s - h).value) / (2.0 * h);
        CAPTURE(to_string(st.kind()));
        CAPTURE(to_string(sp));
        CAPTURE(st.n);
        CAPTURE(st.l);
        CAPTURE(s);
        CHECK(std::abs(fd - w.derivative) <= 1e-6 * (std::abs(w.derivative) + std::abs(w.value) / L));
      }
    }
}

TEST_CASE("radial node counts") {
  auto sign_changes = [](const QuantumState& st) {
    const double L = natural_scale(st);
    int changes = 0;
    double prev = 0.0;
    for (int i = 1; i <= 20000; ++i) {
      const double s = i * 40.0 * L / 20000.0;
      const double v = eval_radial(st, s).value;
      if (v == 0.0) continue;
      if (prev != 0.0 && (v > 0) != (prev > 0)) ++changes;
      prev = v;
    }
    return changes;
  };
  for (int nr = 0; nr <= 6; ++nr)
    for (int l = 0; l <= 3; ++l) CHECK(sign_changes(QuantumState::qho3d(1.3, nr, l, Space::position)) == nr);
  for (int n = 1; n <= 8; ++n)
    for (int l = 0; l < n; ++l) CHECK(sign_changes(QuantumState::hydrogenic(1.0, n, l, Space::position)) == n - l - 1);
  const auto h2 = to_atomic_units(find_molecule("H2"));
  for (int nr = 0; nr <= 6; ++nr) CHECK(sign_changes(QuantumState::pseudoharmonic(h2, nr, 0, Space::position)) == nr);
}

TEST_CASE("odd gegenbauer moment vanishes") {
  // integral over (-1, 1) of q (1-q^2)^{l+3/2} [C_{n-l-2}^{l+2}(q)]^2, split at 0 and mapped by q = tanh x.
  for (int n = 2; n <= 10; ++n)
    for (int l = 0; l <= n - 2; ++l) {
      auto g = [n, l](double x) {
        const double q = std::tanh(x);
        const double c = specfun::gegenbauer(n - l - 2, l + 2.0, q).value;
        const double sech2 = 1.0 - q * q;
        return q * std::pow(sech2, l + 1.5) * c * c * sech2;
      };
      quadrature::QuadratureSpec spec;
      spec.rel_tol = 1e-13;
      const auto right = quadrature::integrate(g, spec);
      const auto left = quadrature::integrate([&](double x) { return g(-x); }, spec);
      CAPTURE(n);
      CAPTURE(l);
      REQUIRE(right.converged);
      REQUIRE(left.converged);
      CHECK(right.value > 0.0);
      CHECK(std::abs(right.value + left.value) <= 1e-10);
    }
}
