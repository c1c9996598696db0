#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rsiegel/mordell.hpp"

using namespace rsiegel;

namespace {
const Complex kPhi01{0.146446609406726238, -0.353553390593273762};  // (1 - e^{i pi/4}) / 2
}

TEST_CASE("Phi(0, 1)") {
  const auto q = phi_quadrature({0.0, 1.0});
  CHECK(q.converged);
  CHECK(std::abs(q.value - kPhi01) < 1e-12);
  CHECK(std::abs(phi_rational(0.0, {1, 1}) - kPhi01) < 1e-14);
  CHECK(std::abs((1.0 - std::polar(1.0, kPi / 4)) / 2.0 - kPhi01) < 1e-15);
}

// Reference values from mpmath quadrature at 30 digits.
TEST_CASE("Phi against frozen reference values") {
  CHECK(rel_diff(phi_quadrature({{1.0, 1.0}, {2.0, 1.0}}).value,
                 {-0.309669761332354321, 1.26996493446957366}) < 1e-11);
  CHECK(rel_diff(phi_quadrature({0.3, {0.1, 0.3}}).value,
                 {0.225389051023622882, -0.310714359635495096}) < 1e-11);
  CHECK(rel_diff(phi_quadrature({0.0, 0.01}).value,
                 {-3.03553390593273759, -3.53553390593273759}) < 1e-9);
}

TEST_CASE("closed form grid") {
  int compared = 0, skipped = 0;
  for (int m : {1, 2, 3, 5}) {
    for (int n : {1, 2, 3, 5}) {
      for (Complex x : {Complex(0.0), Complex(0.3), Complex(0.0, 1.0), Complex(1.0, 0.5)}) {
        try {
          const Complex closed = phi_rational(x, {m, n});
          const Complex quad = phi_quadrature({x, double(m) / n}).value;
          CHECK(std::abs(closed - quad) <= 1e-9 * (1.0 + std::abs(quad)));
          ++compared;
        } catch (const DegenerateRationalPoint&) {
          ++skipped;
        }
      }
    }
  }
  CHECK(compared == 54);
  CHECK(skipped == 10);
}

TEST_CASE("degenerate and invalid arguments") {
  CHECK_THROWS_AS(phi_rational(0.0, {1, 2}), DegenerateRationalPoint);
  CHECK_THROWS_AS(phi_rational(0.0, {0, 2}), DomainError);
  CHECK_THROWS_AS(phi_rational(0.0, {1, 65}), DomainError);
  CHECK_THROWS_AS(phi_quadrature({0.0, {-1.0, 1.0}}), DomainError);
  CHECK_THROWS_AS(phi_quadrature({0.0, {0.0, 1.0}}), DomainError);
}

TEST_CASE("functional equation and transformation") {
  CHECK(functional_equation_residual({0.0, 1.0}) < 1e-9);
  CHECK(functional_equation_residual({{1.0, 1.0}, {2.0, 1.0}}) < 1e-8);
  // tau = 1/4 and its dual 4. At x = 0 the rational form is degenerate for
  // both, so the cross-check against it uses x = 0.3 and the dual point.
  CHECK(functional_equation_residual({0.0, 0.25}) < 1e-8);
  CHECK_THROWS_AS(phi_rational(0.0, {1, 4}), DegenerateRationalPoint);
  const MordellArgs quarter{0.3, 0.25};
  CHECK(functional_equation_residual(quarter) < 1e-8);
  CHECK(rel_diff(functional_equation_rhs(quarter), phi_rational(0.3, {1, 4})) < 1e-9);
  CHECK(rel_diff(phi_quadrature({-1.2, 4.0}).value, phi_rational(-1.2, {4, 1})) < 1e-9);

  const auto t = transform_rhs({0.0, 1.0});
  CHECK(std::abs(t.value - kPhi01) < 1e-12);
  CHECK(transformation_residual({{0.5, 1.0}, 1.0}) < 1e-9);
  CHECK(transformation_residual({{1.0, 1.0}, {0.1, 0.3}}) < 1e-8);
}

TEST_CASE("transformed route needs fewer nodes for small tau") {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-9;
  const auto direct = phi_quadrature({0.0, 0.01}, cfg);
  const auto fast = transform_rhs({0.0, 0.01}, cfg);
  CHECK(direct.nodes_used >= 5 * fast.nodes_used);
  CHECK(rel_diff(fast.value, direct.value) < 1e-8);
}

TEST_CASE("crossing choice does not change the value") {
  const MordellArgs args{{1.0, 1.0}, {0.1, 0.3}};
  const Complex ref = phi_quadrature(args, {}, 0.5).value;
  for (double c : {0.3, 0.7}) {
    CHECK(std::abs(phi_quadrature(args, {}, c).value - ref) <= 1e-9 * (1.0 + std::abs(ref)));
  }
  const double c = choose_crossing(kI * kPi * Complex(0.01), 0.0, Slope::kPlusOne);
  CHECK(c > 0.0);
  CHECK(c < 1.0);
}
