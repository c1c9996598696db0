#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rsiegel/numeric_core.hpp"

using namespace rsiegel;
using doctest::Approx;

TEST_CASE("gamma at classical points") {
  CHECK(std::abs(complex_gamma(1.0) - 1.0) < 1e-14);
  CHECK(std::abs(complex_gamma(0.5) - std::sqrt(kPi)) < 1e-14);
  CHECK(std::abs(complex_gamma(4.0) - 6.0) < 1e-13);
  CHECK(std::abs(complex_gamma(-0.5) + 2.0 * std::sqrt(kPi)) < 1e-13);
  // mpmath: gamma(1+i)
  const Complex g = complex_gamma({1.0, 1.0});
  CHECK(rel_diff(g, {0.498015668118356, -0.154949828301811}) < 1e-13);
  // mpmath: gamma(30.5)
  CHECK(rel_diff(complex_gamma(30.5), 4.8226969334909086e+31) < 1e-12);
}

TEST_CASE("gamma poles throw") {
  CHECK_THROWS_AS(complex_gamma(0.0), PoleError);
  CHECK_THROWS_AS(complex_gamma(-3.0), PoleError);
  CHECK_NOTHROW(complex_gamma(-3.0 + 1e-6));
}

TEST_CASE("adaptive_integrate basics") {
  QuadratureConfig cfg;
  auto zero = adaptive_integrate([](double) { return Complex{}; }, 0.0, 1.0, cfg);
  CHECK(zero.converged);
  CHECK(zero.value == Complex{});
  CHECK(zero.nodes_used > 0);

  auto gauss = adaptive_integrate([](double t) { return Complex(std::exp(-t * t)); },
                                  -6.0, 6.0, cfg);
  CHECK(gauss.converged);
  CHECK(std::abs(gauss.value - std::sqrt(kPi)) < 1e-10);
  CHECK(gauss.abs_error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(gauss.value)));

  auto poly = adaptive_integrate([](double t) { return Complex(t * t); }, 0.0, 1.0, cfg);
  CHECK(std::abs(poly.value - 1.0 / 3.0) < 1e-12);
}

TEST_CASE("adaptive_integrate reports non-convergence") {
  QuadratureConfig cfg;
  cfg.max_refinements = 1;
  auto r = adaptive_integrate([](double t) { return Complex(std::cos(400.0 * t)); }, 0.0,
                              10.0, cfg);
  CHECK_FALSE(r.converged);
  CHECK(std::isfinite(r.value.real()));
}

TEST_CASE("integrate_segments matches a single interval") {
  QuadratureConfig cfg;
  auto f = [](double t) { return Complex(std::exp(-t), std::sin(t)); };
  auto a = integrate_segments(f, {0.0, 0.1, 1.0, 5.0}, cfg);
  CHECK(a.converged);
  const Complex exact{1.0 - std::exp(-5.0), 1.0 - std::cos(5.0)};
  CHECK(std::abs(a.value - exact) < 1e-12);
}

TEST_CASE("config validation") {
  QuadratureConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.rel_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.panel_order = 3;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.truncation_sigma = 0.5;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("compensated sum keeps small terms") {
  CompensatedSum s;
  s.add(1e16);
  for (int i = 0; i < 100; ++i) s.add(1.0);
  s.add(-1e16);
  CHECK(s.value().real() == Approx(100.0));
}
