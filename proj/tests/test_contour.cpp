#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rsiegel/contour.hpp"

using namespace rsiegel;

TEST_CASE("arrow conventions") {
  const auto ne = SlantedPath::from_arrow(Arrow::kNE, 0.0, 1.0);
  CHECK(ne.crossing == 0.5);
  CHECK(ne.slope == Slope::kPlusOne);
  CHECK(ne.direction == Direction::kAscending);
  const auto sw = SlantedPath::from_arrow(Arrow::kSW, 0.0, 1.0);
  CHECK(sw.direction == Direction::kDescending);
  const auto se = SlantedPath::from_arrow(Arrow::kSE, -0.5, 0.5);
  CHECK(se.crossing == 0.0);
  CHECK(se.slope == Slope::kMinusOne);
  const auto nw = SlantedPath::from_arrow(Arrow::kNW, 0.0, 1.0, 0.3);
  CHECK(nw.crossing == 0.3);
  CHECK(nw.direction == Direction::kDescending);

  CHECK(std::abs(parameterize(ne, 1.0) - Complex(0.5 + M_SQRT1_2, M_SQRT1_2)) < 1e-15);
  CHECK(std::abs(parameterize(se, 1.0) - Complex(M_SQRT1_2, -M_SQRT1_2)) < 1e-15);
  CHECK_THROWS_AS(SlantedPath::from_arrow(Arrow::kNE, 0.0, 1.0, 1.5), DomainError);
}

TEST_CASE("Gaussian along a slanted line") {
  // int e^{-pi u^2 ...}: on u = t e^{i pi/4}, e^{i pi u^2} = e^{-pi t^2}.
  auto f = [](Complex u) { return std::exp(kI * kPi * u * u); };
  const auto up = SlantedPath::from_arrow(Arrow::kNE, -0.5, 0.5);
  const auto down = SlantedPath::from_arrow(Arrow::kSW, -0.5, 0.5);
  QuadratureConfig cfg;
  const auto a = integrate_slanted(f, up, DecayProfile::gaussian(kPi), cfg);
  const auto b = integrate_slanted(f, down, DecayProfile::gaussian(kPi), cfg);
  const Complex exact = std::polar(1.0, kPi / 4);  // e^{i pi/4} * int e^{-pi t^2} dt
  CHECK(a.converged);
  CHECK(std::abs(a.value - exact) < 1e-13);
  CHECK(std::abs(b.value + exact) < 1e-13);
}

TEST_CASE("truncation window") {
  QuadratureConfig cfg;
  const auto [lo, hi] = truncation_window(DecayProfile::gaussian(1.0, 2.0), cfg);
  CHECK(lo < 2.0);
  CHECK(hi > 2.0);
  CHECK(std::abs((hi - 2.0) - (2.0 - lo)) < 1e-12);
  CHECK(std::exp(-(hi - 2.0) * (hi - 2.0)) < cfg.abs_tol);
  const auto w = truncation_window(DecayProfile::explicit_window(-1.0, 3.0), cfg);
  CHECK(w.first == -1.0);
  CHECK(w.second == 3.0);
}

TEST_CASE("ray integral with an endpoint singularity") {
  QuadratureConfig cfg;
  // int_0^inf r^{-1/2} e^{-r} dr = sqrt(pi)
  auto f = [](Complex z) { return std::exp(-z) / std::sqrt(z); };
  const auto r = integrate_ray(f, 0.0, cfg, DecayProfile::exponential(1.0));
  CHECK(std::abs(r.value - std::sqrt(kPi)) < 1e-10);
  auto bad = [](Complex z) { return std::exp(-z) / (z * z); };
  CHECK_THROWS_AS(integrate_ray(bad, 0.0, cfg, DecayProfile::exponential(1.0)),
                  SingularAtOrigin);
}
