#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rsiegel/riemann_siegel.hpp"

using namespace rsiegel;

namespace {
const double kZeta2 = kPi * kPi / 6.0;
double scaled(Complex a, Complex b) { return std::abs(a - b) / (1.0 + std::abs(b)); }
}  // namespace

// These pin the path orientation: with the opposite sense F(2) changes sign
// and the completed value at s = 2 is no longer pi/6.
TEST_CASE("orientation is fixed by zeta(2)") {
  const auto f2 = f_upper_classical(2.0);
  CHECK(std::abs(f2.value - Complex(-kPi / 12.0, -0.5)) < 1e-12);
  CHECK(std::abs(completed_zeta(2.0).value - kPi / 6.0) < 1e-12);
  CHECK(std::abs(completed_zeta(2.0, {}, Method::kPcf).value - kPi / 6.0) < 1e-12);
}

// Reference values from mpmath at 30 digits.
TEST_CASE("F against frozen reference values") {
  CHECK(rel_diff(f_upper_classical(3.0).value, {0.0138973060266, -0.3931730868322}) < 1e-11);
  CHECK(rel_diff(f_upper_pcf({0.5, 3.0}).value, {-0.04358542781, 0.05011457038}) < 1e-9);
  CHECK(rel_diff(f_upper_pcf({-0.3, 2.0}).value, {0.02308625559, 0.15650361077}) < 1e-9);
}

TEST_CASE("integrand smoke value") {
  // e^{i pi u^2} u^{-2} / (e^{i pi u} - e^{-i pi u}) at u = 1/2
  const Complex u = 0.5;
  const Complex v = std::exp(kI * kPi * u * u) / (u * u) /
                    (std::exp(kI * kPi * u) - std::exp(-kI * kPi * u));
  CHECK(std::abs(v - std::polar(1.0, kPi / 4) * 4.0 / (2.0 * kI)) < 1e-15);
}

TEST_CASE("form equivalence") {
  for (Complex s : {Complex(2.0), Complex(1.0), Complex(0.5, 3.0), Complex(0.5, -3.0)}) {
    const auto a = f_upper_classical(s);
    const auto b = f_upper_pcf(s);
    CHECK(a.converged);
    CHECK(b.converged);
    CHECK(scaled(b.value, a.value) < 1e-7);
    CHECK(a.nodes_used > 0);
  }
}

TEST_CASE("lower term routes") {
  for (Method m : {Method::kClassical, Method::kPcf}) {
    const auto a = f_lower(2.0, {}, m, LowerRoute::kConjugation);
    const auto b = f_lower(2.0, {}, m, LowerRoute::kDirect);
    CHECK(scaled(a.value, b.value) < 1e-8);
  }
  // real s: conj(F(1 - s))
  const auto l = f_lower(0.3, {}, Method::kClassical);
  CHECK(std::abs(l.value - std::conj(f_upper_classical(0.7).value)) < 1e-15);
}

TEST_CASE("zeta values") {
  CHECK(std::abs(zeta(2.0).value - kZeta2) < 1e-10);
  CHECK(std::abs(zeta(2.0, {}, Method::kPcf).value - kZeta2) < 1e-10);
  CHECK(std::abs(zeta(3.0).value - 1.20205690315959429) < 1e-10);
  CHECK(std::abs(zeta(0.5).value + 1.46035450880958681) < 1e-10);
  CHECK(rel_diff(zeta({0.5, 10.0}, {}, Method::kPcf).value,
                 {1.54489522029675277, -0.115336465271273375}) < 1e-9);
  // left of the strip, through the reflected terms
  CHECK(std::abs(zeta(-2.5).value - 0.00851692877785033054) < 1e-10);
  CHECK(rel_diff(zeta({-1.5, 3.0}).value, {0.201328830542150329, 0.0971497430156200409}) < 1e-9);
}

TEST_CASE("removable points use the circle formula") {
  const auto near = completed_zeta(3.0 + 1e-3);
  const auto at = completed_zeta(3.0);
  CHECK(std::abs(at.value - near.value) < 1e-3);
  CHECK(std::abs(at.value - std::pow(kPi, -1.5) * complex_gamma(1.5) * 1.20205690315959429) <
        1e-11);
  CHECK(std::isfinite(completed_zeta(-2.0).value.real()));
}

TEST_CASE("poles and domain") {
  CHECK_THROWS_AS(zeta(1.0), PoleError);
  CHECK_THROWS_AS(zeta(1.03), PoleError);
  CHECK_THROWS_AS(zeta(0.0), PoleError);
  CHECK_THROWS_AS(zeta(-2.0), PoleError);
  CHECK_THROWS_AS(completed_zeta(0.02), PoleError);
  CHECK_THROWS_AS(zeta({0.5, 60.0}), DomainError);
  CHECK_THROWS_AS(f_upper({0.5, 1.0}, {}, Method::kOracle), DomainError);
  CHECK_THROWS_AS(parse_method("fast"), DomainError);
  CHECK(parse_method(to_string(Method::kPcf)) == Method::kPcf);
}

TEST_CASE("eta oracle") {
  CHECK(std::abs(eta_series_oracle(2.0) - kZeta2) < 1e-13);
  CHECK(std::abs(eta_series_oracle(4.0) - std::pow(kPi, 4) / 90.0) < 1e-13);
  CHECK(rel_diff(eta_series_oracle({0.25, 30.0}),
                 {-0.586482788839217947, -0.611149631076442808}) < 1e-11);
  CHECK(std::abs(eta_series_oracle({0.5, 14.134725})) < 1e-4);
  CHECK_THROWS_AS(eta_series_oracle(-0.5), DomainError);
  CHECK_THROWS_AS(eta_series_oracle({1.0, 2.0 * kPi / std::log(2.0)}), DomainError);
}

TEST_CASE("critical line") {
  const auto v = completed_zeta(0.5);
  CHECK(std::abs(v.value.imag()) < 1e-9);
  CHECK(std::abs(completed_zeta({0.5, 14.134725}).value) < 1e-4);
}
