#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rsiegel/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace rsiegel;
using namespace rsiegel::kernels;

TEST_CASE("Gauss-Legendre rule") {
  for (int order : {4, 8, 32}) {
    const auto rule = gauss_legendre(order);
    REQUIRE(rule->order() == order);
    double wsum = 0.0, x4 = 0.0;
    for (int k = 0; k < order; ++k) {
      wsum += rule->weights[k];
      x4 += rule->weights[k] * std::pow(rule->nodes[k], 4);
    }
    CHECK(std::abs(wsum - 2.0) < 1e-14);
    CHECK(std::abs(x4 - 0.4) < 1e-14);
  }
  CHECK(gauss_legendre(32).get() == gauss_legendre(32).get());
}

TEST_CASE("serial and parallel panel sums are bitwise identical") {
#ifdef _OPENMP
  omp_set_num_threads(4);
#endif
  const auto rule = gauss_legendre(32);
  auto f = [](double t) { return Complex(std::exp(-t * t) * std::cos(3 * t), std::sin(t)); };
  for (int panels : {1, 3, 16, 257}) {
    const auto a = panel_sum_serial(f, -5.0, 7.0, panels, *rule);
    const auto b = panel_sum_parallel(f, -5.0, 7.0, panels, *rule);
    const auto c = panel_sum(f, -5.0, 7.0, panels, *rule, true);
    CHECK(a.value == b.value);
    CHECK(a.value == c.value);
    CHECK(a.nodes == b.nodes);
    CHECK(a.nodes == 32L * panels);
  }
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<int> hits(1000, 0);
  parallel_for(1000, true, [&](long i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK(max_threads() >= 1);
}
