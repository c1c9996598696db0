// Serial reference vs OpenMP panel kernel, and the two Mordell routes.

#include <benchmark/benchmark.h>

#include <cmath>

#include "rsiegel/kernels.hpp"
#include "rsiegel/mordell.hpp"
#include "rsiegel/riemann_siegel.hpp"

using namespace rsiegel;

namespace {

Complex heavy(double t) {
  // a few transcendental calls per node, like the contour integrands
  const Complex u{0.5 + t * M_SQRT1_2, t * M_SQRT1_2};
  return std::exp(kI * kPi * 0.01 * u * u) / (std::exp(2.0 * kPi * kI * u) - 1.0);
}

void BM_PanelSerial(benchmark::State& state) {
  const auto rule = kernels::gauss_legendre(32);
  const int panels = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::panel_sum_serial(heavy, -40.0, 40.0, panels, *rule));
  }
  state.SetItemsProcessed(state.iterations() * panels * 32);
}

void BM_PanelParallel(benchmark::State& state) {
  const auto rule = kernels::gauss_legendre(32);
  const int panels = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::panel_sum_parallel(heavy, -40.0, 40.0, panels, *rule));
  }
  state.SetItemsProcessed(state.iterations() * panels * 32);
}

void BM_MordellDirect(benchmark::State& state) {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-9;
  for (auto _ : state) benchmark::DoNotOptimize(phi_quadrature({0.0, 0.01}, cfg));
}

void BM_MordellTransformed(benchmark::State& state) {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-9;
  for (auto _ : state) benchmark::DoNotOptimize(transform_rhs({0.0, 0.01}, cfg));
}

void BM_ZetaCriticalLine(benchmark::State& state) {
  const Method m = state.range(0) ? Method::kPcf : Method::kClassical;
  for (auto _ : state) benchmark::DoNotOptimize(zeta({0.5, 14.134725}, {}, m));
}

}  // namespace

BENCHMARK(BM_PanelSerial)->Arg(16)->Arg(256)->Arg(4096);
BENCHMARK(BM_PanelParallel)->Arg(16)->Arg(256)->Arg(4096)->UseRealTime();
BENCHMARK(BM_MordellDirect);
BENCHMARK(BM_MordellTransformed);
BENCHMARK(BM_ZetaCriticalLine)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
