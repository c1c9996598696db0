#pragma once

// Panel-sum kernels behind the quadrature routines. The OpenMP variant is
// the production path; the serial variant is the reference it is tested
// against. Both accumulate per-panel partial sums in panel order, so they
// return bitwise-identical values.

#include <memory>
#include <span>
#include <vector>

#include "rsiegel/numeric_core.hpp"

namespace rsiegel::kernels {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order() const { return static_cast<int>(nodes.size()); }
};

/// Cached rule of the given order (computed once, shared across threads).
std::shared_ptr<const GaussRule> gauss_legendre(int order);

struct PanelSum {
  Complex value{};
  long nodes = 0;
};

/// Sum of the rule applied to `panels` equal panels of [a, b].
PanelSum panel_sum_serial(const RealIntegrand& f, double a, double b,
                          int panels, const GaussRule& rule);

/// Same contract as panel_sum_serial; panels are distributed over threads.
PanelSum panel_sum_parallel(const RealIntegrand& f, double a, double b,
                            int panels, const GaussRule& rule);

/// Dispatches to the parallel kernel when it is enabled, worthwhile, and
/// not already inside a parallel region.
PanelSum panel_sum(const RealIntegrand& f, double a, double b, int panels,
                   const GaussRule& rule, bool allow_parallel);

/// Evaluates fn(i) for i in [0, n) into out; OpenMP over i when allowed.
template <class Fn>
void parallel_for(long n, bool allow_parallel, Fn&& fn);

bool openmp_available();
int max_threads();

}  // namespace rsiegel::kernels

#include "rsiegel/kernels_inl.hpp"
