#include "rsiegel/kernels.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace rsiegel::kernels {

namespace {

GaussRule compute_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n from the Chebyshev-like initial guesses; the
  // rule is symmetric so only half the roots are solved for.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

Complex one_panel(const RealIntegrand& f, double lo, double hi,
                  const GaussRule& rule) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  Complex acc{};
  for (int j = 0; j < rule.order(); ++j) {
    acc += rule.weights[j] * f(mid + half * rule.nodes[j]);
  }
  return acc * half;
}

PanelSum accumulate(const std::vector<Complex>& partial, int order) {
  CompensatedSum acc;
  for (const auto& p : partial) acc.add(p);
  return {acc.value(), static_cast<long>(partial.size()) * order};
}

}  // namespace

std::shared_ptr<const GaussRule> gauss_legendre(int order) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const GaussRule>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[order];
  if (!slot) slot = std::make_shared<const GaussRule>(compute_rule(order));
  return slot;
}

PanelSum panel_sum_serial(const RealIntegrand& f, double a, double b,
                          int panels, const GaussRule& rule) {
  const double h = (b - a) / panels;
  std::vector<Complex> partial(panels);
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double hi = (p + 1 == panels) ? b : a + (p + 1) * h;
    partial[p] = one_panel(f, lo, hi, rule);
  }
  return accumulate(partial, rule.order());
}

PanelSum panel_sum_parallel(const RealIntegrand& f, double a, double b,
                            int panels, const GaussRule& rule) {
  const double h = (b - a) / panels;
  std::vector<Complex> partial(panels);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double hi = (p + 1 == panels) ? b : a + (p + 1) * h;
    partial[p] = one_panel(f, lo, hi, rule);
  }
  return accumulate(partial, rule.order());
}

PanelSum panel_sum(const RealIntegrand& f, double a, double b, int panels,
                   const GaussRule& rule, bool allow_parallel) {
#ifdef _OPENMP
  if (allow_parallel && panels >= 4 && !omp_in_parallel() &&
      omp_get_max_threads() > 1) {
    return panel_sum_parallel(f, a, b, panels, rule);
  }
#else
  (void)allow_parallel;
#endif
  return panel_sum_serial(f, a, b, panels, rule);
}

bool openmp_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace rsiegel::kernels
