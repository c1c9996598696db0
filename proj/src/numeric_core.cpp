#include "rsiegel/numeric_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <tuple>

#include "rsiegel/kernels.hpp"

namespace rsiegel {

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw DomainError("quadrature tolerances must be positive");
  }
  if (panel_order < 4) throw DomainError("panel_order must be >= 4");
  if (max_refinements < 1) throw DomainError("max_refinements must be >= 1");
  if (!(truncation_sigma >= 1.0)) {
    throw DomainError("truncation_sigma must be >= 1");
  }
}

double QuadratureConfig::tolerance_for(double magnitude) const {
  return std::max(abs_tol, rel_tol * magnitude);
}

QuadratureResult& QuadratureResult::operator+=(const QuadratureResult& other) {
  value += other.value;
  abs_error_estimate += other.abs_error_estimate;
  nodes_used += other.nodes_used;
  refinements = std::max(refinements, other.refinements);
  converged = converged && other.converged;
  return *this;
}

bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

double rel_diff(Complex a, Complex b) {
  return std::abs(a - b) / (std::abs(b) + 1e-300);
}

void CompensatedSum::add_part(double& sum, double& c, double x) {
  const double t = sum + x;
  if (std::abs(sum) >= std::abs(x)) {
    c += (sum - t) + x;
  } else {
    c += (x - t) + sum;
  }
  sum = t;
}

void CompensatedSum::add(Complex term) {
  add_part(re_sum_, re_c_, term.real());
  add_part(im_sum_, im_c_, term.imag());
}

// ---------------------------------------------------------------------------
// Gamma
// ---------------------------------------------------------------------------

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

Complex lanczos_gamma(Complex z) {
  z -= 1.0;
  Complex series = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * series;
}

}  // namespace

Complex complex_gamma(Complex z) {
  if (z.real() <= 0.5) {
    const double nearest = std::round(z.real());
    if (nearest <= 0.0 && std::abs(z - Complex(nearest, 0.0)) < 1e-12) {
      throw PoleError("gamma pole at z = " + std::to_string(nearest));
    }
  }
  if (z.real() >= 0.5) return lanczos_gamma(z);
  return kPi / (std::sin(kPi * z) * lanczos_gamma(1.0 - z));
}

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

QuadratureResult adaptive_integrate(const RealIntegrand& f, double t_lo,
                                    double t_hi, const QuadratureConfig& cfg,
                                    int initial_panels) {
  cfg.validate();
  if (!(t_lo < t_hi)) throw DomainError("adaptive_integrate needs t_lo < t_hi");
  const auto rule = kernels::gauss_legendre(cfg.panel_order);

  QuadratureResult out;
  int panels = std::max(1, initial_panels);
  auto level = kernels::panel_sum(f, t_lo, t_hi, panels, *rule, cfg.parallel);
  out.nodes_used = level.nodes;
  Complex previous = level.value;
  double diff = std::numeric_limits<double>::infinity();

  for (int r = 1; r <= cfg.max_refinements; ++r) {
    panels *= 2;
    level = kernels::panel_sum(f, t_lo, t_hi, panels, *rule, cfg.parallel);
    out.nodes_used += level.nodes;
    out.refinements = r;
    diff = std::abs(level.value - previous);
    previous = level.value;
    if (diff <= cfg.tolerance_for(std::abs(level.value))) {
      out.converged = true;
      break;
    }
  }
  out.value = previous;
  out.abs_error_estimate = diff;
  return out;
}

QuadratureResult integrate_segments(const RealIntegrand& f,
                                    const std::vector<double>& breakpoints,
                                    const QuadratureConfig& cfg) {
  cfg.validate();
  if (breakpoints.size() < 2) {
    throw DomainError("integrate_segments needs at least two breakpoints");
  }
  const auto rule = kernels::gauss_legendre(cfg.panel_order);

  struct Segment {
    double lo, hi;
    int panels = 1;
    int level = 0;
    Complex value{};
    double diff = 0.0;
  };
  std::vector<Segment> segs;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] > breakpoints[i]) {
      segs.push_back({breakpoints[i], breakpoints[i + 1]});
    }
  }
  if (segs.empty()) throw DomainError("integrate_segments: empty range");

  QuadratureResult out;
  // The segments are usually few and short, so the kernel stays serial here;
  // callers parallelise one level up.
  for (auto& s : segs) {
    const auto coarse = kernels::panel_sum_serial(f, s.lo, s.hi, 1, *rule);
    const auto fine = kernels::panel_sum_serial(f, s.lo, s.hi, 2, *rule);
    out.nodes_used += coarse.nodes + fine.nodes;
    s.panels = 2;
    s.level = 1;
    s.value = fine.value;
    s.diff = std::abs(fine.value - coarse.value);
  }

  auto total = [&] {
    CompensatedSum acc;
    double err = 0.0;
    for (const auto& s : segs) {
      acc.add(s.value);
      err += s.diff;
    }
    return std::pair{acc.value(), err};
  };

  auto [value, err] = total();
  while (err > cfg.tolerance_for(std::abs(value))) {
    Segment* worst = nullptr;
    for (auto& s : segs) {
      if (s.level >= cfg.max_refinements) continue;
      if (worst == nullptr || s.diff > worst->diff) worst = &s;
    }
    if (worst == nullptr) break;
    worst->panels *= 2;
    worst->level += 1;
    const auto next =
        kernels::panel_sum_serial(f, worst->lo, worst->hi, worst->panels, *rule);
    out.nodes_used += next.nodes;
    worst->diff = std::abs(next.value - worst->value);
    worst->value = next.value;
    std::tie(value, err) = total();
  }

  out.value = value;
  out.abs_error_estimate = err;
  out.converged = err <= cfg.tolerance_for(std::abs(value));
  for (const auto& s : segs) out.refinements = std::max(out.refinements, s.level);
  return out;
}

}  // namespace rsiegel
