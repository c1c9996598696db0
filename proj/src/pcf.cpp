#include "rsiegel/pcf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "rsiegel/contour.hpp"

namespace rsiegel {

Complex ScaledComplex::value() const {
  if (mantissa == Complex{}) return {};
  return mantissa * std::exp(log_scale);
}

double ScaledComplex::log_abs() const {
  const double m = std::abs(mantissa);
  if (m == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(m) + log_scale;
}

namespace {

// ca*A + cb*B evaluated at the larger of the two scales.
ScaledComplex axpby(Complex ca, const ScaledComplex& A, Complex cb,
                    const ScaledComplex& B) {
  const double la = A.mantissa == Complex{} ? -INFINITY : A.log_scale;
  const double lb = B.mantissa == Complex{} ? -INFINITY : B.log_scale;
  const double l = std::max(la, lb);
  if (!std::isfinite(l)) return {};
  Complex m{};
  if (std::isfinite(la)) m += ca * A.mantissa * std::exp(la - l);
  if (std::isfinite(lb)) m += cb * B.mantissa * std::exp(lb - l);
  return {m, l};
}

// Integral representation, Re a > -1/2.
//
// The w-integral runs along a ray w = r e^{i phi} tilted towards the saddle
// of the integrand (|phi| <= 0.6 keeps Re w^2 > 0), which removes most of
// the cancellation when Im a is large. [0, delta] is done by term-wise
// integration of the Taylor series of e^{-zw - w^2/2}; the rest is split
// into a log-r stretch up to r = 1 and linear chunks beyond, restricted to
// where the integrand is within e^{-budget} of its peak.
ScaledComplex pcf_direct(Complex a, Complex z, const QuadratureConfig& cfg) {
  const Complex power = a - 0.5;
  const Complex b = a + 0.5;

  const Complex disc = std::sqrt(z * z + 4.0 * power);
  Complex saddle = 0.5 * (-z + disc);
  const Complex other = 0.5 * (-z - disc);
  if (other.real() > saddle.real()) saddle = other;
  double phi = 0.0;
  if (std::abs(saddle) > 1.0 && saddle.real() > 0.0) {
    phi = std::clamp(std::arg(saddle), -0.6, 0.6);
  }
  const Complex dir = std::polar(1.0, phi);
  const double c2 = std::cos(2.0 * phi);

  const Complex z2q = 0.25 * z * z;
  auto exponent = [&](double r) {
    const Complex w = r * dir;
    const Complex logw(std::log(r), phi);
    return -0.5 * (w + z) * (w + z) + z2q + power * logw;
  };

  const double budget = std::log(1.0 / cfg.abs_tol) + 8.0;
  const double delta = std::min(0.5, 0.5 / (1.0 + std::abs(z)));
  const double r_top =
      std::abs(z) + std::abs(saddle) + std::sqrt(2.0 * budget / c2) + 4.0;

  // Coarse log-modulus scan: peak and significant support.
  constexpr int kScan = 400;
  std::vector<double> grid(kScan), h(kScan);
  const double ratio = std::pow(r_top / delta, 1.0 / (kScan - 1));
  double peak = -INFINITY;
  for (int k = 0; k < kScan; ++k) {
    grid[k] = delta * std::pow(ratio, k);
    h[k] = exponent(grid[k]).real();
    peak = std::max(peak, h[k]);
  }
  const double floor_level = peak - budget;
  int first = 0, last = kScan - 1;
  while (first < kScan && h[first] < floor_level) ++first;
  while (last > 0 && h[last] < floor_level) --last;
  const bool with_series = first == 0;
  const double r_lo = with_series ? delta : grid[first - 1];
  double r_hi = grid[std::min(last + 1, kScan - 1)];
  while (exponent(r_hi).real() >= floor_level) r_hi += 1.0;

  QuadratureConfig inner = cfg;
  inner.parallel = false;
  inner.rel_tol = 0.1 * cfg.rel_tol;

  // q <= 0: r = e^q; q > 0: r = 1 + q.
  std::vector<double> breaks;
  if (r_lo < 1.0) {
    const double q0 = std::log(r_lo);
    const double q1 = std::min(0.0, std::log(r_hi));
    const int n = std::max(1, static_cast<int>(std::ceil(q1 - q0)));
    for (int i = 0; i <= n; ++i) breaks.push_back(q0 + (q1 - q0) * i / n);
  }
  if (r_hi > 1.0) {
    const double q0 = std::max(0.0, r_lo - 1.0);
    const double q1 = r_hi - 1.0;
    const double chunk = 2.0 / std::sqrt(c2);
    const int n = std::max(1, static_cast<int>(std::ceil((q1 - q0) / chunk)));
    if (!breaks.empty()) breaks.pop_back();
    for (int i = 0; i <= n; ++i) breaks.push_back(q0 + (q1 - q0) * i / n);
  }

  auto integrand = [&](double q) -> Complex {
    const double r = q <= 0.0 ? std::exp(q) : 1.0 + q;
    const double jac = q <= 0.0 ? r : 1.0;
    return std::exp(exponent(r) - peak) * dir * jac;
  };
  const auto res = integrate_segments(integrand, breaks, inner);
  if (!res.converged) {
    throw NoConvergence("pcf_u: w-integral did not converge");
  }

  Complex total = res.value;
  if (with_series) {
    const Complex W = delta * dir;
    Complex c_prev = 0.0, c_cur = 1.0, wk = 1.0;
    CompensatedSum series;
    int small = 0;
    for (int k = 0; k < 120 && small < 3; ++k) {
      const Complex term = c_cur * wk / (b + static_cast<double>(k));
      series.add(term);
      small = std::abs(term) < 1e-18 * std::abs(series.value()) ? small + 1 : 0;
      const Complex c_next = (-z * c_cur - c_prev) / static_cast<double>(k + 1);
      c_prev = c_cur;
      c_cur = c_next;
      wk *= W;
    }
    const Complex logW(std::log(delta), phi);
    total += std::exp(-z2q + b * logW - peak) * series.value();
  }
  return {total / complex_gamma(b), peak};
}

ScaledComplex recurse_down(Complex a, Complex z, int steps,
                           const QuadratureConfig& cfg) {
  Complex top = a + static_cast<double>(steps);
  ScaledComplex upper = pcf_direct(top + 1.0, z, cfg);
  ScaledComplex mid = pcf_direct(top, z, cfg);
  for (int i = 0; i < steps; ++i) {
    // U(b-1) = z U(b) + (b + 1/2) U(b+1)
    ScaledComplex lower = axpby(z, mid, top + 0.5, upper);
    upper = mid;
    mid = lower;
    top -= 1.0;
  }
  return mid;
}

}  // namespace

ScaledComplex pcf_u_scaled(const PcfArgs& args, const QuadratureConfig& cfg) {
  cfg.validate();
  const double re = args.a.real();
  if (re > -0.5) return pcf_direct(args.a, args.z, cfg);
  const int steps = static_cast<int>(std::floor(-0.5 - re)) + 1;
  if (steps > kMaxRecurrenceSteps) {
    throw OrderOutOfRange("pcf_u: Re a must exceed -9/2");
  }
  return recurse_down(args.a, args.z, steps, cfg);
}

Complex pcf_u(const PcfArgs& args, const QuadratureConfig& cfg) {
  return pcf_u_scaled(args, cfg).value();
}

Complex pcf_u_recurrence(const PcfArgs& args, int steps,
                         const QuadratureConfig& cfg) {
  cfg.validate();
  if (steps < 1 || steps > kMaxRecurrenceSteps) {
    throw OrderOutOfRange("pcf_u_recurrence: steps must be in [1, 4]");
  }
  if (!(args.a.real() + steps > -0.5)) {
    throw OrderOutOfRange("pcf_u_recurrence: starting order not reachable");
  }
  return recurse_down(args.a, args.z, steps, cfg).value();
}

double pcf_recurrence_residual(Complex a, Complex z,
                               const QuadratureConfig& cfg) {
  if (!(a.real() > 0.5)) {
    throw DomainError("pcf_recurrence_residual needs Re a > 1/2");
  }
  const auto lower = pcf_u_scaled({a - 1.0, z}, cfg);
  const auto mid = pcf_u_scaled({a, z}, cfg);
  const auto upper = pcf_u_scaled({a + 1.0, z}, cfg);
  const auto rhs = axpby(z, mid, a + 0.5, upper);
  const auto resid = axpby(1.0, rhs, -1.0, lower);
  const double num = resid.log_abs();
  const double den = lower.log_abs();
  if (!std::isfinite(num)) return 0.0;
  return std::exp(num - den);
}

QuadratureResult pcf_ray_integral(Complex s, Complex u,
                                  const QuadratureConfig& cfg) {
  if (!(s.real() > 0.0)) throw DomainError("pcf_ray_integral needs Re s > 0");
  const double angle = 0.75 * kPi;
  const Complex shift = u - 0.5;
  auto f = [&](Complex z) {
    return std::exp(-kI * kPi * z * z + 2.0 * kPi * kI * shift * z +
                    (s - 1.0) * std::log(z));
  };
  // Along the ray the exponent is -pi r^2 + slope * r + ...
  const double slope = (2.0 * kPi * kI * shift * std::polar(1.0, angle)).real();
  const double center = std::max(0.0, slope / (2.0 * kPi));
  const double log_peak = slope > 0.0 ? slope * slope / (4.0 * kPi) : 0.0;
  return integrate_ray(f, angle, cfg,
                       DecayProfile::gaussian(kPi, center, log_peak));
}

Complex pcf_ray_closed_form(Complex s, Complex u, const QuadratureConfig& cfg) {
  const Complex shift = u - 0.5;
  const Complex zarg = std::sqrt(2.0 * kPi) * std::polar(1.0, 0.25 * kPi) * shift;
  const auto U = pcf_u_scaled({s - 0.5, zarg}, cfg);
  const Complex log_pref = -0.5 * s * std::log(2.0 * kPi) +
                           0.75 * kI * kPi * s +
                           0.5 * kI * kPi * shift * shift;
  return complex_gamma(s) * U.mantissa * std::exp(log_pref + U.log_scale);
}

}  // namespace rsiegel
