#include "rsiegel/contour.hpp"

#include <algorithm>
#include <cmath>

namespace rsiegel {

SlantedPath SlantedPath::from_arrow(Arrow arrow, double anchor_lo,
                                    double anchor_hi,
                                    std::optional<double> crossing) {
  SlantedPath p;
  p.anchor_lo = anchor_lo;
  p.anchor_hi = anchor_hi;
  p.crossing = crossing.value_or(0.5 * (anchor_lo + anchor_hi));
  switch (arrow) {
    case Arrow::kNE:
      p.slope = Slope::kPlusOne;
      p.direction = Direction::kAscending;
      break;
    case Arrow::kSW:
      p.slope = Slope::kPlusOne;
      p.direction = Direction::kDescending;
      break;
    case Arrow::kSE:
      p.slope = Slope::kMinusOne;
      p.direction = Direction::kAscending;
      break;
    case Arrow::kNW:
      p.slope = Slope::kMinusOne;
      p.direction = Direction::kDescending;
      break;
  }
  p.validate();
  return p;
}

Complex SlantedPath::unit() const {
  const double h = std::sqrt(0.5);
  return slope == Slope::kPlusOne ? Complex(h, h) : Complex(h, -h);
}

void SlantedPath::validate() const {
  if (!(anchor_lo < crossing && crossing < anchor_hi)) {
    throw DomainError("slanted path must cross strictly between its anchors");
  }
}

DecayProfile DecayProfile::gaussian(double alpha, double center,
                                    double log_peak) {
  DecayProfile d;
  d.alpha = alpha;
  d.center = center;
  d.log_peak = log_peak;
  return d;
}

DecayProfile DecayProfile::exponential(double rate, double center,
                                       double log_peak) {
  DecayProfile d;
  d.linear_rate = rate;
  d.center = center;
  d.log_peak = log_peak;
  return d;
}

DecayProfile DecayProfile::explicit_window(double lo, double hi) {
  DecayProfile d;
  d.window = std::pair{lo, hi};
  return d;
}

std::pair<double, double> truncation_window(const DecayProfile& decay,
                                            const QuadratureConfig& cfg) {
  if (decay.window) {
    if (!(decay.window->first < decay.window->second)) {
      throw DomainError("empty truncation window");
    }
    return *decay.window;
  }
  if (!(decay.alpha > 0.0) && !(decay.linear_rate > 0.0)) {
    throw DomainError("decay profile needs a positive rate");
  }
  const double budget =
      std::log(1.0 / cfg.abs_tol) + std::max(0.0, decay.log_peak);
  double half = std::numeric_limits<double>::infinity();
  if (decay.alpha > 0.0) half = std::min(half, std::sqrt(budget / decay.alpha));
  if (decay.linear_rate > 0.0) half = std::min(half, budget / decay.linear_rate);
  half *= cfg.truncation_sigma;
  return {decay.center - half, decay.center + half};
}

Complex parameterize(const SlantedPath& path, double t) {
  return path.crossing + t * path.unit();
}

QuadratureResult integrate_slanted(const ComplexIntegrand& f,
                                   const SlantedPath& path,
                                   const DecayProfile& decay,
                                   const QuadratureConfig& cfg) {
  path.validate();
  const auto [lo, hi] = truncation_window(decay, cfg);
  const Complex dir = path.unit();
  const double c = path.crossing;
  auto res = adaptive_integrate([&](double t) { return f(c + t * dir); }, lo,
                                hi, cfg);
  res.value *= path.direction == Direction::kAscending ? dir : -dir;
  return res;
}

QuadratureResult integrate_ray(const ComplexIntegrand& f, double angle,
                               const QuadratureConfig& cfg,
                               const DecayProfile& decay) {
  cfg.validate();
  const Complex dir = std::polar(1.0, angle);
  const double r_far = std::max(truncation_window(decay, cfg).second, 1e-3);
  const double r_split = std::min(1.0, 0.5 * r_far);

  // Power-law exponent of |f| near the origin from two samples.
  const double e1 = r_split * 1e-3;
  const double e2 = r_split * 1e-6;
  const double m1 = std::abs(f(e1 * dir));
  const double m2 = std::abs(f(e2 * dir));
  double log_lo = std::log(e1);
  if (m1 > 0.0 && m2 > 0.0) {
    const double p = std::log(m1 / m2) / std::log(e1 / e2);
    if (!(p > -0.99)) {
      throw SingularAtOrigin("ray integrand grows like r^" + std::to_string(p) +
                             " at the origin");
    }
    // |r f(r)| ~ e1 m1 (r/e1)^(p+1); push the lower end until that is tiny.
    const double target = std::log(cfg.abs_tol * 1e-2);
    const double start = std::log(e1 * m1);
    if (start > target) log_lo = std::log(e1) - (start - target) / (p + 1.0);
  } else if (m1 > 0.0 || m2 > 0.0) {
    throw SingularAtOrigin("ray integrand vanishes irregularly at the origin");
  }
  log_lo = std::max(log_lo, -700.0);

  auto near = adaptive_integrate(
      [&](double y) {
        const double r = std::exp(y);
        return f(r * dir) * r;
      },
      log_lo, std::log(r_split), cfg);
  auto far = adaptive_integrate([&](double r) { return f(r * dir); }, r_split,
                                r_far, cfg);
  near += far;
  near.value *= dir;
  return near;
}

}  // namespace rsiegel
