#pragma once

// Straight-line contours of slope +1 / -1 and rays from the origin, each
// reduced to a real-parameter integral over a truncated window.

#include <functional>
#include <optional>
#include <utility>

#include "rsiegel/numeric_core.hpp"

namespace rsiegel {

class SingularAtOrigin : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class Slope { kPlusOne, kMinusOne };
enum class Direction { kAscending, kDescending };

/// Arrow notation for lines crossing the real axis between two anchors:
/// NE (lower-left to upper-right), SW its reversal, SE (upper-left to
/// lower-right), NW its reversal.
enum class Arrow { kNE, kSW, kSE, kNW };

/// A slope +-1 line u(t) = crossing + t e^{+-i pi/4}, t in (-inf, inf).
///
/// Ascending traversal runs t from -inf to +inf; descending reverses it.
struct SlantedPath {
  double crossing = 0.5;
  Slope slope = Slope::kPlusOne;
  Direction direction = Direction::kAscending;
  double anchor_lo = 0.0;
  double anchor_hi = 1.0;

  /// Path for `arrow` between the anchors; crossing defaults to the midpoint.
  static SlantedPath from_arrow(Arrow arrow, double anchor_lo, double anchor_hi,
                                std::optional<double> crossing = {});

  Complex unit() const;  // e^{+-i pi/4}
  void validate() const;
};

/// Envelope of an integrand along a parameter line.
///
/// |f(t)| <= exp(log_peak - alpha (t-center)^2) for a Gaussian envelope, or
/// exp(log_peak - linear_rate |t-center|) for an exponential one. When both
/// rates are given the shorter truncation wins. `window` overrides the
/// derived truncation entirely.
struct DecayProfile {
  double alpha = 0.0;
  double linear_rate = 0.0;
  double center = 0.0;
  double log_peak = 0.0;
  std::optional<std::pair<double, double>> window;

  static DecayProfile gaussian(double alpha, double center = 0.0,
                               double log_peak = 0.0);
  static DecayProfile exponential(double rate, double center = 0.0,
                                  double log_peak = 0.0);
  static DecayProfile explicit_window(double lo, double hi);
};

/// [lo, hi] parameter window outside which the envelope is below abs_tol.
std::pair<double, double> truncation_window(const DecayProfile& decay,
                                            const QuadratureConfig& cfg);

using ComplexIntegrand = std::function<Complex(Complex)>;

Complex parameterize(const SlantedPath& path, double t);

/// Integral of f along the path in its direction of traversal.
QuadratureResult integrate_slanted(const ComplexIntegrand& f,
                                   const SlantedPath& path,
                                   const DecayProfile& decay,
                                   const QuadratureConfig& cfg);

/// Integral of f from 0 to infinity along the ray arg z = angle.
///
/// The origin side is integrated in the variable log r, so integrable power
/// singularities |f| ~ r^p with p > -0.99 are handled; stronger growth
/// throws SingularAtOrigin. The far end is truncated using `decay`, whose
/// parameter is the radius r.
QuadratureResult integrate_ray(const ComplexIntegrand& f, double angle,
                               const QuadratureConfig& cfg,
                               const DecayProfile& decay);

}  // namespace rsiegel
