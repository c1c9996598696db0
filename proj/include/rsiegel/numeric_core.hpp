#pragma once

// Complex scalar, gamma function and panel quadrature shared by every
// other module.

#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsiegel {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument sits on (or within 1e-12 of) a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain an operation is defined or accurate on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A quadrature ran out of refinements before meeting its tolerance.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Quadrature configuration / result
// ---------------------------------------------------------------------------

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int panel_order = 32;
  int max_refinements = 12;
  // Multiplies the analytically derived truncation length of infinite paths.
  double truncation_sigma = 1.5;
  // Allow the panel kernel to fan out over OpenMP threads.
  bool parallel = true;

  /// Throws DomainError when a field violates its range.
  void validate() const;
  double tolerance_for(double magnitude) const;
};

struct QuadratureResult {
  Complex value{};
  double abs_error_estimate = 0.0;
  long nodes_used = 0;
  int refinements = 0;
  bool converged = false;

  QuadratureResult& operator+=(const QuadratureResult& other);
};

// ---------------------------------------------------------------------------
// Complex helpers
// ---------------------------------------------------------------------------

bool is_finite(Complex z);

/// Relative distance |a-b| / (|b| + tiny); the usual residual metric.
double rel_diff(Complex a, Complex b);

/// Neumaier-compensated complex accumulator.
class CompensatedSum {
 public:
  void add(Complex term);
  Complex value() const { return {re_sum_ + re_c_, im_sum_ + im_c_}; }

 private:
  static void add_part(double& sum, double& c, double x);
  double re_sum_ = 0.0, re_c_ = 0.0;
  double im_sum_ = 0.0, im_c_ = 0.0;
};

/// Gamma function on the complex plane.
///
/// Lanczos approximation (g = 7, nine coefficients) on Re z >= 1/2 and the
/// reflection formula Gamma(z) Gamma(1-z) = pi / sin(pi z) elsewhere. Relative
/// accuracy is ~1e-13 for |z| <= 60. Throws PoleError within 1e-12 of a
/// non-positive integer.
Complex complex_gamma(Complex z);

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

using RealIntegrand = std::function<Complex(double)>;

/// Composite Gauss-Legendre over [t_lo, t_hi] with global panel halving.
///
/// Starts from `initial_panels` equal panels, halves all of them each
/// refinement, and stops once two consecutive refinements differ by no more
/// than max(abs_tol, rel_tol*|value|). abs_error_estimate is that last
/// difference. The result is returned with converged = false when the
/// refinement budget runs out.
QuadratureResult adaptive_integrate(const RealIntegrand& f, double t_lo,
                                    double t_hi, const QuadratureConfig& cfg,
                                    int initial_panels = 1);

/// Sum of independent adaptive integrals over consecutive segments.
///
/// Each segment carries its own halving level; the segment with the largest
/// inter-refinement difference is refined next until the summed estimate
/// meets the tolerance on the total. Used where the integrand has features
/// on very different scales in different places.
QuadratureResult integrate_segments(const RealIntegrand& f,
                                    const std::vector<double>& breakpoints,
                                    const QuadratureConfig& cfg);

}  // namespace rsiegel
