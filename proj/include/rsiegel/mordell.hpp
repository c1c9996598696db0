#pragma once

// The special Mordell integral
//
//   Phi(x, tau) = int_{0 NE 1} e^{i pi tau u^2 + 2 pi i x u} / (e^{2 pi i u} - 1) du,
//
// its exponential-sum closed form at rational tau = m/n, and the
// transformation tau -> 1/tau.

#include <optional>

#include "rsiegel/contour.hpp"
#include "rsiegel/numeric_core.hpp"

namespace rsiegel {

class DegenerateRationalPoint : public DomainError {
 public:
  using DomainError::DomainError;
};

struct MordellArgs {
  Complex x;
  Complex tau;  // Re tau > 0

  void validate() const;
};

struct RationalTau {
  int m = 1;
  int n = 1;

  static constexpr int kMaxTerms = 64;
  void validate() const;
  double value() const { return static_cast<double>(m) / n; }
};

/// Crossing point in (0, 1) that keeps the integrand's peak modulus small
/// and its poles at 0 and 1 at a distance. `quad` and `lin` are the
/// coefficients of the quadratic exponent A u^2 + B u; `slope` is the line
/// the integral runs along. On both Mordell lines the denominator only adds
/// decay on the t < 0 half.
double choose_crossing(Complex quad, Complex lin, Slope slope);

/// Envelope of |e^{A u^2 + B u} / denominator| along the line through
/// `crossing`: Gaussian rate, peak location and log peak.
DecayProfile mordell_envelope(Complex quad, Complex lin, Slope slope,
                              double crossing);

/// Phi(x, tau) by quadrature on the slope +1 line crossing (0, 1).
/// `crossing` defaults to choose_crossing().
QuadratureResult phi_quadrature(const MordellArgs& args,
                                const QuadratureConfig& cfg = {},
                                std::optional<double> crossing = {});

/// Closed form at tau = m/n. Throws DegenerateRationalPoint when
/// |e^{i pi n (2x+m)} - 1| < 1e-8.
Complex phi_rational(Complex x, const RationalTau& rt);

/// Right side of the transformation formula,
///   e^{i pi (1/4 - x^2/tau)} / sqrt(tau)
///     * int_{0 NW 1} e^{-i pi u^2/tau + 2 pi i x u/tau} / (e^{-2 pi i u} - 1) du,
/// on the slope -1 line. The integral decays at rate pi Re(1/tau), which is
/// fast exactly when the direct integral is slow.
QuadratureResult transform_rhs(const MordellArgs& args,
                               const QuadratureConfig& cfg = {},
                               std::optional<double> crossing = {});

/// -e^{i pi (1/4 - x^2/tau)} / sqrt(tau) * conj(Phi(-conj(x)/conj(tau), 1/conj(tau))).
Complex functional_equation_rhs(const MordellArgs& args,
                                const QuadratureConfig& cfg = {});

/// |Phi(x,tau) - functional_equation_rhs| / |Phi(x,tau)|, both sides by
/// independent quadratures.
double functional_equation_residual(const MordellArgs& args,
                                    const QuadratureConfig& cfg = {});

/// |Phi(x,tau) - transform_rhs| / |Phi(x,tau)|.
double transformation_residual(const MordellArgs& args,
                               const QuadratureConfig& cfg = {});

}  // namespace rsiegel
