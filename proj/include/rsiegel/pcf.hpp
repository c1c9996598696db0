#pragma once

// Parabolic cylinder function U(a, z) from its real integral
// representation
//
//   U(a,z) = e^{-z^2/4} / Gamma(1/2+a) * int_0^inf e^{-w^2/2 - z w} w^{a-1/2} dw
//
// valid for Re a > -1/2, continued to Re a > -9/2 with the recurrence
// z U(a,z) - U(a-1,z) + (a+1/2) U(a+1,z) = 0.

#include "rsiegel/numeric_core.hpp"

namespace rsiegel {

class OrderOutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

struct PcfArgs {
  Complex a;
  Complex z;
};

/// A value stored as mantissa * exp(log_scale); U overflows binary64 long
/// before the integrands that consume it do.
struct ScaledComplex {
  Complex mantissa{};
  double log_scale = 0.0;

  Complex value() const;
  /// log of the modulus; -inf for an exact zero.
  double log_abs() const;
};

inline constexpr int kMaxRecurrenceSteps = 4;

/// U(a, z). Direct integral for Re a > -1/2, recurrence continuation for
/// -9/2 < Re a <= -1/2. Throws OrderOutOfRange below that and NoConvergence
/// when the w-integral misses its tolerance.
Complex pcf_u(const PcfArgs& args, const QuadratureConfig& cfg = {});

/// Same as pcf_u, returned in scaled form.
ScaledComplex pcf_u_scaled(const PcfArgs& args, const QuadratureConfig& cfg = {});

/// U(a, z) forced through `steps` downward recurrence steps from the
/// directly evaluated orders a+steps and a+steps+1.
Complex pcf_u_recurrence(const PcfArgs& args, int steps,
                         const QuadratureConfig& cfg = {});

/// |z U(a,z) - U(a-1,z) + (a+1/2) U(a+1,z)| / |U(a-1,z)|; needs Re a > 1/2.
double pcf_recurrence_residual(Complex a, Complex z,
                               const QuadratureConfig& cfg = {});

/// Left side of the ray identity,
///   int_0^{e^{3 pi i/4} inf} e^{-i pi z^2 + 2 pi i (u-1/2) z} z^{s-1} dz,
/// by direct quadrature along the ray. Needs Re s > 0.
QuadratureResult pcf_ray_integral(Complex s, Complex u,
                                  const QuadratureConfig& cfg = {});

/// Right side of the same identity,
///   (2 pi)^{-s/2} Gamma(s) e^{3 i pi s/4 + i pi (u-1/2)^2/2}
///     U(s-1/2, sqrt(2 pi) e^{i pi/4} (u-1/2)).
Complex pcf_ray_closed_form(Complex s, Complex u,
                            const QuadratureConfig& cfg = {});

}  // namespace rsiegel
