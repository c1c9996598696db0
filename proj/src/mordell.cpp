#include "rsiegel/mordell.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rsiegel {

void MordellArgs::validate() const {
  if (!(tau.real() > 0.0)) throw DomainError("Mordell integral needs Re tau > 0");
  if (!is_finite(x) || !is_finite(tau)) throw DomainError("non-finite argument");
}

void RationalTau::validate() const {
  if (m < 1 || n < 1) throw DomainError("rational tau needs m, n >= 1");
  if (m > kMaxTerms || n > kMaxTerms) {
    throw DomainError("rational tau: m, n capped at 64");
  }
}

namespace {

const double kSqrt2Pi = std::sqrt(2.0) * kPi;

Complex line_unit(Slope slope) {
  const double h = std::sqrt(0.5);
  return slope == Slope::kPlusOne ? Complex(h, h) : Complex(h, -h);
}

struct Envelope {
  double alpha;  // -q2
  double center;
  double log_peak;
};

// g(t) = q2 t^2 + q1 t + q0 + sqrt(2) pi min(0, t), q2 < 0.
Envelope envelope(Complex quad, Complex lin, Slope slope, double c) {
  const Complex d = line_unit(slope);
  const double q2 = (quad * d * d).real();
  const double q1 = ((2.0 * quad * c + lin) * d).real();
  const double q0 = (quad * c * c + lin * c).real();
  auto g = [&](double t) {
    return q2 * t * t + q1 * t + q0 + kSqrt2Pi * std::min(0.0, t);
  };
  const double t_right = std::max(0.0, -q1 / (2.0 * q2));
  const double t_left = std::min(0.0, -(q1 + kSqrt2Pi) / (2.0 * q2));
  const double t_peak = g(t_right) >= g(t_left) ? t_right : t_left;
  return {-q2, t_peak, g(t_peak)};
}

Complex direct_integrand(Complex u, Complex tau, Complex x) {
  const Complex e = kI * kPi * tau * u * u + 2.0 * kPi * kI * x * u;
  const Complex q = std::exp(2.0 * kPi * kI * u);
  if (u.imag() >= 0.0) return std::exp(e) / (q - 1.0);
  // |e^{2 pi i u}| > 1 here.
  return std::exp(e - 2.0 * kPi * kI * u) / (1.0 - 1.0 / q);
}

Complex transformed_integrand(Complex u, Complex tau, Complex x) {
  const Complex e = (-kI * kPi * u * u + 2.0 * kPi * kI * x * u) / tau;
  const Complex q = std::exp(-2.0 * kPi * kI * u);
  if (u.imag() <= 0.0) return std::exp(e) / (q - 1.0);
  return std::exp(e + 2.0 * kPi * kI * u) / (1.0 - 1.0 / q);
}

Complex gauss_prefactor(const MordellArgs& args) {
  return std::exp(kI * kPi * (0.25 - args.x * args.x / args.tau)) /
         std::sqrt(args.tau);
}

}  // namespace

DecayProfile mordell_envelope(Complex quad, Complex lin, Slope slope,
                              double crossing) {
  const auto env = envelope(quad, lin, slope, crossing);
  if (!(env.alpha > 0.0)) throw DomainError("integrand does not decay on line");
  return DecayProfile::gaussian(env.alpha, env.center, env.log_peak);
}

double choose_crossing(Complex quad, Complex lin, Slope slope) {
  double best_c = 0.5;
  double best_cost = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double c = k / 200.0;
    const double cost =
        envelope(quad, lin, slope, c).log_peak - std::log(std::min(c, 1.0 - c));
    if (cost < best_cost - 1e-12) {
      best_cost = cost;
      best_c = c;
    }
  }
  return best_c;
}

QuadratureResult phi_quadrature(const MordellArgs& args,
                                const QuadratureConfig& cfg,
                                std::optional<double> crossing) {
  args.validate();
  const Complex quad = kI * kPi * args.tau;
  const Complex lin = 2.0 * kPi * kI * args.x;
  const double c = crossing.value_or(choose_crossing(quad, lin, Slope::kPlusOne));
  const auto path = SlantedPath::from_arrow(Arrow::kNE, 0.0, 1.0, c);
  const Complex tau = args.tau, x = args.x;
  return integrate_slanted(
      [tau, x](Complex u) { return direct_integrand(u, tau, x); }, path,
      mordell_envelope(quad, lin, Slope::kPlusOne, c), cfg);
}

Complex phi_rational(Complex x, const RationalTau& rt) {
  rt.validate();
  const double m = rt.m, n = rt.n;
  const Complex den = std::exp(kI * kPi * n * (2.0 * x + m)) - 1.0;
  if (std::abs(den) < 1e-8) {
    throw DegenerateRationalPoint(
        "phi_rational: denominator vanishes; use phi_quadrature");
  }
  CompensatedSum first;
  for (int k = 1; k <= rt.n; ++k) {
    first.add(std::exp(kI * kPi * (m / n) * double(k) * double(k) +
                       2.0 * k * kPi * kI * x));
  }
  CompensatedSum second;
  for (int k = 1; k <= rt.m; ++k) {
    second.add(std::exp(-kI * kPi * (n / m) * double(k) * double(k) +
                        2.0 * k * kPi * kI * (n / m) * x));
  }
  const Complex gauss =
      std::sqrt(n / m) * std::exp(kI * kPi * (0.25 - (n / m) * x * x));
  return (first.value() - gauss * second.value()) / den;
}

QuadratureResult transform_rhs(const MordellArgs& args,
                               const QuadratureConfig& cfg,
                               std::optional<double> crossing) {
  args.validate();
  const Complex quad = -kI * kPi / args.tau;
  const Complex lin = 2.0 * kPi * kI * args.x / args.tau;
  const double c =
      crossing.value_or(choose_crossing(quad, lin, Slope::kMinusOne));
  const auto path = SlantedPath::from_arrow(Arrow::kNW, 0.0, 1.0, c);
  const Complex tau = args.tau, x = args.x;
  auto res = integrate_slanted(
      [tau, x](Complex u) { return transformed_integrand(u, tau, x); }, path,
      mordell_envelope(quad, lin, Slope::kMinusOne, c), cfg);
  const Complex pref = gauss_prefactor(args);
  res.value *= pref;
  res.abs_error_estimate *= std::abs(pref);
  return res;
}

Complex functional_equation_rhs(const MordellArgs& args,
                                const QuadratureConfig& cfg) {
  args.validate();
  const Complex tb = std::conj(args.tau);
  const MordellArgs dual{-std::conj(args.x) / tb, 1.0 / tb};
  const auto inner = phi_quadrature(dual, cfg);
  return -gauss_prefactor(args) * std::conj(inner.value);
}

double functional_equation_residual(const MordellArgs& args,
                                    const QuadratureConfig& cfg) {
  const Complex lhs = phi_quadrature(args, cfg).value;
  const Complex rhs = functional_equation_rhs(args, cfg);
  return std::abs(lhs - rhs) / (std::abs(lhs) + 1e-300);
}

double transformation_residual(const MordellArgs& args,
                               const QuadratureConfig& cfg) {
  const Complex lhs = phi_quadrature(args, cfg).value;
  const Complex rhs = transform_rhs(args, cfg).value;
  return std::abs(lhs - rhs) / (std::abs(lhs) + 1e-300);
}

}  // namespace rsiegel
