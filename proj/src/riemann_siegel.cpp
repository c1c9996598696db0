#include "rsiegel/riemann_siegel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "rsiegel/contour.hpp"
#include "rsiegel/kernels.hpp"
#include "rsiegel/pcf.hpp"

namespace rsiegel {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::kClassical:
      return "classical";
    case Method::kPcf:
      return "pcf";
    case Method::kOracle:
      return "oracle";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "classical") return Method::kClassical;
  if (name == "pcf") return Method::kPcf;
  if (name == "oracle") return Method::kOracle;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

void check_zeta_domain(Complex s) {
  if (!is_finite(s) || std::abs(s) > 60.0 || std::abs(s.imag()) > 50.0) {
    throw DomainError("s outside |s| <= 60, |Im s| <= 50");
  }
}

namespace {

const double kSqrt2Pi = std::sqrt(2.0 * kPi);
constexpr double kPoleRadius = 0.05;

// Peak and location of a log-modulus along a line, by scanning.
DecayProfile scan_envelope(const std::function<double(double)>& log_mod,
                           double alpha) {
  double best = -INFINITY, where = 0.0;
  for (int k = -4000; k <= 4000; ++k) {
    const double t = 0.01 * k;
    const double g = log_mod(t);
    if (g > best) {
      best = g;
      where = t;
    }
  }
  return DecayProfile::gaussian(alpha, where, best);
}

// 1 / (e^{i pi u} - e^{-i pi u}) times e^{expo}, without overflow.
Complex over_two_i_sin(Complex expo, Complex u) {
  if (u.imag() >= 0.0) {
    return -std::exp(expo + kI * kPi * u) / (1.0 - std::exp(2.0 * kI * kPi * u));
  }
  return std::exp(expo - kI * kPi * u) / (1.0 - std::exp(-2.0 * kI * kPi * u));
}

// Truncation window of the U-kernel integrals. The integrand decays like
// e^{-pi t^2} where the U argument is positive and like
//   sqrt(2 pi) / |Gamma(s)| * (sqrt(2 pi)|t|)^{Re s - 1} * e^{-sqrt(2) pi |t|}
// where it is negative (the U growth e^{x^2/4} cancels the Gaussian kernel).
std::pair<double, double> pcf_window(Complex s, const QuadratureConfig& cfg) {
  const double target = std::log(cfg.abs_tol);
  // 1/Gamma(s) = Gamma(1-s) sin(pi s) / pi, bounded through |sin| <= cosh so
  // that the poles of Gamma (where this factor vanishes) are harmless.
  const double log_gamma_s =
      s.real() >= 0.5
          ? std::log(std::abs(complex_gamma(s)))
          : -(std::log(std::abs(complex_gamma(1.0 - s)) / kPi) +
              std::log(std::cosh(kPi * s.imag())));
  auto tail = [&](double t) {
    return 0.5 * std::log(2.0 * kPi) - log_gamma_s +
           (s.real() - 1.0) * std::log(kSqrt2Pi * t) - std::sqrt(2.0) * kPi * t;
  };
  double t_left = 1.0;
  while (tail(t_left) > target && t_left < 200.0) t_left += 0.25;
  const double budget = -target + std::max(0.0, 0.25 * kPi * std::abs(s.imag()));
  const double t_right = std::sqrt(budget / kPi);
  return {-cfg.truncation_sigma * t_left, cfg.truncation_sigma * t_right};
}

EvalReport finish(const QuadratureResult& q, Complex prefactor, Method m) {
  EvalReport r;
  r.value = prefactor * q.value;
  r.abs_error_estimate = std::abs(prefactor) * q.abs_error_estimate;
  r.method = m;
  r.nodes_used = q.nodes_used;
  r.converged = q.converged;
  return r;
}

EvalReport conjugate(EvalReport r) {
  r.value = std::conj(r.value);
  return r;
}

// conj(F(1 - conj s)) from its own slope -1 integral.
EvalReport lower_classical_direct(Complex s, const QuadratureConfig& cfg) {
  const Complex pref =
      std::exp(-0.5 * (1.0 - s) * std::log(kPi)) * complex_gamma(0.5 * (1.0 - s));
  auto f = [s](Complex u) {
    return over_two_i_sin(-kI * kPi * u * u + (s - 1.0) * std::log(u), u);
  };
  const auto path = SlantedPath::from_arrow(Arrow::kSE, 0.0, 1.0);
  auto log_mod = [&](double t) {
    const Complex u = parameterize(path, t);
    return (-kI * kPi * u * u + (s - 1.0) * std::log(u)).real() -
           kPi * std::abs(u.imag());
  };
  const auto q = integrate_slanted(f, path, scan_envelope(log_mod, kPi), cfg);
  return finish(q, pref, Method::kClassical);
}

// conj(F(1 - conj s)) from the slope +1 U-kernel integral.
EvalReport lower_pcf_direct(Complex s, const QuadratureConfig& cfg) {
  const Complex pref = std::exp(0.5 * (1.0 - s) * std::log(2.0)) *
                       complex_gamma(0.5 * (1.0 - s)) *
                       std::exp(0.25 * kI * kPi * s);
  QuadratureConfig inner = cfg;
  inner.parallel = false;
  const Complex rot = kSqrt2Pi * std::polar(1.0, -0.25 * kPi);
  const Complex order = 0.5 - s;
  auto f = [&](Complex u) {
    const auto U = pcf_u_scaled({order, rot * u}, inner);
    Complex expo = 0.5 * kI * kPi * u * u + U.log_scale;
    Complex den;
    if (u.imag() >= 0.0) {
      den = kI * (std::exp(2.0 * kI * kPi * u) + 1.0);
    } else {
      expo -= 2.0 * kI * kPi * u;
      den = kI * (1.0 + std::exp(-2.0 * kI * kPi * u));
    }
    return std::exp(expo) * U.mantissa / den;
  };
  const auto path = SlantedPath::from_arrow(Arrow::kSW, -0.5, 0.5);
  const auto [lo, hi] = pcf_window(1.0 - std::conj(s), cfg);
  const auto q =
      integrate_slanted(f, path, DecayProfile::explicit_window(lo, hi), cfg);
  return finish(q, pref, Method::kPcf);
}

// Points where Gamma(s/2) or Gamma((1-s)/2) has a pole but the completed
// function is analytic.
std::optional<Complex> removable_center(Complex s) {
  const double radius = 0.2;
  const Complex half = 0.5 * s, half_c = 0.5 * (1.0 - s);
  for (Complex h : {half, half_c}) {
    const double n = std::round(h.real());
    if (n <= 0.0 && std::abs(h - Complex(n, 0.0)) < 0.5 * radius) {
      const Complex center = (h == half) ? 2.0 * n : 1.0 - 2.0 * n;
      if (std::abs(center) > 1.5) return center;
    }
  }
  return std::nullopt;
}

EvalReport completed_direct(Complex s, const QuadratureConfig& cfg,
                            Method method) {
  if (method == Method::kOracle) {
    EvalReport r;
    r.value = std::exp(-0.5 * s * std::log(kPi)) * complex_gamma(0.5 * s) *
              eta_series_oracle(s);
    r.method = Method::kOracle;
    return r;
  }
  const auto up = f_upper(s, cfg, method);
  const auto low = f_lower(s, cfg, method);
  EvalReport r;
  r.value = up.value + low.value;
  r.abs_error_estimate = up.abs_error_estimate + low.abs_error_estimate;
  r.method = method;
  r.nodes_used = up.nodes_used + low.nodes_used;
  r.converged = up.converged && low.converged;
  return r;
}

}  // namespace

EvalReport f_upper_classical(Complex s, const QuadratureConfig& cfg) {
  check_zeta_domain(s);
  const Complex pref =
      std::exp(-0.5 * s * std::log(kPi)) * complex_gamma(0.5 * s);
  auto f = [s](Complex u) {
    return over_two_i_sin(kI * kPi * u * u - s * std::log(u), u);
  };
  const auto path = SlantedPath::from_arrow(Arrow::kSW, 0.0, 1.0);
  auto log_mod = [&](double t) {
    const Complex u = parameterize(path, t);
    return (kI * kPi * u * u - s * std::log(u)).real() -
           kPi * std::abs(u.imag());
  };
  const auto q = integrate_slanted(f, path, scan_envelope(log_mod, kPi), cfg);
  return finish(q, pref, Method::kClassical);
}

EvalReport f_upper_pcf(Complex s, const QuadratureConfig& cfg) {
  check_zeta_domain(s);
  const Complex pref = std::exp(0.5 * s * std::log(2.0)) *
                       complex_gamma(0.5 * s) *
                       std::exp(-0.25 * kI * kPi * (1.0 - s));
  QuadratureConfig inner = cfg;
  inner.parallel = false;
  const Complex rot = kSqrt2Pi * std::polar(1.0, 0.25 * kPi);
  const Complex order = s - 0.5;
  // e^{-i pi u^2/2 + i pi u} / (2i cos pi u) = e^{-i pi u^2/2} / (i (1 + e^{-2 pi i u}))
  auto f = [&](Complex u) {
    const auto U = pcf_u_scaled({order, rot * u}, inner);
    Complex expo = -0.5 * kI * kPi * u * u + U.log_scale;
    Complex den;
    if (u.imag() <= 0.0) {
      den = kI * (1.0 + std::exp(-2.0 * kI * kPi * u));
    } else {
      expo += 2.0 * kI * kPi * u;
      den = kI * (std::exp(2.0 * kI * kPi * u) + 1.0);
    }
    return std::exp(expo) * U.mantissa / den;
  };
  const auto path = SlantedPath::from_arrow(Arrow::kSE, -0.5, 0.5);
  const auto [lo, hi] = pcf_window(s, cfg);
  const auto q =
      integrate_slanted(f, path, DecayProfile::explicit_window(lo, hi), cfg);
  return finish(q, pref, Method::kPcf);
}

EvalReport f_upper(Complex s, const QuadratureConfig& cfg, Method method) {
  switch (method) {
    case Method::kClassical:
      return f_upper_classical(s, cfg);
    case Method::kPcf:
      return f_upper_pcf(s, cfg);
    case Method::kOracle:
      break;
  }
  throw DomainError("f_upper has no oracle method");
}

EvalReport f_lower(Complex s, const QuadratureConfig& cfg, Method method,
                   LowerRoute route) {
  check_zeta_domain(s);
  if (route == LowerRoute::kConjugation) {
    return conjugate(f_upper(1.0 - std::conj(s), cfg, method));
  }
  switch (method) {
    case Method::kClassical:
      return lower_classical_direct(s, cfg);
    case Method::kPcf:
      return lower_pcf_direct(s, cfg);
    case Method::kOracle:
      break;
  }
  throw DomainError("f_lower has no oracle method");
}

EvalReport completed_zeta(Complex s, const QuadratureConfig& cfg,
                          Method method) {
  check_zeta_domain(s);
  if (std::abs(s) < kPoleRadius || std::abs(s - 1.0) < kPoleRadius) {
    throw PoleError("completed zeta has poles at s = 0 and s = 1");
  }
  const auto center = removable_center(s);
  if (!center || method == Method::kOracle) {
    return completed_direct(s, cfg, method);
  }

  // Cauchy's formula on |w - center| = 1/2: the nearest singularity is at
  // distance >= 1.5 and |s - center| < 0.2, so the trapezoidal rule converges
  // like 0.4^N.
  constexpr int kPoints = 40;
  constexpr double kRadius = 0.5;
  std::vector<EvalReport> parts(kPoints);
  kernels::parallel_for(kPoints, cfg.parallel, [&](long k) {
    const Complex w = *center + std::polar(kRadius, 2.0 * kPi * k / kPoints);
    parts[k] = completed_direct(w, cfg, method);
  });
  EvalReport r;
  r.method = method;
  CompensatedSum acc;
  for (int k = 0; k < kPoints; ++k) {
    const Complex offset = std::polar(kRadius, 2.0 * kPi * k / kPoints);
    const Complex weight = offset / (*center + offset - s) / double(kPoints);
    acc.add(weight * parts[k].value);
    r.abs_error_estimate += std::abs(weight) * parts[k].abs_error_estimate;
    r.nodes_used += parts[k].nodes_used;
    r.converged = r.converged && parts[k].converged;
  }
  r.value = acc.value();
  return r;
}

EvalReport zeta(Complex s, const QuadratureConfig& cfg, Method method) {
  check_zeta_domain(s);
  if (std::abs(s - 1.0) < kPoleRadius) throw PoleError("zeta pole at s = 1");
  const Complex half = 0.5 * s;
  if (half.real() < 0.5 && std::round(half.real()) <= 0.0 &&
      std::abs(half - std::round(half.real())) < 0.5 * kPoleRadius) {
    throw PoleError("Gamma(s/2) pole: zeta is not extracted at s = 0, -2, -4, ...");
  }
  if (method == Method::kOracle) {
    EvalReport r;
    r.value = eta_series_oracle(s);
    r.method = Method::kOracle;
    return r;
  }
  const Complex gamma_factor =
      std::exp(-0.5 * s * std::log(kPi)) * complex_gamma(half);
  auto r = completed_zeta(s, cfg, method);
  r.value /= gamma_factor;
  r.abs_error_estimate /= std::abs(gamma_factor);
  return r;
}

Complex eta_series_oracle(Complex s, int terms) {
  if (!(s.real() > 0.0)) throw DomainError("eta oracle needs Re s > 0");
  const Complex denom = 1.0 - std::exp((1.0 - s) * std::log(2.0));
  if (std::abs(denom) < 1e-10) {
    throw DomainError("eta oracle: 1 - 2^{1-s} vanishes");
  }
  // Truncation error ~ |Gamma(sigma)/Gamma(s)| (3+sqrt 8)^{-n}.
  const double t = std::abs(s.imag());
  const double need = (std::log(1e17) + 0.5 * kPi * t + std::log1p(t) +
                       std::log(std::tgamma(std::max(s.real(), 0.1)))) /
                      std::log(3.0 + std::sqrt(8.0));
  const int n = std::max({terms, 32, static_cast<int>(std::ceil(need))});

  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  CompensatedSum sum;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    sum.add(c * std::exp(-s * std::log(static_cast<double>(k + 1))));
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return sum.value() / d / denom;
}

}  // namespace rsiegel
