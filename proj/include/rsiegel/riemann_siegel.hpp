#pragma once

// Completed zeta function pi^{-s/2} Gamma(s/2) zeta(s) = F(s) + conj(F(1 - conj s))
// with F evaluated either from the classical slanted-line integral
//
//   F(s) = pi^{-s/2} Gamma(s/2) int_{0 SW 1} e^{i pi u^2} u^{-s} / (e^{i pi u} - e^{-i pi u}) du
//
// or from the parabolic-cylinder kernel form
//
//   F(s) = 2^{s/2} Gamma(s/2) e^{-i pi (1-s)/4}
//          int_{-1/2 SE 1/2} e^{-i pi u^2/2 + i pi u} / (2i cos pi u) U(s-1/2, sqrt(2 pi) e^{i pi/4} u) du.

#include <string>
#include <string_view>

#include "rsiegel/numeric_core.hpp"

namespace rsiegel {

enum class Method { kClassical, kPcf, kOracle };

std::string_view to_string(Method m);
/// Parses "classical" | "pcf" | "oracle"; throws DomainError otherwise.
Method parse_method(std::string_view name);

/// Which integral f_lower evaluates: conj(F(1 - conj s)) from F itself, or
/// the directly written slope -1 / slope +1 form.
enum class LowerRoute { kConjugation, kDirect };

struct EvalReport {
  Complex value{};
  double abs_error_estimate = 0.0;
  Method method = Method::kClassical;
  long nodes_used = 0;
  bool converged = true;

  bool operator==(const EvalReport&) const = default;
};

/// Throws DomainError unless |s| <= 60 and |Im s| <= 50.
void check_zeta_domain(Complex s);

EvalReport f_upper_classical(Complex s, const QuadratureConfig& cfg = {});
EvalReport f_upper_pcf(Complex s, const QuadratureConfig& cfg = {});
EvalReport f_upper(Complex s, const QuadratureConfig& cfg, Method method);

/// conj(F(1 - conj s)).
EvalReport f_lower(Complex s, const QuadratureConfig& cfg, Method method,
                   LowerRoute route = LowerRoute::kConjugation);

/// pi^{-s/2} Gamma(s/2) zeta(s). Throws PoleError within 0.05 of s = 0, 1.
/// Near the removable points where one of the two Gamma factors has a pole
/// (s = 3, 5, ... and s = -2, -4, ...) the value is taken from Cauchy's
/// formula on a circle around that point.
EvalReport completed_zeta(Complex s, const QuadratureConfig& cfg = {},
                          Method method = Method::kClassical);

/// zeta(s) = completed_zeta(s) / (pi^{-s/2} Gamma(s/2)). Throws PoleError
/// within 0.05 of s = 1 and of the points 0, -2, -4, ...
EvalReport zeta(Complex s, const QuadratureConfig& cfg = {},
                Method method = Method::kClassical);

/// Independent reference: zeta(s) = eta(s) / (1 - 2^{1-s}) with the
/// alternating eta series summed by Cohen-Villegas-Zagier acceleration.
/// Uses at least `terms` terms and more when |Im s| demands it.
Complex eta_series_oracle(Complex s, int terms = 64);

}  // namespace rsiegel
