#pragma once

// Special functions used by the risk formulas: ln Γ, Γ ratios in log space and
// the regularized lower incomplete gamma function
//
//     I(η, ω) = 1/Γ(ω) ∫₀^η e^{-u} u^{ω-1} du.
//
// All functions are pure and reentrant.

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <string>

#include "wshrink/error.hpp"

namespace wshrink {

struct RegIncGammaArgs {
  double eta;    // upper limit, >= 0
  double omega;  // shape, > 0
};

namespace detail {

inline void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError(std::string(what) + " must be positive and finite, got " + std::to_string(x));
}

}  // namespace detail

inline double ln_gamma(double x) {
  detail::require_positive(x, "ln_gamma argument");
  return boost::math::lgamma(x);
}

// Γ(a)/Γ(b) without forming either gamma value.
inline double gamma_ratio(double a, double b) {
  detail::require_positive(a, "gamma_ratio numerator argument");
  detail::require_positive(b, "gamma_ratio denominator argument");
  return std::exp(ln_gamma(a) - ln_gamma(b));
}

namespace detail {

inline constexpr int kIncGammaMaxIter = 100000;
inline constexpr double kIncGammaEps = 1e-16;

// ln(η^ω e^{-η} / Γ(ω))
inline double inc_gamma_log_prefactor(double eta, double omega) {
  return omega * std::log(eta) - eta - ln_gamma(omega);
}

// P(ω, η) by the power series Σ η^k / (ω (ω+1) ... (ω+k)); used for η < ω + 1.
inline double lower_inc_gamma_series(double eta, double omega) {
  double denom = omega;
  double term = 1.0 / omega;
  double sum = term;
  for (int n = 0; n < kIncGammaMaxIter; ++n) {
    denom += 1.0;
    term *= eta / denom;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kIncGammaEps)
      return sum * std::exp(inc_gamma_log_prefactor(eta, omega));
  }
  throw ConvergenceError("incomplete gamma series did not converge");
}

// Q(ω, η) by the Legendre continued fraction (modified Lentz); used for η >= ω + 1.
inline double upper_inc_gamma_cf(double eta, double omega) {
  constexpr double tiny = std::numeric_limits<double>::min() / kIncGammaEps;
  double b = eta + 1.0 - omega;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kIncGammaMaxIter; ++i) {
    const double an = -i * (i - omega);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kIncGammaEps)
      return std::exp(inc_gamma_log_prefactor(eta, omega)) * h;
  }
  throw ConvergenceError("incomplete gamma continued fraction did not converge");
}

}  // namespace detail

inline double reg_lower_inc_gamma(RegIncGammaArgs args) {
  const auto [eta, omega] = args;
  detail::require_positive(omega, "incomplete gamma shape");
  if (std::isnan(eta) || eta < 0.0)
    throw DomainError("incomplete gamma upper limit must be >= 0, got " + std::to_string(eta));
  if (eta == 0.0) return 0.0;
  if (std::isinf(eta)) return 1.0;
  if (eta < omega + 1.0) return std::fmin(1.0, detail::lower_inc_gamma_series(eta, omega));
  return std::fmax(0.0, 1.0 - detail::upper_inc_gamma_cf(eta, omega));
}

inline double reg_lower_inc_gamma(double eta, double omega) {
  return reg_lower_inc_gamma(RegIncGammaArgs{eta, omega});
}

}  // namespace wshrink
