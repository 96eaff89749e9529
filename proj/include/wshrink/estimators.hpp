#pragma once

// Point estimators of the Weibull shape β from a failure-censored sample.
//
//   β̂       = (h-2)/t                         unbiased
//   β̂_M     = (h-4)/t                         minimum MSE within {Cβ̂}
//   β̂(p,q)  = β̂·w(p) + q·(β₁+β₂)/2·(1-w(p))   shrinkage towards the interval
//   β̃(p,q)  = β̂(p,q) truncated to the guess interval
//
// with w(p) = ((h-2)/2)^p Γ(h/2+p) / Γ(h/2+2p).

#include <cmath>
#include <cstddef>
#include <string>

#include "wshrink/error.hpp"
#include "wshrink/model.hpp"
#include "wshrink/specfun.hpp"

namespace wshrink {

/// Unbiasing constant K(m,n) of the unbiased estimator of the extreme-value scale.
class BainConstants {
 public:
  BainConstants(std::size_t m, std::size_t n, double K) : m_(m), n_(n), K_(K) {
    if (m == 0 || m > n) throw ConfigurationError("Bain constants require 0 < m <= n");
    if (!(K > 0.0) || !std::isfinite(K)) throw DomainError("Bain constant K must be > 0");
  }

  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  double K() const noexcept { return K_; }

 private:
  std::size_t m_;
  std::size_t n_;
  double K_;
};

/// Unbiased estimator of b = 1/β:  b̂ᵤ = -Σ_{i<m} (y_i - y_m) / (n K).
inline double bain_bu(const CensoredSample& sample, const BainConstants& constants) {
  if (sample.m() < 2) throw InsufficientDataError("Bain estimator needs at least 2 failures");
  if (sample.m() != constants.m() || sample.n() != constants.n())
    throw ConfigurationError("Bain constants were computed for (m=" + std::to_string(constants.m()) +
                             ", n=" + std::to_string(constants.n()) + "), sample has (m=" +
                             std::to_string(sample.m()) + ", n=" + std::to_string(sample.n()) + ")");
  const auto y = sample.log_observations();
  const double ym = y.back();
  double spread = 0.0;
  for (std::size_t i = 0; i + 1 < y.size(); ++i) spread += ym - y[i];
  if (!(spread > 0.0)) throw DegenerateSampleError("all failure times are equal; b_u would be 0");
  return spread / (static_cast<double>(sample.n()) * constants.K());
}

inline double beta_unbiased(const PivotalContext& ctx) { return (ctx.h() - 2.0) / ctx.t(); }

inline double beta_mmse(const PivotalContext& ctx) { return (ctx.h() - 4.0) / ctx.t(); }

namespace detail {

// Relative slack when checking w(p) <= 1 against rounding.
inline constexpr double kWeightSlack = 1e-12;

inline void check_weight_arguments(double p, double h) {
  if (!(h > 4.0) || !std::isfinite(h))
    throw DomainError("degrees of freedom h must exceed 4, got " + std::to_string(h));
  if (p == 0.0 || !std::isfinite(p)) throw DomainError("inadmissible p: p must be nonzero");
  if (!(0.5 * h + p > 0.0))
    throw DomainError("inadmissible p=" + std::to_string(p) + ": requires p > -h/2 = " +
                      std::to_string(-0.5 * h));
  if (!(0.5 * h + 2.0 * p > 0.0))
    throw DomainError("inadmissible p=" + std::to_string(p) + ": requires p > -h/4 = " +
                      std::to_string(-0.25 * h) + " for Gamma(h/2+2p) to exist");
}

// w(p) with only the gamma-argument checks; may exceed 1 for small negative p.
inline double raw_shrink_weight(double p, double h) {
  check_weight_arguments(p, h);
  return std::exp(p * std::log(0.5 * (h - 2.0)) + ln_gamma(0.5 * h + p) - ln_gamma(0.5 * h + 2.0 * p));
}

}  // namespace detail

/// w(p) = ((h-2)/2)^p Γ(h/2+p)/Γ(h/2+2p), required to lie in (0, 1].
inline double shrink_weight(double p, double h) {
  const double w = detail::raw_shrink_weight(p, h);
  if (!(w > 0.0)) throw DomainError("inadmissible p=" + std::to_string(p) + ": w(p) underflows to 0");
  if (w > 1.0 + detail::kWeightSlack)
    throw DomainError("inadmissible p=" + std::to_string(p) + ": w(p)=" + std::to_string(w) +
                      " exceeds 1");
  return std::fmin(w, 1.0);
}

inline double beta_shrink(const PivotalContext& ctx, const GuessInterval& interval,
                          const ShrinkageConfig& cfg) {
  const double w = shrink_weight(cfg.p(), ctx.h());
  return beta_unbiased(ctx) * w + cfg.q() * interval.midpoint() * (1.0 - w);
}

/// Truncated shrinkage estimator: β₁ when t > (h-2)/β₁, β₂ when t < (h-2)/β₂,
/// otherwise β̂(p,q). Ties at either threshold take the shrinkage branch.
inline double beta_shrink_modified(const PivotalContext& ctx, const GuessInterval& interval,
                                   const ShrinkageConfig& cfg) {
  const double inner = beta_shrink(ctx, interval, cfg);
  const double upper_t = (ctx.h() - 2.0) / interval.beta1();
  const double lower_t = (ctx.h() - 2.0) / interval.beta2();
  if (ctx.t() > upper_t) return interval.beta1();
  if (ctx.t() < lower_t) return interval.beta2();
  return inner;
}

/// Unbiased estimator of the average departure Δ = (β₁+β₂)/(2β):
/// Δ̂ = t(β₁+β₂)/4 · Γ(h/2)/Γ(h/2+1) = t(β₁+β₂)/(2h).
inline double delta_hat(const PivotalContext& ctx, const GuessInterval& interval) {
  const double a = 0.5 * ctx.h();
  return 0.25 * ctx.t() * (interval.beta1() + interval.beta2()) * gamma_ratio(a, a + 1.0);
}

/// Data-driven q = 1/Δ̂. Feed the result back as a fixed ShrinkageConfig::q.
inline double q_select(const PivotalContext& ctx, const GuessInterval& interval) {
  return 1.0 / delta_hat(ctx, interval);
}

}  // namespace wshrink
