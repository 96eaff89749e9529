#pragma once

// Exact, scale-free risk of the estimators in estimators.hpp under the
// pivotal model t ~ Gamma(shape h/2, rate β/2).
//
// Every quantity is expressed through the departure ratios
//   Δ = (β₁+β₂)/(2β),  Δ₁ = β₁/β,  Δ₂ = β₂/β
// so no function takes the true β. "rmse" throughout is the relative mean
// squared error MSE/β², and PRE is 100·MSE(β̂_M)/MSE(candidate).
//
// Each *_at overload takes the shrinkage weight w directly; the (h, p)
// overloads evaluate w = w(p) first and validate p.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "wshrink/error.hpp"
#include "wshrink/estimators.hpp"
#include "wshrink/model.hpp"
#include "wshrink/specfun.hpp"

namespace wshrink {

namespace detail {

inline void check_h(double h) {
  if (!(h > 4.0) || !std::isfinite(h))
    throw DomainError("degrees of freedom h must exceed 4, got " + std::to_string(h));
}

inline void check_q_delta(double q, double delta) {
  if (!positive_finite(q)) throw DomainError("q must be > 0");
  if (!positive_finite(delta)) throw DomainError("departure ratio must be > 0");
}

inline void check_weight(double w) {
  if (!(w > 0.0) || !(w <= 1.0)) throw DomainError("shrinkage weight must lie in (0, 1]");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Classical estimators

inline double bias_mmse(double h) {
  detail::check_h(h);
  return -2.0 / (h - 2.0);
}

/// ARB{β̂_M} = 2/(h-2).
inline double arb_mmse(double h) { return -bias_mmse(h); }

/// RMSE{β̂_M} = 2/(h-2); numerically equal to its ARB.
inline double rmse_mmse(double h) {
  detail::check_h(h);
  return 2.0 / (h - 2.0);
}

/// RMSE{β̂} = Var(β̂)/β² = 2/(h-4).
inline double rmse_unbiased(double h) {
  detail::check_h(h);
  return 2.0 / (h - 4.0);
}

// ---------------------------------------------------------------------------
// Shrinkage class β̂(p,q)

inline double bias_shrink_at(double w, double q, double delta) {
  detail::check_weight(w);
  detail::check_q_delta(q, delta);
  return (q * delta - 1.0) * (1.0 - w);
}

inline double arb_shrink_at(double w, double q, double delta) {
  return std::fabs(bias_shrink_at(w, q, delta));
}

inline double rmse_shrink_at(double h, double w, double q, double delta) {
  detail::check_h(h);
  const double b = bias_shrink_at(w, q, delta);
  return b * b + 2.0 * w * w / (h - 4.0);
}

inline double pre_shrink_at(double h, double w, double q, double delta) {
  detail::check_h(h);
  detail::check_weight(w);
  detail::check_q_delta(q, delta);
  const double shift = (q * delta - 1.0) * (1.0 - w);
  return 100.0 * 2.0 * (h - 4.0) / ((h - 2.0) * (shift * shift * (h - 4.0) + 2.0 * w * w));
}

/// Signed Bias{β̂(p,q)}/β = (qΔ-1)(1-w(p)).
inline double bias_shrink(double h, double p, double q, double delta) {
  return bias_shrink_at(shrink_weight(p, h), q, delta);
}

/// ARB{β̂(p,q)} = |qΔ-1|·(1-w(p)).
inline double arb_shrink(double h, double p, double q, double delta) {
  return arb_shrink_at(shrink_weight(p, h), q, delta);
}

/// RMSE{β̂(p,q)} = (qΔ-1)²(1-w)² + 2w²/(h-4).
inline double rmse_shrink(double h, double p, double q, double delta) {
  return rmse_shrink_at(h, shrink_weight(p, h), q, delta);
}

inline double pre_shrink(double h, double p, double q, double delta) {
  return pre_shrink_at(h, shrink_weight(p, h), q, delta);
}

// ---------------------------------------------------------------------------
// Dominance ranges

enum class RangeKind { Mse, Arb, Best };

inline std::string_view to_string(RangeKind k) {
  switch (k) {
    case RangeKind::Mse: return "MSE";
    case RangeKind::Arb: return "ARB";
    case RangeKind::Best: return "BEST";
  }
  return "UNKNOWN";
}

/// Open interval of Δ on which β̂(p,q) beats β̂_M. `empty` is set when no Δ
/// qualifies; lower/upper are then NaN.
struct DominanceRange {
  double lower;
  double upper;
  RangeKind kind;
  bool empty = false;

  bool contains(double delta) const { return !empty && delta > lower && delta < upper; }
  double midpoint() const { return 0.5 * (lower + upper); }

  static DominanceRange none(RangeKind kind) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan, kind, true};
  }
};

namespace detail {

inline constexpr double kDegenerateWeight = 1e-12;

inline void check_nondegenerate(double w) {
  if (1.0 - w <= kDegenerateWeight)
    throw DegenerateWeightError("w(p) = 1: the shrinkage estimator coincides with the unbiased "
                                "estimator and has no dominance range");
}

}  // namespace detail

/// G = 2/(1-w)² · [1/(h-2) - w²/(h-4)]; negative when no Δ gives a smaller MSE.
inline double mse_dominance_constant(double h, double w) {
  detail::check_h(h);
  detail::check_weight(w);
  detail::check_nondegenerate(w);
  const double one_minus_w = 1.0 - w;
  return 2.0 / (one_minus_w * one_minus_w) * (1.0 / (h - 2.0) - w * w / (h - 4.0));
}

/// Δ on which MSE{β̂(p,q)} < MSE{β̂_M}: ((1-√G)/q, (1+√G)/q).
inline DominanceRange mse_dominance_range_at(double h, double w, double q) {
  if (!detail::positive_finite(q)) throw DomainError("q must be > 0");
  const double G = mse_dominance_constant(h, w);
  if (!(G > 0.0)) return DominanceRange::none(RangeKind::Mse);
  const double r = std::sqrt(G);
  return {(1.0 - r) / q, (1.0 + r) / q, RangeKind::Mse};
}

/// Half-width factor 2/((h-2)(1-w)) of the ARB dominance range.
inline double arb_dominance_halfwidth(double h, double w) {
  detail::check_h(h);
  detail::check_weight(w);
  detail::check_nondegenerate(w);
  return 2.0 / ((h - 2.0) * (1.0 - w));
}

/// Δ on which ARB{β̂(p,q)} < ARB{β̂_M}.
inline DominanceRange arb_dominance_range_at(double h, double w, double q) {
  if (!detail::positive_finite(q)) throw DomainError("q must be > 0");
  const double a = arb_dominance_halfwidth(h, w);
  return {(1.0 - a) / q, (1.0 + a) / q, RangeKind::Arb};
}

/// Which of the four orderings of the MSE and ARB endpoints holds:
///   1: ARB lower < MSE lower, ARB upper < MSE upper  -> (MSE lower, ARB upper)
///   2: ARB contains MSE                              -> MSE range
///   3: MSE lower < ARB lower, MSE upper < ARB upper  -> (ARB lower, MSE upper)
///   4: MSE contains ARB                              -> ARB range
/// 0 when the MSE range is empty.
inline int dominance_case(const DominanceRange& mse, const DominanceRange& arb) {
  if (mse.empty || arb.empty) return 0;
  const bool arb_lower_first = arb.lower < mse.lower;
  const bool arb_upper_first = arb.upper < mse.upper;
  if (arb_lower_first && arb_upper_first) return 1;
  if (arb_lower_first && !arb_upper_first) return 2;
  if (!arb_lower_first && !arb_upper_first) return 3;
  return 4;
}

/// Δ_Best: the intersection of the MSE and ARB ranges. Every one of the four
/// endpoint orderings reduces to (max of lowers, min of uppers).
inline DominanceRange best_range(const DominanceRange& mse, const DominanceRange& arb) {
  if (mse.empty || arb.empty) return DominanceRange::none(RangeKind::Best);
  const double lo = std::max(mse.lower, arb.lower);
  const double hi = std::min(mse.upper, arb.upper);
  if (!(lo < hi)) return DominanceRange::none(RangeKind::Best);
  return {lo, hi, RangeKind::Best};
}

inline DominanceRange best_range_at(double h, double w, double q) {
  return best_range(mse_dominance_range_at(h, w, q), arb_dominance_range_at(h, w, q));
}

inline DominanceRange mse_dominance_range(double h, double p, double q) {
  return mse_dominance_range_at(h, shrink_weight(p, h), q);
}

inline DominanceRange arb_dominance_range(double h, double p, double q) {
  return arb_dominance_range_at(h, shrink_weight(p, h), q);
}

inline DominanceRange best_range(double h, double p, double q) {
  return best_range_at(h, shrink_weight(p, h), q);
}

// ---------------------------------------------------------------------------
// Admissible p

/// Admissible region for p at a given h:
///   p > lower_bound = -h/4  (both Γ(h/2+p) and Γ(h/2+2p) exist),
///   p != 0, and 0 < w(p) <= 1.
/// w(p) exceeds 1 on (weight_root, 0), so that interval is excluded too.
struct AdmissibleP {
  double h;
  double lower_bound;
  double weight_root;
  std::string description;

  bool accepts(double p) const {
    if (!(p > lower_bound) || p == 0.0 || !std::isfinite(p)) return false;
    const double w = detail::raw_shrink_weight(p, h);
    return w > 0.0 && w <= 1.0 + detail::kWeightSlack;
  }
};

namespace detail {

// Negative root of w(p) = 1 in (-h/4, 0): w -> 0 at the left end and
// w > 1 just below 0.
inline double weight_unity_root(double h) {
  const auto excess = [h](double p) { return std::log(raw_shrink_weight(p, h)); };
  double lo = -0.25 * h * (1.0 - 1e-9);
  double hi = -1e-9;
  if (excess(hi) <= 0.0) return 0.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, std::fabs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? hi : lo) = mid;
  }
  return lo;
}

}  // namespace detail

inline AdmissibleP admissible_p(double h) {
  detail::check_h(h);
  AdmissibleP a;
  a.h = h;
  a.lower_bound = -0.25 * h;
  a.weight_root = detail::weight_unity_root(h);
  a.description = "p > " + std::to_string(a.lower_bound) +
                  " (Gamma(h/2+2p) must exist; the weaker p > -h/2 = " + std::to_string(-0.5 * h) +
                  " is implied), p != 0, and 0 < w(p) <= 1, which excludes (" +
                  std::to_string(a.weight_root) + ", 0)";
  return a;
}

inline bool is_admissible_p(double p, double h) { return admissible_p(h).accepts(p); }

// ---------------------------------------------------------------------------
// Truncated class β̃(p,q)

struct TruncatedPoint {
  double delta;
  double eta1;  // (h/2-1)/Δ₁
  double eta2;  // (h/2-1)/Δ₂
};

namespace detail {

inline TruncatedPoint truncated_point(double h, double q, double d1, double d2) {
  check_h(h);
  if (!positive_finite(q)) throw DomainError("q must be > 0");
  if (!positive_finite(d1) || !positive_finite(d2)) throw DomainError("departure ratios must be > 0");
  if (d1 > d2) throw DomainError("truncated risk requires delta1 <= delta2");
  const double k = 0.5 * h - 1.0;
  return {0.5 * (d1 + d2), k / d1, k / d2};
}

}  // namespace detail

/// Signed Bias{β̃(p,q)}/β
///   = Δ₁{1 - I(η₁,h/2)} + w{I(η₁,h/2-1) - I(η₂,h/2-1)}
///     + qΔ(1-w){I(η₁,h/2) - I(η₂,h/2)} + Δ₂·I(η₂,h/2) - 1.
/// The last two terms are P(β̃ = β₂)·Δ₂ and the -β reference; an equivalent
/// arrangement that groups Δ₂ with the -1 is off by exactly Δ₂ - 1.
inline double bias_modified_at(double h, double w, double q, double d1, double d2) {
  detail::check_weight(w);
  const auto [delta, eta1, eta2] = detail::truncated_point(h, q, d1, d2);
  const double a = 0.5 * h;
  const double I1 = reg_lower_inc_gamma(eta1, a);
  const double I2 = reg_lower_inc_gamma(eta2, a);
  const double J1 = reg_lower_inc_gamma(eta1, a - 1.0);
  const double J2 = reg_lower_inc_gamma(eta2, a - 1.0);
  const double shift = q * delta * (1.0 - w);
  return d1 * (1.0 - I1) + w * (J1 - J2) + shift * (I1 - I2) + d2 * I2 - 1.0;
}

/// MSE{β̃(p,q)}/β², six-term closed form in I(η, h/2), I(η, h/2-1), I(η, h/2-2).
inline double mse_modified_at(double h, double w, double q, double d1, double d2) {
  detail::check_weight(w);
  const auto [delta, eta1, eta2] = detail::truncated_point(h, q, d1, d2);
  const double a = 0.5 * h;
  const double I1 = reg_lower_inc_gamma(eta1, a);
  const double I2 = reg_lower_inc_gamma(eta2, a);
  const double J1 = reg_lower_inc_gamma(eta1, a - 1.0);
  const double J2 = reg_lower_inc_gamma(eta2, a - 1.0);
  const double K1 = reg_lower_inc_gamma(eta1, a - 2.0);
  const double K2 = reg_lower_inc_gamma(eta2, a - 2.0);
  const double shift = q * delta * (1.0 - w);
  return (d1 - 1.0) * (d1 - 1.0)                      //
         - d1 * (d1 - 2.0) * I1                       //
         + d2 * (d2 - 2.0) * I2                       //
         + w * w * ((h - 2.0) / (h - 4.0)) * (K1 - K2)  //
         + shift * (I1 - I2) * (shift - 2.0)          //
         + 2.0 * w * (J1 - J2) * (shift - 1.0);
}

inline double pre_modified_at(double h, double w, double q, double d1, double d2) {
  return 100.0 * rmse_mmse(h) / mse_modified_at(h, w, q, d1, d2);
}

inline double bias_modified(double h, double p, double q, double d1, double d2) {
  return bias_modified_at(h, shrink_weight(p, h), q, d1, d2);
}

inline double mse_modified(double h, double p, double q, double d1, double d2) {
  return mse_modified_at(h, shrink_weight(p, h), q, d1, d2);
}

inline double pre_modified(double h, double p, double q, double d1, double d2) {
  return pre_modified_at(h, shrink_weight(p, h), q, d1, d2);
}

// ---------------------------------------------------------------------------
// RiskReport adapters

inline RiskReport risk_report_unbiased(double h) {
  const double rmse = rmse_unbiased(h);
  return {EstimatorId::Unbiased, 0.0, 0.0, rmse, 100.0 * rmse_mmse(h) / rmse};
}

inline RiskReport risk_report_mmse(double h) {
  return {EstimatorId::Mmse, bias_mmse(h), arb_mmse(h), rmse_mmse(h), 100.0};
}

inline RiskReport risk_report_shrink(double h, double p, double q, double delta) {
  const double w = shrink_weight(p, h);
  const double bias = bias_shrink_at(w, q, delta);
  return {EstimatorId::ShrinkPQ, bias, std::fabs(bias), rmse_shrink_at(h, w, q, delta),
          pre_shrink_at(h, w, q, delta)};
}

inline RiskReport risk_report_modified(double h, double p, double q, double d1, double d2) {
  const double w = shrink_weight(p, h);
  const double bias = bias_modified_at(h, w, q, d1, d2);
  const double mse = mse_modified_at(h, w, q, d1, d2);
  return {EstimatorId::ShrinkPQModified, bias, std::fabs(bias), mse, 100.0 * rmse_mmse(h) / mse};
}

/// Risk of β̃(p,q) for a concrete guess interval and true β.
inline RiskReport risk_report_modified(double h, const ShrinkageConfig& cfg,
                                       const GuessInterval& interval, double beta) {
  const auto d = departures(interval, beta);
  return risk_report_modified(h, cfg.p(), cfg.q(), d.delta1, d.delta2);
}

inline RiskReport risk_report_shrink(double h, const ShrinkageConfig& cfg,
                                     const GuessInterval& interval, double beta) {
  return risk_report_shrink(h, cfg.p(), cfg.q(), departures(interval, beta).delta);
}

}  // namespace wshrink
