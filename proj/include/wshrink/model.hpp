#pragma once

// Value types shared by every module. All constructors validate their
// invariants and throw DomainError / ConfigurationError on violation.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wshrink/error.hpp"

namespace wshrink {

namespace detail {

inline bool positive_finite(double x) { return x > 0.0 && std::isfinite(x); }

}  // namespace detail

/// Two-parameter Weibull life distribution, f(x) = β α^{-β} x^{β-1} exp{-(x/α)^β}.
class WeibullParams {
 public:
  WeibullParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    if (!detail::positive_finite(alpha)) throw DomainError("Weibull scale alpha must be > 0");
    if (!detail::positive_finite(beta)) throw DomainError("Weibull shape beta must be > 0");
  }

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  /// Scale b = 1/β of the extreme-value law of ln X.
  double log_scale() const noexcept { return 1.0 / beta_; }
  /// Location u = ln α of the extreme-value law of ln X.
  double log_location() const noexcept { return std::log(alpha_); }

  friend bool operator==(const WeibullParams&, const WeibullParams&) = default;

 private:
  double alpha_;
  double beta_;
};

/// The m smallest of n failure times (Type-II / failure censoring).
class CensoredSample {
 public:
  CensoredSample(std::size_t n, std::vector<double> observations)
      : n_(n), obs_(std::move(observations)) {
    if (obs_.empty()) throw ConfigurationError("censored sample needs at least one failure time");
    if (obs_.size() > n_)
      throw ConfigurationError("censored sample has m=" + std::to_string(obs_.size()) +
                               " failures but only n=" + std::to_string(n_) + " units on test");
    for (std::size_t i = 0; i < obs_.size(); ++i) {
      if (!detail::positive_finite(obs_[i]))
        throw DomainError("failure time #" + std::to_string(i + 1) + " is not positive");
      if (i > 0 && obs_[i] < obs_[i - 1])
        throw DomainError("failure times must be nondecreasing (entry #" + std::to_string(i + 1) + ")");
    }
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return obs_.size(); }
  std::span<const double> observations() const noexcept { return obs_; }

  /// y_i = ln x_i
  std::vector<double> log_observations() const {
    std::vector<double> y(obs_.size());
    std::transform(obs_.begin(), obs_.end(), y.begin(), [](double x) { return std::log(x); });
    return y;
  }

  friend bool operator==(const CensoredSample&, const CensoredSample&) = default;

 private:
  std::size_t n_;
  std::vector<double> obs_;
};

/// Censored-sample summary consumed by every estimator and risk formula:
/// t = h·b̂ is approximately χ²_h / β.
///
/// n and m are informational; both are 0 when the context was built from
/// (h, t) alone.
class PivotalContext {
 public:
  PivotalContext(std::size_t n, std::size_t m, double h, double t) : n_(n), m_(m), h_(h), t_(t) {
    if (!(h > 4.0) || !std::isfinite(h))
      throw DomainError("degrees of freedom h must exceed 4, got " + std::to_string(h));
    if (!detail::positive_finite(t)) throw DomainError("pivotal statistic t must be > 0");
    if ((n != 0 || m != 0) && (m == 0 || m > n))
      throw ConfigurationError("pivotal context requires 0 < m <= n");
  }

  static PivotalContext from_ht(double h, double t) { return {0, 0, h, t}; }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  double h() const noexcept { return h_; }
  double t() const noexcept { return t_; }

  friend bool operator==(const PivotalContext&, const PivotalContext&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  double h_;
  double t_;
};

/// Prior guess (β₁, β₂) for the shape parameter. β₁ = β₂ is a point guess.
class GuessInterval {
 public:
  GuessInterval(double beta1, double beta2) : beta1_(beta1), beta2_(beta2) {
    if (!detail::positive_finite(beta1) || !detail::positive_finite(beta2))
      throw DomainError("guess interval endpoints must be > 0");
    if (beta1 > beta2) throw DomainError("guess interval requires beta1 <= beta2");
  }

  double beta1() const noexcept { return beta1_; }
  double beta2() const noexcept { return beta2_; }
  double midpoint() const noexcept { return 0.5 * (beta1_ + beta2_); }

  friend bool operator==(const GuessInterval&, const GuessInterval&) = default;

 private:
  double beta1_;
  double beta2_;
};

/// Scalars (p, q) selecting a member of the shrinkage class. Admissibility of
/// p depends on h and is checked where h is known (see risk.hpp).
class ShrinkageConfig {
 public:
  ShrinkageConfig(double p, double q) : p_(p), q_(q) {
    if (p == 0.0 || !std::isfinite(p)) throw DomainError("shrinkage exponent p must be nonzero");
    if (!detail::positive_finite(q)) throw DomainError("shrinkage target multiplier q must be > 0");
  }

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  friend bool operator==(const ShrinkageConfig&, const ShrinkageConfig&) = default;

 private:
  double p_;
  double q_;
};

enum class EstimatorId { Unbiased, Mmse, ShrinkPQ, ShrinkPQModified };

inline std::string_view to_string(EstimatorId id) {
  switch (id) {
    case EstimatorId::Unbiased: return "UNBIASED";
    case EstimatorId::Mmse: return "MMSE";
    case EstimatorId::ShrinkPQ: return "SHRINK_PQ";
    case EstimatorId::ShrinkPQModified: return "SHRINK_PQ_MODIFIED";
  }
  return "UNKNOWN";
}

inline std::optional<EstimatorId> estimator_id_from_string(std::string_view s) {
  for (auto id : {EstimatorId::Unbiased, EstimatorId::Mmse, EstimatorId::ShrinkPQ,
                  EstimatorId::ShrinkPQModified})
    if (to_string(id) == s) return id;
  return std::nullopt;
}

/// Scale-free risk of one estimator at one parameter point. rmse is the
/// relative mean squared error MSE/β² (not a root), pre is in percent.
struct RiskReport {
  EstimatorId estimator_id;
  double bias_over_beta;
  double arb;
  double rmse;
  double pre_vs_mmse;

  friend bool operator==(const RiskReport&, const RiskReport&) = default;
};

struct Departures {
  double delta;   // (β₁+β₂)/(2β)
  double delta1;  // β₁/β
  double delta2;  // β₂/β
};

inline Departures departures(const GuessInterval& interval, double beta) {
  if (!detail::positive_finite(beta)) throw DomainError("true beta must be > 0");
  const double d1 = interval.beta1() / beta;
  const double d2 = interval.beta2() / beta;
  return {0.5 * (d1 + d2), d1, d2};
}

// Tabulated degrees of freedom h for n = 20 units.
struct BuiltinH {
  std::size_t n;
  std::size_t m;
  double h;
};

inline constexpr std::array<BuiltinH, 4> kBuiltinH{{
    {20, 6, 10.8519},
    {20, 8, 15.6740},
    {20, 10, 20.8442},
    {20, 12, 26.4026},
}};

inline std::optional<double> builtin_h(std::size_t n, std::size_t m) {
  for (const auto& e : kBuiltinH)
    if (e.n == n && e.m == m) return e.h;
  return std::nullopt;
}

}  // namespace wshrink
