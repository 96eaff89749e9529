#pragma once

// Simulation oracles for the analytic risk calculus.
//
// Random numbers: std::mt19937_64 with hand-written uniform, normal and gamma
// transforms, so a seed yields the same bits under every standard library.
//
// Stream splitting: replicates are grouped into fixed chunks of kChunkSize.
// Chunk c draws from its own engine seeded with splitmix64(seed ^ golden·(c+1)).
// Chunks are reduced in index order, so results depend only on (seed,
// replicates) and never on the thread count.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "wshrink/error.hpp"
#include "wshrink/estimators.hpp"
#include "wshrink/model.hpp"
#include "wshrink/risk.hpp"

namespace wshrink::mc {

inline constexpr std::size_t kChunkSize = std::size_t{1} << 14;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t chunk) {
  return splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (chunk + 1)));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on the open interval (0, 1).
  double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

  double exponential() { return -std::log(uniform()); }

  /// Standard normal, Marsaglia polar method.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  /// Gamma(shape, 1), Marsaglia-Tsang squeeze.
  double gamma(double shape) {
    if (!(shape > 0.0)) throw DomainError("gamma shape must be > 0");
    if (shape < 1.0) return gamma(shape + 1.0) * std::pow(uniform(), 1.0 / shape);
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      const double x2 = x * x;
      if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
      if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// n Weibull(α, β) draws by inversion x = α(-ln U)^{1/β}, sorted ascending.
inline std::vector<double> sample_weibull(const WeibullParams& params, std::size_t n, Rng& rng) {
  std::vector<double> x(n);
  for (auto& xi : x) xi = params.alpha() * std::pow(rng.exponential(), 1.0 / params.beta());
  std::sort(x.begin(), x.end());
  return x;
}

/// t ~ Gamma(shape h/2, rate β/2), i.e. χ²_h / β.
inline double sample_t(double h, double beta, Rng& rng) {
  if (!(h > 4.0) || !std::isfinite(h)) throw DomainError("sample_t requires h > 4");
  if (!detail::positive_finite(beta)) throw DomainError("sample_t requires beta > 0");
  return 2.0 * rng.gamma(0.5 * h) / beta;
}

/// Running count, mean and central moments M2..M4 with an exact pairwise
/// merge (Pébay 2008).
class Moments {
 public:
  void add(double x) {
    Moments one;
    one.n_ = 1;
    one.mean_ = x;
    merge(one);
  }

  void merge(const Moments& o) {
    if (o.n_ == 0) return;
    if (n_ == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(n_), nb = static_cast<double>(o.n_);
    const double n = na + nb;
    const double d = o.mean_ - mean_;
    const double d2 = d * d, d3 = d2 * d, d4 = d2 * d2;
    const double m4 = m4_ + o.m4_ + d4 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                      6.0 * d2 * (na * na * o.m2_ + nb * nb * m2_) / (n * n) +
                      4.0 * d * (na * o.m3_ - nb * m3_) / n;
    const double m3 = m3_ + o.m3_ + d3 * na * nb * (na - nb) / (n * n) +
                      3.0 * d * (na * o.m2_ - nb * m2_) / n;
    const double m2 = m2_ + o.m2_ + d2 * na * nb / n;
    mean_ += d * nb / n;
    m2_ = m2;
    m3_ = m3;
    m4_ = m4;
    n_ += o.n_;
  }

  std::size_t count() const noexcept { return n_; }
  double mean() const noexcept { return mean_; }
  /// Population central moments E[(x-μ)^k].
  double central2() const noexcept { return n_ ? m2_ / static_cast<double>(n_) : 0.0; }
  double central3() const noexcept { return n_ ? m3_ / static_cast<double>(n_) : 0.0; }
  double central4() const noexcept { return n_ ? m4_ / static_cast<double>(n_) : 0.0; }
  /// Unbiased sample variance.
  double variance() const noexcept { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double m3_ = 0.0;
  double m4_ = 0.0;
};

/// Run `replicates` calls of body(rng, replicate_index, acc) in chunks, each
/// chunk with its own substream and accumulator, then merge in chunk order.
/// An exception in a replicate is rethrown as ReplicateError carrying the
/// lowest failing replicate index.
template <class Acc, class Body>
Acc run_replicates(std::size_t replicates, std::uint64_t seed, unsigned threads, const Acc& empty,
                   Body body) {
  const std::size_t chunks = (replicates + kChunkSize - 1) / kChunkSize;
  std::vector<Acc> partial(chunks, empty);
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::size_t> failed_at(chunks, 0);
  std::atomic<std::size_t> next{0};

  const auto worker = [&] {
    for (std::size_t c; (c = next.fetch_add(1)) < chunks;) {
      Rng rng(substream_seed(seed, c));
      const std::size_t begin = c * kChunkSize;
      const std::size_t end = std::min(replicates, begin + kChunkSize);
      for (std::size_t r = begin; r < end; ++r) {
        try {
          body(rng, r, partial[c]);
        } catch (...) {
          errors[c] = std::current_exception();
          failed_at[c] = r;
          break;
        }
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(chunks, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  for (std::size_t c = 0; c < chunks; ++c) {
    if (!errors[c]) continue;
    try {
      std::rethrow_exception(errors[c]);
    } catch (const std::exception& e) {
      throw ReplicateError(failed_at[c], e.what());
    } catch (...) {
      throw ReplicateError(failed_at[c], "unknown error");
    }
  }

  Acc total = empty;
  for (const auto& p : partial) total.merge(p);
  return total;
}

struct SimulationPlan {
  std::size_t replicates;
  std::uint64_t seed;
  WeibullParams params;
  std::size_t n;
  std::size_t m;
  unsigned threads = 0;  // 0 = hardware concurrency; never changes results

  void validate() const {
    if (replicates < 1) throw ConfigurationError("simulation needs at least 1 replicate");
    if (m == 0 || m > n) throw ConfigurationError("simulation requires 0 < m <= n");
  }
};

/// Empirical mean, bias and MSE of an estimator of β, in the units of β.
struct EmpiricalRisk {
  double mean;
  double bias;
  double mse;
  double std_error_mean;
  double std_error_mse;
  std::size_t replicates;

  /// The same risk for the estimator divided by c (bias/β, MSE/β² for c = β).
  EmpiricalRisk scaled(double c) const {
    return {mean / c, bias / c, mse / (c * c), std_error_mean / c, std_error_mse / (c * c),
            replicates};
  }
};

/// Risk of x as an estimator of `truth` from the central moments of x.
/// With d = x - E[x] and b = E[x] - truth: Var((x-truth)²) = μ4 + 4bμ3 + 4b²μ2 - μ2².
inline EmpiricalRisk risk_from_moments(const Moments& mom, double truth) {
  const double N = static_cast<double>(mom.count());
  const double mu2 = mom.central2(), mu3 = mom.central3(), mu4 = mom.central4();
  const double b = mom.mean() - truth;
  const double var_sq = std::max(0.0, mu4 + 4.0 * b * mu3 + 4.0 * b * b * mu2 - mu2 * mu2);
  const double bessel = N > 1.0 ? N / (N - 1.0) : 1.0;
  return {mom.mean(),
          b,
          mu2 + b * b,
          std::sqrt(mu2 * bessel / N),
          std::sqrt(var_sq * bessel / N),
          mom.count()};
}

using PivotalEstimator = std::function<double(const PivotalContext&)>;
using SampleEstimator = std::function<double(const CensoredSample&)>;

namespace detail {

struct MomentVector {
  std::vector<Moments> m;
  void merge(const MomentVector& o) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i].merge(o.m[i]);
  }
};

inline std::vector<EmpiricalRisk> to_risks(const MomentVector& acc, double truth) {
  std::vector<EmpiricalRisk> out;
  for (const auto& mom : acc.m) out.push_back(risk_from_moments(mom, truth));
  return out;
}

}  // namespace detail

/// Risk of several estimators evaluated on the same draws t ~ f(t | h, β),
/// β = plan.params.beta().
inline std::vector<EmpiricalRisk> empirical_risk(const SimulationPlan& plan, double h,
                                                 const std::vector<PivotalEstimator>& estimators) {
  plan.validate();
  const double beta = plan.params.beta();
  detail::MomentVector empty{std::vector<Moments>(estimators.size())};
  const auto acc = run_replicates(plan.replicates, plan.seed, plan.threads, empty,
                                  [&](Rng& rng, std::size_t, detail::MomentVector& a) {
                                    const PivotalContext ctx(plan.n, plan.m, h, sample_t(h, beta, rng));
                                    for (std::size_t i = 0; i < estimators.size(); ++i)
                                      a.m[i].add(estimators[i](ctx));
                                  });
  return detail::to_risks(acc, beta);
}

inline EmpiricalRisk empirical_risk(const SimulationPlan& plan, double h, const PivotalEstimator& est) {
  return empirical_risk(plan, h, std::vector<PivotalEstimator>{est}).front();
}

/// Risk of several estimators on the same simulated censored samples: n
/// Weibull draws, of which the m smallest are kept.
inline std::vector<EmpiricalRisk> empirical_risk(const SimulationPlan& plan,
                                                 const std::vector<SampleEstimator>& estimators) {
  plan.validate();
  detail::MomentVector empty{std::vector<Moments>(estimators.size())};
  const auto acc = run_replicates(plan.replicates, plan.seed, plan.threads, empty,
                                  [&](Rng& rng, std::size_t, detail::MomentVector& a) {
                                    auto x = sample_weibull(plan.params, plan.n, rng);
                                    x.resize(plan.m);
                                    const CensoredSample sample(plan.n, std::move(x));
                                    for (std::size_t i = 0; i < estimators.size(); ++i)
                                      a.m[i].add(estimators[i](sample));
                                  });
  return detail::to_risks(acc, plan.params.beta());
}

inline EmpiricalRisk empirical_risk(const SimulationPlan& plan, const SampleEstimator& est) {
  return empirical_risk(plan, std::vector<SampleEstimator>{est}).front();
}

/// A Monte Carlo constant with its standard error.
struct MonteCarloEstimate {
  double value;
  double std_error;
  std::size_t replicates;
};

namespace detail {

inline void check_order_stat_args(std::size_t m, std::size_t n, std::size_t replicates) {
  if (m < 2) throw DomainError("m must be at least 2");
  if (m > n) throw DomainError("m must not exceed n");
  if (replicates < 2) throw ConfigurationError("need at least 2 replicates");
}

// D = Σ_{i<m} (v_m - v_i) for the m smallest of n standard extreme-value
// (u=0, b=1) draws. v = ln E with E ~ Exp(1); the exponential order
// statistics come from Rényi's representation E_(i) = Σ_{j<=i} Z_j/(n-j+1).
inline double log_spacing_sum(std::size_t m, std::size_t n, Rng& rng, std::vector<double>& v) {
  v.resize(m);
  double e = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    e += rng.exponential() / static_cast<double>(n - i);
    v[i] = std::log(e);
  }
  double d = 0.0;
  for (std::size_t i = 0; i + 1 < m; ++i) d += v[m - 1] - v[i];
  return d;
}

inline Moments log_spacing_moments(std::size_t m, std::size_t n, std::size_t replicates,
                                   std::uint64_t seed, unsigned threads) {
  return run_replicates(replicates, seed, threads, Moments{},
                        [m, n](Rng& rng, std::size_t, Moments& acc) {
                          thread_local std::vector<double> v;
                          acc.add(log_spacing_sum(m, n, rng, v));
                        });
}

}  // namespace detail

/// K(m,n) = -(1/n) E[Σ_{i<m} (v_i - v_m)].
inline MonteCarloEstimate estimate_K_mn(std::size_t m, std::size_t n, std::size_t replicates,
                                        std::uint64_t seed, unsigned threads = 0) {
  detail::check_order_stat_args(m, n, replicates);
  const auto mom = detail::log_spacing_moments(m, n, replicates, seed, threads);
  const double N = static_cast<double>(replicates);
  const double nn = static_cast<double>(n);
  return {mom.mean() / nn, std::sqrt(mom.variance() / N) / nn, replicates};
}

/// h = 2/Var(b̂ᵤ/b), using b̂ᵤ as the surrogate for the optimal-g
/// estimator. With D as above, b̂ᵤ/b = D/E[D], so h = 2μ²/σ². The standard
/// error is the delta method on (sample mean, sample variance).
inline MonteCarloEstimate estimate_h(std::size_t m, std::size_t n, std::size_t replicates,
                                     std::uint64_t seed, unsigned threads = 0) {
  detail::check_order_stat_args(m, n, replicates);
  const auto mom = detail::log_spacing_moments(m, n, replicates, seed, threads);
  const double N = static_cast<double>(replicates);
  const double mu = mom.mean();
  const double s2 = mom.central2();
  const double mu3 = mom.central3();
  const double mu4 = mom.central4();
  if (!(s2 > 0.0)) throw DegenerateSampleError("zero variance in simulated log spacings");
  const double dmu = 4.0 * mu / s2;
  const double ds2 = -2.0 * mu * mu / (s2 * s2);
  const double var = (dmu * dmu * s2 + ds2 * ds2 * (mu4 - s2 * s2) + 2.0 * dmu * ds2 * mu3) / N;
  return {2.0 * mu * mu / s2, std::sqrt(std::max(0.0, var)), replicates};
}

// ---------------------------------------------------------------------------
// Analytic-vs-empirical checks

struct Check {
  std::string name;
  double analytic;
  double empirical;
  double std_error;
  double z;
  bool pass;
};

inline Check make_check(std::string name, double analytic, double empirical, double se,
                        double z_limit = 3.0) {
  // A degenerate estimator (zero spread) must match to rounding.
  const double diff = std::fabs(empirical - analytic);
  const bool exact = diff <= 1e-12 * std::max(1.0, std::fabs(analytic));
  const double z = se > 0.0 ? diff / se : (exact ? 0.0 : INFINITY);
  return {std::move(name), analytic, empirical, se, z, z <= z_limit};
}

/// One parameter point of the pivotal model: truth β and guess interval
/// (β₁, β₂). The plain shrinkage estimator sees only the midpoint.
struct VerifyPoint {
  double h;
  double p;
  double q;
  double beta;
  double beta1;
  double beta2;
};

/// Empirical bias and MSE of β̂, β̂_M, β̂(p,q) and β̃(p,q) on common draws of
/// t, each compared with its closed form within z_limit standard errors.
inline std::vector<Check> verify_point(const VerifyPoint& pt, std::size_t replicates,
                                       std::uint64_t seed, unsigned threads = 0,
                                       double z_limit = 3.0) {
  const GuessInterval interval(pt.beta1, pt.beta2);
  const ShrinkageConfig cfg(pt.p, pt.q);
  const auto d = departures(interval, pt.beta);
  shrink_weight(pt.p, pt.h);  // reject inadmissible p before simulating

  const SimulationPlan plan{replicates, seed, WeibullParams(1.0, pt.beta), 1, 1, threads};
  const std::vector<PivotalEstimator> ests{
      [](const PivotalContext& c) { return beta_unbiased(c); },
      [](const PivotalContext& c) { return beta_mmse(c); },
      [&](const PivotalContext& c) { return beta_shrink(c, interval, cfg); },
      [&](const PivotalContext& c) { return beta_shrink_modified(c, interval, cfg); },
  };
  const auto emp = empirical_risk(plan, pt.h, ests);

  struct Expected {
    const char* name;
    double bias;
    double mse;
  };
  const Expected expected[] = {
      {"unbiased", 0.0, rmse_unbiased(pt.h)},
      {"mmse", bias_mmse(pt.h), rmse_mmse(pt.h)},
      {"shrink", bias_shrink(pt.h, pt.p, pt.q, d.delta), rmse_shrink(pt.h, pt.p, pt.q, d.delta)},
      {"modified", bias_modified(pt.h, pt.p, pt.q, d.delta1, d.delta2),
       mse_modified(pt.h, pt.p, pt.q, d.delta1, d.delta2)},
  };

  std::vector<Check> out;
  for (std::size_t i = 0; i < emp.size(); ++i) {
    const auto r = emp[i].scaled(pt.beta);
    out.push_back(make_check(std::string(expected[i].name) + ".bias", expected[i].bias, r.bias,
                             r.std_error_mean, z_limit));
    out.push_back(make_check(std::string(expected[i].name) + ".mse", expected[i].mse, r.mse,
                             r.std_error_mse, z_limit));
  }
  return out;
}

}  // namespace wshrink::mc
