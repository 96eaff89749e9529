#include <gtest/gtest.h>

#include <boost/math/distributions/gamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "wshrink/montecarlo.hpp"

using namespace wshrink;
using namespace wshrink::mc;

namespace {

// Kolmogorov-Smirnov statistic of xs against cdf.
template <class Cdf>
double ks_statistic(std::vector<double> xs, Cdf cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double F = cdf(xs[i]);
    d = std::max({d, F - i / n, (i + 1) / n - F});
  }
  return d;
}

}  // namespace

TEST(Rng, UniformOpenInterval) {
  Rng rng(1);
  Moments m;
  for (int i = 0; i < 200000; ++i) {
    const double u = rng.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    m.add(u);
  }
  EXPECT_NEAR(m.mean(), 0.5, 4.0 * std::sqrt(1.0 / 12.0 / 200000));
  EXPECT_NEAR(m.variance(), 1.0 / 12.0, 1e-3);
}

TEST(Rng, SubstreamsDiffer) {
  EXPECT_NE(substream_seed(7, 0), substream_seed(7, 1));
  EXPECT_NE(substream_seed(7, 0), substream_seed(8, 0));
  Rng a(substream_seed(7, 0)), b(substream_seed(7, 1));
  EXPECT_NE(a.next(), b.next());
}

TEST(Rng, NormalMoments) {
  Rng rng(2);
  Moments m;
  for (int i = 0; i < 400000; ++i) m.add(rng.normal());
  EXPECT_NEAR(m.mean(), 0.0, 4.0 / std::sqrt(400000.0));
  EXPECT_NEAR(m.central2(), 1.0, 0.01);
  EXPECT_NEAR(m.central3(), 0.0, 0.03);
  EXPECT_NEAR(m.central4(), 3.0, 0.06);
}

TEST(Rng, GammaMatchesCdf) {
  for (double shape : {0.3, 1.0, 2.5, 5.42595, 13.2}) {
    Rng rng(3);
    std::vector<double> xs(20000);
    for (auto& x : xs) x = rng.gamma(shape);
    const double d = ks_statistic(xs, [&](double x) { return boost::math::gamma_p(shape, x); });
    // 1% critical value 1.63/√n.
    EXPECT_LT(d, 1.63 / std::sqrt(20000.0)) << "shape=" << shape;
  }
}

TEST(Sampler, PivotalStatisticDistribution) {
  // t ~ Gamma(h/2, rate β/2), i.e. βt ~ χ²_h.
  const double h = 10.8519, beta = 2.0;
  Rng rng(4);
  std::vector<double> xs(20000);
  for (auto& x : xs) x = sample_t(h, beta, rng);
  const boost::math::gamma_distribution<double> dist(0.5 * h, 2.0 / beta);
  EXPECT_LT(ks_statistic(xs, [&](double x) { return boost::math::cdf(dist, x); }), 1.63 / std::sqrt(20000.0));
}

TEST(Sampler, InverseMomentsOfT) {
  // E[t^p] = (2/β)^p Γ(h/2+p)/Γ(h/2).
  const double h = 15.6740, beta = 1.5;
  for (double p : {-2.0, -1.0, 1.0, 2.0}) {
    Rng rng(5);
    Moments m;
    for (int i = 0; i < 400000; ++i) m.add(std::pow(sample_t(h, beta, rng), p));
    const double exact = std::pow(2.0 / beta, p) * std::exp(std::lgamma(0.5 * h + p) - std::lgamma(0.5 * h));
    EXPECT_NEAR(m.mean(), exact, 4.0 * std::sqrt(m.variance() / 400000.0)) << "p=" << p;
  }
}

TEST(Sampler, WeibullSortedWithCorrectScale) {
  const WeibullParams w(3.0, 1.7);
  Rng rng(6);
  Moments m;
  for (int r = 0; r < 5000; ++r) {
    const auto x = sample_weibull(w, 20, rng);
    ASSERT_TRUE(std::is_sorted(x.begin(), x.end()));
    for (double v : x) m.add(v);
  }
  const double mean = 3.0 * std::tgamma(1.0 + 1.0 / 1.7);
  EXPECT_NEAR(m.mean(), mean, 4.0 * std::sqrt(m.variance() / 100000.0));
}

TEST(Moments, MergeEqualsSequential) {
  Rng rng(7);
  std::vector<double> xs(10001);
  for (auto& x : xs) x = rng.exponential() * 3.0 - 1.0;
  Moments all, a, b, c;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    all.add(xs[i]);
    (i < 17 ? a : i < 6000 ? b : c).add(xs[i]);
  }
  a.merge(b);
  a.merge(c);
  a.merge(Moments{});
  EXPECT_EQ(a.count(), all.count());
  EXPECT_NEAR(a.mean(), all.mean(), 1e-12);
  EXPECT_NEAR(a.central2(), all.central2(), 1e-11);
  EXPECT_NEAR(a.central3(), all.central3(), 1e-10);
  EXPECT_NEAR(a.central4(), all.central4(), 1e-9);
  // Exponential(1) scaled by 3: central moments 9, 54, 9·81.
  EXPECT_NEAR(all.central2(), 9.0, 0.5);
  EXPECT_NEAR(all.central3(), 54.0, 12.0);
}

TEST(RunReplicates, DeterministicAcrossThreadCounts) {
  const SimulationPlan base{70000, 99, WeibullParams(1.0, 1.0), 1, 1, 1};
  const PivotalEstimator est = [](const PivotalContext& c) { return beta_unbiased(c); };
  const auto r1 = empirical_risk(base, 10.8519, est);
  for (unsigned threads : {2u, 3u, 8u, 0u}) {
    auto plan = base;
    plan.threads = threads;
    const auto r = empirical_risk(plan, 10.8519, est);
    EXPECT_EQ(r.mean, r1.mean) << threads;
    EXPECT_EQ(r.mse, r1.mse) << threads;
    EXPECT_EQ(r.std_error_mse, r1.std_error_mse) << threads;
  }
  const auto k1 = estimate_K_mn(8, 20, 50000, 5, 1);
  const auto k4 = estimate_K_mn(8, 20, 50000, 5, 4);
  EXPECT_EQ(k1.value, k4.value);
  EXPECT_EQ(k1.std_error, k4.std_error);
}

TEST(RunReplicates, SeedChangesResult) {
  const PivotalEstimator est = [](const PivotalContext& c) { return beta_unbiased(c); };
  const auto a = empirical_risk(SimulationPlan{20000, 1, WeibullParams(1.0, 1.0), 1, 1}, 10.8519, est);
  const auto b = empirical_risk(SimulationPlan{20000, 2, WeibullParams(1.0, 1.0), 1, 1}, 10.8519, est);
  EXPECT_NE(a.mean, b.mean);
}

TEST(RunReplicates, ReportsLowestFailingReplicate) {
  struct Count {
    std::size_t n = 0;
    void merge(const Count& o) { n += o.n; }
  };
  try {
    run_replicates(100000, 1, 4, Count{}, [](Rng&, std::size_t r, Count& c) {
      if (r == 40000 || r == 90000) throw std::runtime_error("boom");
      ++c.n;
    });
    FAIL() << "expected ReplicateError";
  } catch (const ReplicateError& e) {
    EXPECT_EQ(e.replicate(), 40000u);
    EXPECT_NE(std::string(e.what()).find("boom"), std::string::npos);
  }
  const auto total = run_replicates(100000, 1, 4, Count{}, [](Rng&, std::size_t, Count& c) { ++c.n; });
  EXPECT_EQ(total.n, 100000u);
}

TEST(EmpiricalRisk, ClassicalEstimatorsMatchClosedForm) {
  const double h = 15.6740;
  const SimulationPlan plan{400000, 11, WeibullParams(1.0, 2.0), 1, 1};
  const std::vector<PivotalEstimator> ests{
      [](const PivotalContext& c) { return beta_unbiased(c); },
      [](const PivotalContext& c) { return beta_mmse(c); }};
  const auto r = empirical_risk(plan, h, ests);
  ASSERT_EQ(r.size(), 2u);
  const auto u = r[0].scaled(2.0), m = r[1].scaled(2.0);
  EXPECT_LE(std::fabs(u.bias), 3.0 * u.std_error_mean);
  EXPECT_LE(std::fabs(u.mse - rmse_unbiased(h)), 3.0 * u.std_error_mse);
  EXPECT_LE(std::fabs(m.bias - bias_mmse(h)), 3.0 * m.std_error_mean);
  EXPECT_LE(std::fabs(m.mse - rmse_mmse(h)), 3.0 * m.std_error_mse);
  EXPECT_EQ(u.replicates, 400000u);
}

TEST(EmpiricalRisk, StandardErrorShrinksAsRootN) {
  const PivotalEstimator est = [](const PivotalContext& c) { return beta_mmse(c); };
  const auto a = empirical_risk(SimulationPlan{10000, 3, WeibullParams(1.0, 1.0), 1, 1}, 10.8519, est);
  const auto b = empirical_risk(SimulationPlan{160000, 3, WeibullParams(1.0, 1.0), 1, 1}, 10.8519, est);
  EXPECT_NEAR(a.std_error_mean / b.std_error_mean, 4.0, 0.4);
}

TEST(EmpiricalRisk, StandardErrorsMatchDirectComputation) {
  // SE of the MSE from central moments equals the sample SD of (x - truth)² / √N.
  Rng rng(14);
  const double truth = 1.3;
  std::vector<double> xs(5000);
  Moments mom, sq;
  for (auto& x : xs) {
    x = 0.9 + rng.gamma(2.0) * 0.3;
    mom.add(x);
    sq.add((x - truth) * (x - truth));
  }
  const auto r = risk_from_moments(mom, truth);
  const double N = static_cast<double>(xs.size());
  EXPECT_NEAR(r.mse, sq.mean(), 1e-12);
  EXPECT_NEAR(r.std_error_mse, std::sqrt(sq.variance() / N), 1e-12);
  EXPECT_NEAR(r.std_error_mean, std::sqrt(mom.variance() / N), 1e-14);
  EXPECT_NEAR(r.bias, mom.mean() - truth, 1e-15);
}

TEST(EmpiricalRisk, SampleFormRunsOnCensoredSamples) {
  const SimulationPlan plan{2000, 4, WeibullParams(2.0, 1.0), 20, 8};
  const SampleEstimator last = [](const CensoredSample& s) {
    EXPECT_EQ(s.m(), 8u);
    EXPECT_EQ(s.n(), 20u);
    return s.observations().back();
  };
  const auto r = empirical_risk(plan, last);
  EXPECT_GT(r.mean, 0.0);
  EXPECT_EQ(r.replicates, 2000u);
}

TEST(SimulationPlan, Validation) {
  EXPECT_THROW((SimulationPlan{0, 1, WeibullParams(1.0, 1.0), 1, 1}.validate()), ConfigurationError);
  EXPECT_THROW((SimulationPlan{10, 1, WeibullParams(1.0, 1.0), 5, 6}.validate()), ConfigurationError);
  EXPECT_THROW((SimulationPlan{10, 1, WeibullParams(1.0, 1.0), 5, 0}.validate()), ConfigurationError);
}

TEST(OrderStatistics, KAgainstExactExpectation) {
  // Independent check of the spacing representation: simulate all n
  // log-exponentials, sort, and keep the m smallest.
  const std::size_t m = 4, n = 9;
  const auto K = estimate_K_mn(m, n, 200000, 8);
  Rng rng(9);
  Moments direct;
  for (int r = 0; r < 200000; ++r) {
    std::vector<double> v(n);
    for (auto& x : v) x = std::log(rng.exponential());
    std::sort(v.begin(), v.end());
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < m; ++i) s += v[m - 1] - v[i];
    direct.add(s / static_cast<double>(n));
  }
  const double se = std::hypot(K.std_error, std::sqrt(direct.variance() / 200000.0));
  EXPECT_NEAR(K.value, direct.mean(), 4.0 * se);
}

TEST(OrderStatistics, SurrogateHNearTabulated) {
  const auto h = estimate_h(6, 20, 200000, 10);
  EXPECT_GT(h.std_error, 0.0);
  EXPECT_NEAR(h.value, 10.8519, 0.5);
  EXPECT_THROW(estimate_h(1, 20, 1000, 1), DomainError);
  EXPECT_THROW(estimate_K_mn(21, 20, 1000, 1), DomainError);
  EXPECT_THROW(estimate_K_mn(8, 20, 1, 1), ConfigurationError);
}

TEST(Checks, MakeCheck) {
  EXPECT_TRUE(make_check("x", 1.0, 1.02, 0.01).pass);
  EXPECT_FALSE(make_check("x", 1.0, 1.04, 0.01).pass);
  EXPECT_NEAR(make_check("x", 1.0, 1.04, 0.01).z, 4.0, 1e-12);
  EXPECT_TRUE(make_check("x", 0.0, 0.0, 0.0).pass);
  EXPECT_FALSE(make_check("x", 0.0, 1e-6, 0.0).pass);
}

TEST(Checks, VerifyPointPasses) {
  const VerifyPoint pt{10.8519, -1.0, 0.25, 1.0, 0.8, 1.2};
  const auto checks = verify_point(pt, 200000, 12);
  ASSERT_EQ(checks.size(), 8u);
  EXPECT_EQ(checks[6].name, "modified.bias");
  for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.name << " z=" << c.z;
  EXPECT_THROW(verify_point(VerifyPoint{10.8519, -0.1, 0.25, 1.0, 0.8, 1.2}, 1000, 1), DomainError);
}
