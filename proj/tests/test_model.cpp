#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "wshrink/model.hpp"

using namespace wshrink;

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

TEST(WeibullParams, AccessorsAndLogScale) {
  const WeibullParams w(100.0, 2.0);
  EXPECT_EQ(w.alpha(), 100.0);
  EXPECT_EQ(w.beta(), 2.0);
  EXPECT_DOUBLE_EQ(w.log_scale(), 0.5);
  EXPECT_DOUBLE_EQ(w.log_location(), std::log(100.0));
}

TEST(Construction, RejectsFuzzedInvalidInputs) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> neg(-50.0, 0.0), pos(1e-6, 50.0);
  for (int i = 0; i < 500; ++i) {
    const double bad = neg(gen), good = pos(gen);
    EXPECT_THROW(WeibullParams(bad, good), DomainError);
    EXPECT_THROW(WeibullParams(good, bad), DomainError);
    EXPECT_THROW(GuessInterval(bad, good), DomainError);
    EXPECT_THROW(GuessInterval(good + 1.0, good), DomainError);
    EXPECT_THROW(ShrinkageConfig(good, bad), DomainError);
    EXPECT_THROW(PivotalContext(20, 6, 4.0 * good / 50.0, good), DomainError);
    EXPECT_THROW(PivotalContext(20, 6, 10.8519, bad), DomainError);
    EXPECT_NO_THROW(GuessInterval(good, good));
  }
  for (double x : {0.0, kNaN, kInf, -kInf}) {
    EXPECT_THROW(WeibullParams(x, 1.0), DomainError);
    EXPECT_THROW(WeibullParams(1.0, x), DomainError);
    EXPECT_THROW(GuessInterval(x, 2.0), DomainError);
    EXPECT_THROW(ShrinkageConfig(x, 0.5), DomainError);
    EXPECT_THROW(ShrinkageConfig(1.0, x), DomainError);
    EXPECT_THROW(PivotalContext::from_ht(10.0, x), DomainError);
  }
  EXPECT_THROW(PivotalContext::from_ht(4.0, 1.0), DomainError);
  EXPECT_THROW(PivotalContext::from_ht(kNaN, 1.0), DomainError);
  EXPECT_THROW(PivotalContext(5, 6, 10.0, 1.0), ConfigurationError);
  EXPECT_NO_THROW(ShrinkageConfig(-2.0, 0.25));
}

TEST(CensoredSample, Validation) {
  EXPECT_THROW(CensoredSample(5, {}), ConfigurationError);
  EXPECT_THROW(CensoredSample(2, {1.0, 2.0, 3.0}), ConfigurationError);
  EXPECT_THROW(CensoredSample(5, {1.0, -2.0}), DomainError);
  EXPECT_THROW(CensoredSample(5, {1.0, 0.0}), DomainError);
  EXPECT_THROW(CensoredSample(5, {2.0, 1.0}), DomainError);
  EXPECT_THROW(CensoredSample(5, {1.0, kNaN}), DomainError);
  const CensoredSample s(5, {1.0, 1.0, std::exp(1.0)});
  EXPECT_EQ(s.n(), 5u);
  EXPECT_EQ(s.m(), 3u);
  const auto y = s.log_observations();
  ASSERT_EQ(y.size(), 3u);
  EXPECT_DOUBLE_EQ(y[2], 1.0);
}

TEST(PivotalContext, FromHt) {
  const auto c = PivotalContext::from_ht(10.8519, 8.8519);
  EXPECT_EQ(c.h(), 10.8519);
  EXPECT_EQ(c.t(), 8.8519);
  EXPECT_EQ(c.m(), 0u);
}

TEST(GuessInterval, Midpoint) {
  EXPECT_DOUBLE_EQ(GuessInterval(3.8, 4.2).midpoint(), 4.0);
  EXPECT_DOUBLE_EQ(GuessInterval(2.0, 2.0).midpoint(), 2.0);
}

TEST(Departures, Examples) {
  auto d = departures(GuessInterval(0.4, 1.6), 1.0);
  EXPECT_DOUBLE_EQ(d.delta, 1.0);
  EXPECT_DOUBLE_EQ(d.delta1, 0.4);
  EXPECT_DOUBLE_EQ(d.delta2, 1.6);

  d = departures(GuessInterval(1.7, 1.7), 1.7);
  EXPECT_DOUBLE_EQ(d.delta, 1.0);
  EXPECT_DOUBLE_EQ(d.delta1, 1.0);
  EXPECT_DOUBLE_EQ(d.delta2, 1.0);

  EXPECT_DOUBLE_EQ(departures(GuessInterval(3.8, 4.2), 1.0).delta, 4.0);
}

TEST(Departures, RejectsBadBeta) {
  EXPECT_THROW(departures(GuessInterval(1.0, 2.0), 0.0), DomainError);
  EXPECT_THROW(departures(GuessInterval(1.0, 2.0), -1.0), DomainError);
  EXPECT_THROW(departures(GuessInterval(1.0, 2.0), kNaN), DomainError);
}

TEST(Departures, HomogeneousAndAveraged) {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(0.01, 10.0), logc(-6.0, 6.0);
  for (int i = 0; i < 2000; ++i) {
    double a = u(gen), b = u(gen);
    if (a > b) std::swap(a, b);
    const double beta = u(gen), c = std::exp(logc(gen));
    const auto d = departures(GuessInterval(a, b), beta);
    const auto s = departures(GuessInterval(c * a, c * b), c * beta);
    EXPECT_NEAR(s.delta, d.delta, 1e-12 * std::max(1.0, d.delta));
    EXPECT_NEAR(s.delta1, d.delta1, 1e-12 * std::max(1.0, d.delta1));
    EXPECT_NEAR(s.delta2, d.delta2, 1e-12 * std::max(1.0, d.delta2));
    EXPECT_NEAR(d.delta, 0.5 * (d.delta1 + d.delta2), 1e-12 * std::max(1.0, d.delta));
  }
}

TEST(EstimatorId, StringRoundTrip) {
  for (auto id : {EstimatorId::Unbiased, EstimatorId::Mmse, EstimatorId::ShrinkPQ,
                  EstimatorId::ShrinkPQModified})
    EXPECT_EQ(estimator_id_from_string(to_string(id)), id);
  EXPECT_EQ(to_string(EstimatorId::ShrinkPQModified), "SHRINK_PQ_MODIFIED");
  EXPECT_FALSE(estimator_id_from_string("shrink").has_value());
}

TEST(BuiltinH, Lookup) {
  EXPECT_EQ(builtin_h(20, 6), 10.8519);
  EXPECT_EQ(builtin_h(20, 8), 15.6740);
  EXPECT_EQ(builtin_h(20, 10), 20.8442);
  EXPECT_EQ(builtin_h(20, 12), 26.4026);
  EXPECT_FALSE(builtin_h(20, 7).has_value());
  EXPECT_FALSE(builtin_h(25, 6).has_value());
}
