#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wshrink/published.hpp"
#include "wshrink/risk.hpp"

using namespace wshrink;

namespace {

constexpr double kH6 = 10.8519;
constexpr double kH12 = 26.4026;

double printed_w(int p, int m) { return *published::weight31(p, m); }

}  // namespace

TEST(Classical, MmseFooter) {
  EXPECT_NEAR(arb_mmse(kH6), 0.225941, 1e-6);
  EXPECT_NEAR(arb_mmse(kH12), 0.08195847983411604, 1e-14);
  EXPECT_NEAR(arb_mmse(kH12), 0.0820, 5e-5);
  EXPECT_NEAR(arb_mmse(1e12), 0.0, 1e-11);
  EXPECT_DOUBLE_EQ(bias_mmse(kH6), -arb_mmse(kH6));
  EXPECT_DOUBLE_EQ(rmse_mmse(kH6), arb_mmse(kH6));
  EXPECT_NEAR(rmse_unbiased(kH6), 2.0 / 6.8519, 1e-15);
  EXPECT_THROW(arb_mmse(4.0), DomainError);
  EXPECT_THROW(rmse_unbiased(3.0), DomainError);
}

TEST(ShrinkRisk, ArbExamples) {
  // Closed-form w(-2) = 0.176593 at m = 6; the printed column header is 0.175.
  EXPECT_NEAR(arb_shrink(kH6, -2.0, 0.25, 0.15), 0.7925293737575984, 1e-12);
  EXPECT_NEAR(arb_shrink_at(printed_w(-2, 6), 0.25, 0.15), 0.7941, 5e-5);
  EXPECT_EQ(arb_shrink(kH6, -2.0, 0.25, 4.0), 0.0);
  EXPECT_NEAR(arb_shrink(kH6, -1.0, 0.25, 1.0), 0.16945514522305868, 1e-12);
  EXPECT_NEAR(arb_shrink(kH6, -1.0, 0.25, 1.0), 0.1696, 2e-4);
  EXPECT_LT(bias_shrink(kH6, -1.0, 0.25, 1.0), 0.0);
  EXPECT_GT(bias_shrink(kH6, -1.0, 0.25, 8.0), 0.0);
}

TEST(ShrinkRisk, RmseExamples) {
  EXPECT_NEAR(rmse_shrink(kH6, -2.0, 0.25, 4.0), 0.009102595674126045, 1e-14);
  EXPECT_NEAR(rmse_shrink_at(kH6, 0.175, 0.25, 4.0), 0.008939, 1e-6);
  EXPECT_NEAR(rmse_shrink_at(kH6, 1.0, 0.25, 0.15), rmse_unbiased(kH6), 1e-15);
  EXPECT_NEAR(rmse_shrink(kH6, -1.0, 0.25, 1.0), 0.20360626877541532, 1e-13);
  EXPECT_NEAR(rmse_shrink(kH6, -1.0, 0.25, 1.0), 0.203607, 1e-5);
}

TEST(ShrinkRisk, PreExamples) {
  EXPECT_NEAR(pre_shrink(kH6, -2.0, 0.25, 0.15), 35.45798454199083, 1e-10);
  EXPECT_NEAR(pre_shrink(kH6, -2.0, 0.25, 4.0), 2482.1512645341, 1e-8);
  EXPECT_NEAR(pre_shrink(kH6, -1.0, 0.25, 1.0), 110.96917348844778, 1e-10);
  EXPECT_NEAR(pre_shrink(kH12, 1.0, 0.5, 2.0), 124.36733159854457, 1e-10);

  // With the printed weights the published cells are reproduced.
  EXPECT_NEAR(pre_shrink_at(kH6, printed_w(-2, 6), 0.25, 0.15), 35.33, 0.01 * 35.33);
  EXPECT_NEAR(pre_shrink_at(kH6, printed_w(-2, 6), 0.25, 4.0), 2528.52, 0.01 * 2528.52);
  EXPECT_NEAR(pre_shrink_at(kH12, printed_w(1, 12), 0.5, 2.0), 119.12, 0.01 * 119.12);
  EXPECT_NEAR(pre_shrink(kH6, -1.0, 0.25, 1.0), 110.98, 0.01 * 110.98);
}

TEST(ShrinkRisk, PreMatchesRmseRatio) {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> uh(4.5, 60.0), uw(0.01, 1.0), uq(0.05, 2.0), ud(0.01, 8.0);
  for (int i = 0; i < 1000; ++i) {
    const double h = uh(gen), w = uw(gen), q = uq(gen), d = ud(gen);
    const double ratio = 100.0 * rmse_mmse(h) / rmse_shrink_at(h, w, q, d);
    EXPECT_NEAR(pre_shrink_at(h, w, q, d), ratio, 1e-10 * ratio);
  }
}

TEST(ShrinkRisk, SymmetricAboutInverseQ) {
  std::mt19937_64 gen(22);
  std::uniform_real_distribution<double> uh(4.5, 60.0), uw(0.01, 1.0), uq(0.05, 2.0), u01(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double h = uh(gen), w = uw(gen), q = uq(gen);
    const double delta = u01(gen) / q * 0.999;  // keep 1/q - δ > 0
    EXPECT_NEAR(rmse_shrink_at(h, w, q, 1.0 / q + delta), rmse_shrink_at(h, w, q, 1.0 / q - delta), 1e-12);
    EXPECT_NEAR(arb_shrink_at(w, q, 1.0 / q + delta), arb_shrink_at(w, q, 1.0 / q - delta), 1e-12);
  }
}

TEST(ShrinkRisk, PeakAtInverseQ) {
  for (double h : {10.8519, 15.6740, 20.8442, 26.4026})
    for (double p : {-2.0, -1.0, 1.0, 2.0})
      for (double q : {0.25, 0.5, 0.75}) {
        const double peak = pre_shrink(h, p, q, 1.0 / q);
        EXPECT_EQ(arb_shrink(h, p, q, 1.0 / q), 0.0);
        for (int i = 1; i <= 1000; ++i) {
          const double d = 8.0 * i / 1000.0;
          EXPECT_LE(pre_shrink(h, p, q, d), peak * (1.0 + 1e-14));
        }
      }
}

TEST(ShrinkRisk, Errors) {
  EXPECT_THROW(pre_shrink(kH6, 0.0, 0.25, 1.0), DomainError);
  EXPECT_THROW(pre_shrink(kH6, -3.0, 0.25, 1.0), DomainError);
  EXPECT_THROW(pre_shrink(kH6, 1.0, 0.0, 1.0), DomainError);
  EXPECT_THROW(pre_shrink(kH6, 1.0, 0.25, -1.0), DomainError);
  EXPECT_THROW(bias_shrink_at(1.5, 0.25, 1.0), DomainError);
  EXPECT_THROW(rmse_shrink_at(4.0, 0.5, 0.25, 1.0), DomainError);
}

TEST(Dominance, RangeExamples) {
  auto mse = mse_dominance_range(kH6, -2.0, 0.25);
  EXPECT_NEAR(mse.lower, 1.7378955412029824, 1e-10);
  EXPECT_NEAR(mse.upper, 6.262104458797017, 1e-10);
  auto mse_printed = mse_dominance_range_at(kH6, printed_w(-2, 6), 0.25);
  EXPECT_NEAR(mse_printed.lower, 1.74, 0.01);
  EXPECT_NEAR(mse_printed.upper, 6.25, 0.01);

  const auto half = mse_dominance_range(kH6, -2.0, 0.5);
  EXPECT_NEAR(half.lower, 0.5 * mse.lower, 1e-14);
  EXPECT_NEAR(half.upper, 0.5 * mse.upper, 1e-14);
  EXPECT_NEAR(half.lower, 0.87, 0.01);
  EXPECT_NEAR(half.upper, 3.13, 0.01);

  const auto arb = arb_dominance_range(kH6, -2.0, 0.25);
  EXPECT_NEAR(arb.lower, 2.902413242610704, 1e-10);
  EXPECT_NEAR(arb.upper, 5.097586757389296, 1e-10);
  EXPECT_NEAR(arb.midpoint(), 4.0, 1e-14);
  const auto arb75 = arb_dominance_range(kH6, -2.0, 0.75);
  EXPECT_NEAR(arb75.lower, 0.97, 0.01);
  EXPECT_NEAR(arb75.upper, 1.70, 0.01);

  const auto best = best_range(kH6, -2.0, 0.25);
  EXPECT_EQ(best.kind, RangeKind::Best);
  EXPECT_DOUBLE_EQ(best.lower, arb.lower);
  EXPECT_DOUBLE_EQ(best.upper, arb.upper);
  EXPECT_EQ(dominance_case(mse, arb), 4);

  // p = -1: 1 - w = 2/(h-2), so both ranges are (0, 2/q).
  const auto b1 = best_range(kH6, -1.0, 0.25);
  EXPECT_NEAR(b1.lower, 0.0, 1e-12);
  EXPECT_NEAR(b1.upper, 8.0, 1e-12);
  EXPECT_NEAR(mse_dominance_range(kH6, -1.0, 0.25).upper, 8.0, 1e-12);
}

TEST(Dominance, ScalesAsInverseQ) {
  for (double p : {-2.0, -1.0, 1.0, 2.0}) {
    const auto a = mse_dominance_range(kH6, p, 1.0);
    const auto b = arb_dominance_range(kH6, p, 1.0);
    for (double q : {0.1, 0.25, 0.5, 3.0}) {
      EXPECT_NEAR(mse_dominance_range(kH6, p, q).lower * q, a.lower, 1e-13);
      EXPECT_NEAR(mse_dominance_range(kH6, p, q).upper * q, a.upper, 1e-13);
      EXPECT_NEAR(arb_dominance_range(kH6, p, q).lower * q, b.lower, 1e-13);
      EXPECT_NEAR(arb_dominance_range(kH6, p, q).upper * q, b.upper, 1e-13);
    }
  }
}

TEST(Dominance, CoherenceFuzz) {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> uh(4.5, 60.0), up(0.1, 4.0), uq(0.05, 2.0), u01(0.0, 1.0);
  int nonempty = 0;
  for (int i = 0; i < 100; ++i) {
    const double h = uh(gen), q = uq(gen);
    const double p = u01(gen) < 0.5 ? up(gen) : -(0.5 + u01(gen) * (0.25 * h - 0.5) * 0.98);
    const double w = shrink_weight(p, h);
    const auto mse = mse_dominance_range_at(h, w, q);
    const auto arb = arb_dominance_range_at(h, w, q);
    const auto best = best_range(mse, arb);
    for (int k = 0; k < 200; ++k) {
      const double d = 1e-3 + u01(gen) * 4.0 / q;
      const bool mse_better = rmse_shrink_at(h, w, q, d) < rmse_mmse(h);
      const bool arb_better = arb_shrink_at(w, q, d) < arb_mmse(h);
      if (!mse.empty) {
        if (d > mse.lower + 1e-6 && d < mse.upper - 1e-6) {
          EXPECT_TRUE(mse_better) << h << ' ' << p << ' ' << d;
        }
        if (d < mse.lower - 1e-6 || d > mse.upper + 1e-6) {
          EXPECT_FALSE(mse_better) << h << ' ' << p << ' ' << d;
        }
      } else {
        EXPECT_FALSE(mse_better);
      }
      if (d > arb.lower + 1e-6 && d < arb.upper - 1e-6) {
        EXPECT_TRUE(arb_better);
      }
      if (d < arb.lower - 1e-6 || d > arb.upper + 1e-6) {
        EXPECT_FALSE(arb_better);
      }
      if (!best.empty && best.contains(d)) {
        EXPECT_TRUE(mse.contains(d));
        EXPECT_TRUE(arb.contains(d));
      }
    }
    if (!mse.empty) {
      ++nonempty;
      EXPECT_GE(dominance_case(mse, arb), 1);
    }
  }
  EXPECT_GT(nonempty, 10);
}

TEST(Dominance, BestIsIntersectionForEveryCase) {
  const DominanceRange m{1.0, 5.0, RangeKind::Mse};
  const DominanceRange cases[] = {
      {0.5, 4.0, RangeKind::Arb}, {0.5, 6.0, RangeKind::Arb}, {2.0, 6.0, RangeKind::Arb}, {2.0, 4.0, RangeKind::Arb}};
  const double expect[][2] = {{1.0, 4.0}, {1.0, 5.0}, {2.0, 5.0}, {2.0, 4.0}};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(dominance_case(m, cases[i]), i + 1);
    const auto b = best_range(m, cases[i]);
    EXPECT_EQ(b.lower, expect[i][0]);
    EXPECT_EQ(b.upper, expect[i][1]);
  }
  EXPECT_TRUE(best_range(m, DominanceRange{6.0, 7.0, RangeKind::Arb}).empty);
  EXPECT_TRUE(best_range(DominanceRange::none(RangeKind::Mse), cases[0]).empty);
  EXPECT_EQ(dominance_case(DominanceRange::none(RangeKind::Mse), cases[0]), 0);
}

TEST(Dominance, EmptyWhenGNegative) {
  // Just below the weight root w is slightly under 1 and G < 0.
  const double root = admissible_p(kH6).weight_root;
  const double p = root - 1e-3;
  const double w = shrink_weight(p, kH6);
  EXPECT_LT(mse_dominance_constant(kH6, w), 0.0);
  const auto r = mse_dominance_range(kH6, p, 0.25);
  EXPECT_TRUE(r.empty);
  EXPECT_TRUE(std::isnan(r.lower));
  EXPECT_FALSE(r.contains(1.0));
  EXPECT_TRUE(best_range(kH6, p, 0.25).empty);
}

TEST(Dominance, DegenerateWeight) {
  EXPECT_THROW(mse_dominance_range_at(kH6, 1.0, 0.25), DegenerateWeightError);
  EXPECT_THROW(arb_dominance_range_at(kH6, 1.0, 0.25), DegenerateWeightError);
  EXPECT_THROW(mse_dominance_range_at(kH6, 0.5, 0.0), DomainError);
}

TEST(Admissible, Bounds) {
  const auto a = admissible_p(kH6);
  EXPECT_NEAR(a.lower_bound, -2.712975, 1e-12);
  EXPECT_NEAR(a.weight_root, -0.338858, 1e-6);
  EXPECT_NEAR(detail::raw_shrink_weight(a.weight_root, kH6), 1.0, 1e-12);
  EXPECT_TRUE(is_admissible_p(-2.0, kH6));
  EXPECT_TRUE(is_admissible_p(-1.0, kH6));
  EXPECT_TRUE(is_admissible_p(0.5, kH6));
  EXPECT_FALSE(is_admissible_p(0.0, kH6));
  EXPECT_FALSE(is_admissible_p(-3.0, kH6));
  EXPECT_FALSE(is_admissible_p(-0.1, kH6));
  EXPECT_FALSE(is_admissible_p(-2.712975, kH6));
  EXPECT_NE(a.description.find("-2.71"), std::string::npos);
  EXPECT_THROW(admissible_p(4.0), DomainError);
}

TEST(Admissible, AgreesWithWeightFuzz) {
  std::mt19937_64 gen(24);
  std::uniform_real_distribution<double> uh(4.5, 60.0), up(-16.0, 8.0);
  for (int i = 0; i < 2000; ++i) {
    const double h = uh(gen), p = up(gen);
    bool ok = true;
    try {
      shrink_weight(p, h);
    } catch (const DomainError&) {
      ok = false;
    }
    EXPECT_EQ(is_admissible_p(p, h), ok) << "h=" << h << " p=" << p;
  }
}

TEST(Truncated, FrozenValues) {
  EXPECT_NEAR(bias_modified(kH6, -1.0, 0.25, 0.8, 1.2), -0.099206186011, 1e-11);
  EXPECT_NEAR(mse_modified(kH6, -1.0, 0.25, 0.8, 1.2), 0.041122780155691, 1e-13);
  EXPECT_NEAR(pre_modified(kH6, -1.0, 0.25, 0.8, 1.2), 548.60, 0.01 * 548.60);
  EXPECT_NEAR(pre_modified(15.6740, 2.0, 0.5, 1.0, 1.5), 467.49, 0.015 * 467.49);
  // The printed 317.53 is not reproduced by either weight; the closed form
  // here agrees with direct quadrature (see MatchesQuadratureOracle).
  const double pre12 = pre_modified(kH12, 1.0, 0.75, 0.8, 1.2);
  EXPECT_NEAR(pre12, 324.5643855513377, 1e-8);
  EXPECT_GT(std::fabs(pre12 - 317.53) / 317.53, 0.015);
}

TEST(Truncated, MatchesQuadratureOracle) {
  const double points[][5] = {
      {10.8519, -1.0, 0.25, 0.8, 1.2}, {10.8519, -1.0, 0.25, 0.2, 0.3}, {15.6740, 2.0, 0.5, 1.0, 1.5},
      {26.4026, 1.0, 0.75, 0.8, 1.2},  {20.8442, -2.0, 0.5, 0.4, 0.6},  {10.8519, 2.0, 0.75, 1.5, 2.0},
      {15.6740, 1.0, 0.25, 0.3, 3.0},  {26.4026, -1.0, 0.5, 1.0, 1.0},  {12.5, 0.5, 1.2, 0.05, 9.0},
  };
  for (const auto& pt : points) {
    const double h = pt[0], p = pt[1], q = pt[2], d1 = pt[3], d2 = pt[4];
    const double w = shrink_weight(p, h);
    const auto [bias, mse] = oracle::truncated_moments(h, w, q, d1, d2);
    EXPECT_NEAR(bias_modified_at(h, w, q, d1, d2), bias, 1e-9) << h << ' ' << p << ' ' << d1 << ' ' << d2;
    EXPECT_NEAR(mse_modified_at(h, w, q, d1, d2), mse, 1e-9) << h << ' ' << p << ' ' << d1 << ' ' << d2;
  }
}

TEST(Truncated, GroupedLastTermIsOffByDelta2MinusOne) {
  // Writing the tail as Δ₂·{I(η₂,h/2) - 1} instead of Δ₂·I(η₂,h/2) - 1 shifts
  // the bias by exactly Δ₂ - 1; the oracle settles which one is right.
  const double h = kH6, q = 0.25, d1 = 0.8, d2 = 1.6;
  const double w = shrink_weight(-1.0, h);
  const double a = 0.5 * h, k = a - 1.0, eta1 = k / d1, eta2 = k / d2;
  const double I1 = reg_lower_inc_gamma(eta1, a), I2 = reg_lower_inc_gamma(eta2, a);
  const double J1 = reg_lower_inc_gamma(eta1, a - 1.0), J2 = reg_lower_inc_gamma(eta2, a - 1.0);
  const double shift = q * 0.5 * (d1 + d2) * (1.0 - w);
  const double grouped = d1 * (1.0 - I1) + w * (J1 - J2) + shift * (I1 - I2) + d2 * (I2 - 1.0);
  const double ours = bias_modified_at(h, w, q, d1, d2);
  const double oracle_bias = oracle::truncated_moments(h, w, q, d1, d2).first;
  EXPECT_NEAR(ours, oracle_bias, 1e-9);
  EXPECT_NEAR(ours - grouped, d2 - 1.0, 1e-12);
  EXPECT_GT(std::fabs(grouped - oracle_bias), 0.5);
}

TEST(Truncated, LimitRecoversPlainClass) {
  for (double p : {-2.0, -1.0, 1.0, 2.0})
    for (double h : {10.8519, 26.4026}) {
      const double d1 = 1e-8, d2 = 1e8, delta = 0.5 * (d1 + d2);
      for (double c : {0.0375, 0.5, 1.0, 1.7, 3.0}) {
        const double q = c / delta;
        EXPECT_NEAR(mse_modified(h, p, q, d1, d2), rmse_shrink(h, p, q, delta), 1e-6) << p << ' ' << c;
        EXPECT_NEAR(bias_modified(h, p, q, d1, d2), bias_shrink(h, p, q, delta), 1e-6) << p << ' ' << c;
      }
    }
}

TEST(Truncated, PreIsMmseRatio) {
  for (double d1 : {0.2, 0.8, 1.5})
    for (double d2 : {d1, d1 + 0.4, d1 + 3.0}) {
      const double mse = mse_modified_at(kH6, 0.5, 0.5, d1, d2);
      EXPECT_NEAR(pre_modified_at(kH6, 0.5, 0.5, d1, d2), 100.0 * rmse_mmse(kH6) / mse, 1e-10 / mse);
    }
}

TEST(Truncated, PointGuessAtTruthIsExact) {
  // β₁ = β₂ = β: every branch returns β.
  EXPECT_NEAR(mse_modified_at(kH6, 0.5, 1.0, 1.0, 1.0), 0.0, 1e-14);
  EXPECT_NEAR(bias_modified_at(kH6, 0.5, 1.0, 1.0, 1.0), 0.0, 1e-14);
}

TEST(Truncated, Errors) {
  EXPECT_THROW(bias_modified(kH6, -1.0, 0.25, 1.2, 0.8), DomainError);
  EXPECT_THROW(mse_modified(kH6, -1.0, 0.25, 0.0, 0.8), DomainError);
  EXPECT_THROW(mse_modified(4.0, -1.0, 0.25, 0.8, 1.2), DomainError);
  EXPECT_THROW(mse_modified(kH6, 0.0, 0.25, 0.8, 1.2), DomainError);
}

TEST(Reports, Adapters) {
  const auto u = risk_report_unbiased(kH6);
  EXPECT_EQ(u.estimator_id, EstimatorId::Unbiased);
  EXPECT_NEAR(u.pre_vs_mmse, 100.0 * 6.8519 / 8.8519, 1e-10);
  const auto m = risk_report_mmse(kH6);
  EXPECT_EQ(m.pre_vs_mmse, 100.0);
  EXPECT_EQ(m.arb, std::fabs(m.bias_over_beta));

  const auto s = risk_report_shrink(kH6, ShrinkageConfig(-2.0, 0.25), GuessInterval(0.1, 0.2), 1.0);
  EXPECT_NEAR(s.pre_vs_mmse, pre_shrink(kH6, -2.0, 0.25, 0.15), 1e-10);
  EXPECT_EQ(s.arb, std::fabs(s.bias_over_beta));
  // Scale-free: (β₁, β₂, β) → c·(β₁, β₂, β) gives the same report.
  const auto s3 = risk_report_shrink(kH6, ShrinkageConfig(-2.0, 0.25), GuessInterval(0.3, 0.6), 3.0);
  EXPECT_NEAR(s3.rmse, s.rmse, 1e-14);

  const auto t = risk_report_modified(kH6, ShrinkageConfig(-1.0, 0.25), GuessInterval(1.6, 2.4), 2.0);
  EXPECT_EQ(t.estimator_id, EstimatorId::ShrinkPQModified);
  EXPECT_NEAR(t.rmse, 0.041122780155691, 1e-12);
  EXPECT_EQ(to_string(RangeKind::Best), "BEST");
}
