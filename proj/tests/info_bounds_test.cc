// Copyright 2026 The dplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dplab/info_bounds.h"

#include <cmath>
#include <numbers>

#include "dplab/errors.h"
#include "gtest/gtest.h"

namespace dplab {
namespace {

constexpr double kHalfLogTwoPiE = 1.4189385332046727;  // 0.5 ln(2 pi e)

TEST(LogTwoPiETest, Constant) {
  EXPECT_NEAR(kLogTwoPiE, std::log(2.0 * std::numbers::pi * std::numbers::e),
              1e-15);
}

TEST(PopulationStatsTest, Validation) {
  EXPECT_THROW(PopulationStats(0, 1.0), DomainError);
  EXPECT_THROW(PopulationStats(1, 0.0), DomainError);
  EXPECT_THROW(AttackVariance::FromVariance(0.0), DomainError);
  const PopulationStats s = PopulationStats::FromDataset(
      Dataset({1.0, 2.0, 3.0}, {0.5, 1.0, 2.5}));
  EXPECT_EQ(s.n(), 3u);
  EXPECT_EQ(s.sum_var(), 4.0);
}

TEST(MiFirstExpansionTest, Examples) {
  EXPECT_NEAR(MiFirstExpansion(PopulationStats(1, 2.0),
                               AttackVariance::FromVariance(2.0)),
              0.5 * std::log(2.0), 1e-16);
  EXPECT_NEAR(MiFirstExpansion(PopulationStats(7, 2.0),
                               AttackVariance::FromVariance(1e300)),
              0.0, 1e-299);
  EXPECT_NEAR(MiFirstExpansion(PopulationStats(1, 3.0),
                               AttackVariance::FromVariance(1.0)),
              std::log(2.0), 2.3e-16);  // 2 ulp
  // Independent of n.
  EXPECT_EQ(MiFirstExpansion(PopulationStats(1, 5.0),
                             AttackVariance::FromVariance(2.0)),
            MiFirstExpansion(PopulationStats(1000, 5.0),
                             AttackVariance::FromVariance(2.0)));
}

TEST(MiSecondExpansionTest, Examples) {
  const Sensitivity s(2.0);
  EXPECT_NEAR(MiSecondExpansion(PopulationStats(1, 4.0), s), 0.0, 1e-16);
  EXPECT_NEAR(MiSecondExpansion(PopulationStats(2, 4.0), s), kHalfLogTwoPiE,
              1e-15);
  EXPECT_NEAR(MiSecondExpansion(PopulationStats(10, 4.0), s),
              9.0 * kHalfLogTwoPiE, 1e-13);
  EXPECT_THROW(MiSecondExpansion(PopulationStats(1, 4.0), Sensitivity(0.0)),
               DomainError);
}

TEST(SensitivityLowerBoundTest, Examples) {
  const LogQuantity a = SensitivityLowerBound(
      PopulationStats(1, 4.0), AttackVariance::FromVariance(4.0));
  EXPECT_NEAR(a.log_value, 0.5 * std::log(2.0), 1e-16);
  EXPECT_EQ(a.context, LogContext::kSensitivityLower);
  EXPECT_NEAR(std::exp(2.0 * SensitivityLowerBound(
                                 PopulationStats(1, 4.0),
                                 AttackVariance::FromVariance(1e12))
                                 .log_value),
              4.0, 1e-10);
  const LogQuantity c = SensitivityLowerBound(
      PopulationStats(2, 4.0), AttackVariance::FromVariance(4.0));
  EXPECT_NEAR(std::exp(2.0 * c.log_value), 2.0 * 2.0 * std::numbers::pi *
                                               std::numbers::e,
              1e-12);
  EXPECT_NEAR(std::exp(2.0 * c.log_value), 34.15893689069427, 1e-12);
}

TEST(AttackVarianceCeilingTest, Examples) {
  const auto ceiling =
      AttackVarianceCeiling(PopulationStats(1, 4.0), Sensitivity(std::sqrt(2.0)));
  ASSERT_TRUE(ceiling.has_value());
  EXPECT_NEAR(ceiling->value(), 4.0, 1e-13);
  EXPECT_FALSE(
      AttackVarianceCeiling(PopulationStats(1, 4.0), Sensitivity(2.0)).has_value());
  EXPECT_FALSE(
      AttackVarianceCeiling(PopulationStats(1, 4.0), Sensitivity(5.0)).has_value());
  EXPECT_THROW(AttackVarianceCeiling(PopulationStats(1, 4.0), Sensitivity(0.0)),
               DomainError);
}

TEST(AttackVarianceCeilingTest, RoundtripAndEqualityCase) {
  for (std::uint64_t n : {1u, 2u, 5u, 50u, 400u}) {
    for (double sum_var : {0.5, 4.0, 100.0}) {
      for (double s : {0.01, 0.3, 1.0, 1.9}) {
        const PopulationStats stats(n, sum_var);
        const auto ceiling = AttackVarianceCeiling(stats, Sensitivity(s));
        if (!ceiling) {
          EXPECT_LE(MiSecondExpansion(stats, Sensitivity(s)), 0.0);
          continue;
        }
        const double log_s = SensitivityLowerBound(stats, *ceiling).log_value;
        EXPECT_NEAR(log_s, std::log(s), 1e-9 * std::max(1.0, std::fabs(std::log(s))));
        EXPECT_NEAR(MiFirstExpansion(stats, *ceiling),
                    MiSecondExpansion(stats, Sensitivity(s)),
                    1e-9 * std::max(1.0, MiSecondExpansion(stats, Sensitivity(s))));
        const AttackVariance below =
            AttackVariance::FromLog(ceiling->log_value() - 0.1);
        EXPECT_GT(MiFirstExpansion(stats, below),
                  MiSecondExpansion(stats, Sensitivity(s)));
      }
    }
  }
}

TEST(AttackVarianceCeilingTest, MonotoneInSensitivityAndDimension) {
  const PopulationStats stats(3, 2.0);
  double previous = 0.0;
  for (double s = 0.05; s < 20.0; s *= 1.2) {
    const auto c = AttackVarianceCeiling(stats, Sensitivity(s));
    if (!c) break;
    EXPECT_GT(c->log_value(), previous == 0.0 ? -1e300 : previous);
    previous = c->log_value();
  }
  double last = 1e300;
  for (std::uint64_t n = 1; n < 200; n += 7) {
    const auto c = AttackVarianceCeiling(PopulationStats(n, 4.0), Sensitivity(1.0));
    ASSERT_TRUE(c.has_value());
    EXPECT_LT(c->log_value(), last);
    last = c->log_value();
  }
}

TEST(AttackVarianceCeilingTest, LargeDimensionStaysInLogDomain) {
  const PopulationStats stats(1000000, 4.0);
  const auto c = AttackVarianceCeiling(stats, Sensitivity(std::sqrt(2.0)));
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(std::isfinite(c->log_value()));
  EXPECT_NEAR(c->log_value(),
              std::log(4.0) - (999999.0 * kLogTwoPiE + std::log(2.0)), 1e-6);
  EXPECT_TRUE(std::isfinite(MiSecondExpansion(stats, Sensitivity(1.0))));
  const double back = SensitivityLowerBound(stats, *c).log_value;
  EXPECT_NEAR(back, 0.5 * std::log(2.0), 1e-8);
}

TEST(CeilingFromBudgetTest, Composition) {
  const PrivacyBudget b(1.0, 0.05);
  const NoiseScale sz = CalibrateNoise(b, Sensitivity(std::sqrt(2.0)));
  const auto c = CeilingFromBudget(PopulationStats(1, 4.0), sz, b);
  ASSERT_TRUE(c.has_value());
  EXPECT_NEAR(c->value(), 4.0, 1e-12);
  EXPECT_THROW(PrivacyBudget(1.0, 1.2), DomainError);
}

TEST(CeilingFromBudgetTest, NondecreasingInEpsilonWhileFeasible) {
  const PopulationStats stats(2, 1.0);
  const NoiseScale sz(1.0);
  double previous = -1e300;
  int feasible = 0;
  for (double eps = 0.05; eps < 10.0; eps += 0.05) {
    const auto c = CeilingFromBudget(stats, sz, PrivacyBudget(eps, 0.01));
    if (!c) break;
    ++feasible;
    EXPECT_GE(c->log_value(), previous);
    previous = c->log_value();
  }
  EXPECT_GT(feasible, 10);
}

}  // namespace
}  // namespace dplab
