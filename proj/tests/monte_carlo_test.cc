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

#include "dplab/monte_carlo.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"

namespace dplab {
namespace {

TEST(MonteCarloRatesTest, AgreesWithAnalyticRates) {
  const NoiseScale sz(10.149089929436157);
  const std::uint64_t trials = 1000000;
  for (double dmu : {8.0, -8.0}) {
    const DetectorDesign d =
        MakeDesign(HypothesisPair::FromShift(dmu, sz), Probability(0.05));
    const RateEstimate est = MonteCarloRates(d, trials, RandomStream(1));
    const double beta_bar = Power(Probability(0.05), dmu, sz).value();
    EXPECT_LE(std::fabs(est.alpha_hat() - 0.05), BinomialBand(0.05, trials));
    EXPECT_LE(std::fabs(est.beta_bar_hat() - beta_bar),
              BinomialBand(beta_bar, trials));
  }
}

TEST(MonteCarloRatesTest, DegenerateDesignDetectsAtSize) {
  const DetectorDesign d =
      MakeDegenerateDesign(0.0, NoiseScale(2.0), Probability(0.2));
  const std::uint64_t trials = 200000;
  const RateEstimate est = MonteCarloRates(d, trials, RandomStream(4));
  EXPECT_LE(std::fabs(est.alpha_hat() - est.beta_bar_hat()),
            2.0 * BinomialBand(0.2, trials));
  EXPECT_LE(std::fabs(est.alpha_hat() - 0.2), BinomialBand(0.2, trials));
}

TEST(MonteCarloRatesTest, IndependentOfWorkerCount) {
  const DetectorDesign d = MakeDesign(
      HypothesisPair::FromShift(3.0, NoiseScale(2.0)), Probability(0.1));
  const std::uint64_t trials = 5 * kMonteCarloBlock + 123;
  const RateEstimate one = MonteCarloRates(d, trials, RandomStream(8), 1);
  for (unsigned workers : {2u, 3u, 8u}) {
    const RateEstimate many =
        MonteCarloRates(d, trials, RandomStream(8), workers);
    EXPECT_EQ(one.false_alarms, many.false_alarms);
    EXPECT_EQ(one.detections, many.detections);
  }
  EXPECT_EQ(one.trials, trials);
}

TEST(BinomialBandTest, Formula) {
  EXPECT_DOUBLE_EQ(BinomialBand(0.05, 1000000), 3.0 * std::sqrt(0.0475e-6));
  EXPECT_GT(BinomialBand(0.05, 100), 0.06);
  EXPECT_EQ(BinomialBand(1.0, 100), 0.0);
}

TEST(ValidateAgainstMonteCarloTest, FlagsTamperedPower) {
  const std::vector<ValidationCase> cases = {{1.0, 0.05, 4.0, 8.0, 0.05},
                                             {2.0, 0.1, 4.0, 4.0, 0.1}};
  const auto honest =
      ValidateAgainstMonteCarlo(cases, 200000, RandomStream(2));
  for (const auto& row : honest) EXPECT_TRUE(row.passed);

  const PowerFunction tampered = [](Probability a, double d, NoiseScale s) {
    return Probability(std::min(1.0, Power(a, d, s).value() + 0.02));
  };
  const auto bad = ValidateAgainstMonteCarlo(
      cases, 200000, RandomStream(2), 1, CalibrationMode::kStandard, tampered);
  for (const auto& row : bad) EXPECT_FALSE(row.passed);
}

}  // namespace
}  // namespace dplab
