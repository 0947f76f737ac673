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

#include "dplab/detector.h"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "dplab/errors.h"
#include "dplab/csv.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace dplab {
namespace {

constexpr double kSigmaZ = 10.149089929436157;  // eps=1, delta=0.05, s=4

// Plug-in values evaluated in 40-digit arithmetic with the bisection Q^-1.
constexpr double kK = 2.680183173745110;
constexpr double kLogK = 0.98588514059947352;
constexpr double kPower = 0.19583144183622260;

TEST(ThresholdKTest, Examples) {
  const NoiseScale sz(kSigmaZ);
  EXPECT_NEAR(ThresholdK(8.0, sz, Probability(0.05)), kK, 1e-13);
  EXPECT_NEAR(std::log(ThresholdK(8.0, sz, Probability(0.05))), kLogK, 1e-14);
  for (double dmu : {0.5, 3.0, 20.0}) {
    EXPECT_NEAR(ThresholdK(dmu, sz, Probability(0.5)),
                std::exp(-dmu * dmu / (2.0 * sz.variance())), 1e-15);
  }
  EXPECT_NEAR(ThresholdK(1e-12, sz, Probability(0.01)), 1.0, 1e-12);
}

TEST(ThresholdKTest, Errors) {
  const NoiseScale sz(1.0);
  EXPECT_THROW(ThresholdK(0.0, sz, Probability(0.05)), DomainError);
  EXPECT_THROW(ThresholdK(-1.0, sz, Probability(0.05)), DomainError);
  EXPECT_THROW(ThresholdK(1.0, sz, Probability(0.0)), DomainError);
  EXPECT_THROW(ThresholdK(1.0, sz, Probability(1.0)), DomainError);
}

TEST(ThresholdKBarTest, Examples) {
  const NoiseScale sz(kSigmaZ);
  EXPECT_NEAR(ThresholdKBar(-8.0, sz, Probability(0.05)), kK, 1e-13);
  EXPECT_NEAR(ThresholdKBar(-4.0, sz, Probability(0.5)),
              std::exp(-16.0 / (2.0 * sz.variance())), 1e-15);
  EXPECT_NEAR(ThresholdKBar(-1e-12, sz, Probability(0.3)), 1.0, 1e-12);
  EXPECT_THROW(ThresholdKBar(0.0, sz, Probability(0.05)), DomainError);
  EXPECT_THROW(ThresholdKBar(2.0, sz, Probability(0.05)), DomainError);
}

TEST(DecisionThresholdTest, Examples) {
  const NoiseScale sz(kSigmaZ);
  // Delta mu / 2 terms cancel: k_tilde = sigma_z Q^-1(alpha).
  const double k = ThresholdK(8.0, sz, Probability(0.05));
  EXPECT_NEAR(DecisionThreshold(0.0, 8.0, sz, k),
              kSigmaZ * oracle::QInverseByBisection(0.05), 1e-10);
  EXPECT_EQ(DecisionThreshold(-3.0, 3.0, sz, 1.0), 0.0);
  const NoiseScale two(2.0);
  EXPECT_NEAR(DecisionThreshold(0.0, 4.0, two, std::exp(1.0)), 1.0 + 2.0,
              1e-15);
  EXPECT_THROW(DecisionThreshold(1.0, 1.0, sz, 2.0), DomainError);
  EXPECT_THROW(DecisionThreshold(0.0, 1.0, sz, 0.0), DomainError);
}

TEST(MakeDesignTest, ThresholdIdentityWithOffsetLocations) {
  const NoiseScale sz(3.0);
  for (double mu0 : {-2.0, 0.0, 5.0}) {
    for (double dmu : {-6.0, -0.5, 0.5, 6.0}) {
      const DetectorDesign d =
          MakeDesign(HypothesisPair(mu0, mu0 + dmu, sz), Probability(0.1));
      const double q = oracle::QInverseByBisection(0.1);
      const double expected = dmu > 0 ? mu0 + 3.0 * q : mu0 - 3.0 * q;
      EXPECT_NEAR(d.k_tilde, expected, 1e-12);
      EXPECT_NEAR(d.k, std::exp(d.log_k), 0.0);
    }
  }
}

TEST(MakeDesignTest, LargeShiftDoesNotOverflow) {
  const DetectorDesign d =
      MakeDesign(HypothesisPair::FromShift(1e4, NoiseScale(1.0)),
                 Probability(0.05));
  EXPECT_TRUE(std::isfinite(d.k_tilde));
  EXPECT_NEAR(d.k_tilde, 1.6448536269514727, 1e-8);
}

TEST(HypothesisPairTest, RejectsZeroShift) {
  EXPECT_THROW(HypothesisPair(1.0, 1.0, NoiseScale(1.0)), DomainError);
}

TEST(DecideTest, BoundaryAndMirroring) {
  const NoiseScale sz(kSigmaZ);
  const DetectorDesign up =
      MakeDesign(HypothesisPair::FromShift(8.0, sz), Probability(0.05));
  EXPECT_EQ(Decide(up.k_tilde, up), Decision::kNoAttack);
  EXPECT_EQ(Decide(up.k_tilde + 1.0, up), Decision::kAttackDetected);
  EXPECT_EQ(Decide(kSigmaZ * 1.6448536269514727 - 0.001, up),
            Decision::kNoAttack);

  const DetectorDesign down =
      MakeDesign(HypothesisPair::FromShift(-8.0, sz), Probability(0.05));
  EXPECT_EQ(Decide(down.k_tilde, down), Decision::kNoAttack);
  EXPECT_EQ(Decide(down.k_tilde - 1.0, down), Decision::kAttackDetected);
  EXPECT_EQ(Decide(down.k_tilde + 1.0, down), Decision::kNoAttack);
}

TEST(PowerTest, Examples) {
  const NoiseScale sz(kSigmaZ);
  EXPECT_NEAR(Power(Probability(0.05), 8.0, sz).value(), kPower, 1e-15);
  // Quadrature oracle of Q at 1.6449 - 0.78825.
  EXPECT_NEAR(oracle::QByQuadrature(1.6448536269514727 - 8.0 / kSigmaZ), kPower,
              1e-13);
  EXPECT_NEAR(Power(Probability(0.05), 1e-10, sz).value(), 0.05, 1e-10);
  EXPECT_NEAR(Power(Probability(0.05), 1e4, sz).value(), 1.0, 1e-15);
  EXPECT_THROW(Power(Probability(0.05), 0.0, sz), DomainError);
}

TEST(PowerTest, SignSymmetry) {
  for (double sigma : {0.5, 2.0, 10.0}) {
    for (double dmu : {0.1, 1.0, 4.0, 16.0}) {
      for (double a : {1e-6, 0.01, 0.2, 0.5, 0.9}) {
        EXPECT_NEAR(Power(Probability(a), -dmu, NoiseScale(sigma)).value(),
                    Power(Probability(a), dmu, NoiseScale(sigma)).value(),
                    1e-12);
      }
    }
  }
}

TEST(PowerTest, AtLeastSizeAndMonotone) {
  const NoiseScale sz(4.0);
  for (double a = 0.01; a < 1.0; a += 0.01) {
    double previous = a;
    for (double dmu = 0.25; dmu < 30.0; dmu *= 1.5) {
      const double p = Power(Probability(a), dmu, sz).value();
      EXPECT_GE(p, previous - 1e-15);
      previous = p;
    }
  }
}

TEST(RocCurveTest, StructureAndCsv) {
  const std::vector<double> alphas = {0.01, 0.1, 0.5, 0.9};
  const RocCurve near_diag = ComputeRocCurve(1e-9, NoiseScale(1.0), alphas);
  for (const RocPoint& p : near_diag.points) {
    EXPECT_NEAR(p.beta_bar.value(), p.alpha.value(), 1e-9);
  }
  const RocCurve wide = ComputeRocCurve(8.0, NoiseScale(4.0), alphas);
  const RocCurve narrow = ComputeRocCurve(4.0, NoiseScale(4.0), alphas);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    EXPECT_GE(wide.points[i].beta_bar.value(), alphas[i]);
    EXPECT_GE(wide.points[i].beta_bar, narrow.points[i].beta_bar);
  }

  const RocCurve c = ComputeRocCurve(8.0, PrivacyBudget(1.0, 0.05),
                                     Sensitivity(4.0), std::vector<double>{0.05});
  std::ostringstream csv;
  WriteRocCsv(c, csv);
  const double beta = c.points[0].beta_bar.value();
  EXPECT_NEAR(beta, 0.1958314418362226, 1e-15 * beta);
  EXPECT_EQ(csv.str(), "alpha,beta_bar,delta_mu,sigma_z,epsilon,delta,s\n0.05," +
                           FormatReal(beta) + ",8,10.149089929436157,1,0.05,4\n");
}

TEST(RocCurveTest, RejectsBadGrid) {
  const NoiseScale sz(1.0);
  EXPECT_THROW(ComputeRocCurve(1.0, sz, std::vector<double>{0.2, 0.1}),
               DomainError);
  EXPECT_THROW(ComputeRocCurve(1.0, sz, std::vector<double>{0.0, 0.1}),
               DomainError);
  EXPECT_THROW(ComputeRocCurve(1.0, sz, std::vector<double>{0.5, 1.0}),
               DomainError);
  EXPECT_THROW(ComputeRocCurve(0.0, sz, std::vector<double>{0.5}), DomainError);
}

}  // namespace
}  // namespace dplab
