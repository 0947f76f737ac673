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

#ifndef DPLAB_DETECTOR_H_
#define DPLAB_DETECTOR_H_

#include <iosfwd>
#include <span>
#include <vector>

#include "dplab/gauss_special.h"
#include "dplab/mechanism.h"

namespace dplab {

// Noise locations under "attack undetected" (mu0) and "attack present" (mu1)
// with a shared noise scale. The attack impact is delta_mu = mu1 - mu0 and
// must be non-zero.
class HypothesisPair {
 public:
  HypothesisPair(double mu0, double mu1, NoiseScale sigma_z);
  // mu0 = 0, mu1 = delta_mu.
  static HypothesisPair FromShift(double delta_mu, NoiseScale sigma_z) {
    return HypothesisPair(0.0, delta_mu, sigma_z);
  }

  double mu0() const { return mu0_; }
  double mu1() const { return mu1_; }
  NoiseScale sigma_z() const { return sigma_z_; }
  double delta_mu() const { return mu1_ - mu0_; }

 private:
  double mu0_;
  double mu1_;
  NoiseScale sigma_z_;
};

// A likelihood-ratio test of size alpha. `k` is the likelihood-ratio
// threshold and `k_tilde` the equivalent threshold on z = Y - q(X).
struct DetectorDesign {
  double mu0;
  double mu1;
  NoiseScale sigma_z;
  Probability alpha;
  double log_k;
  double k;
  double k_tilde;
  // mu0 == mu1: the test cannot separate the hypotheses and detects with
  // probability alpha under both.
  bool degenerate = false;

  double delta_mu() const { return mu1 - mu0; }
};

enum class Decision { kNoAttack, kAttackDetected };

// k = exp{(dmu/sigma)(Q^-1(alpha) - dmu/(2 sigma))} for delta_mu > 0.
double ThresholdK(double delta_mu, NoiseScale sigma_z, Probability alpha);
// Same form with Q^-1(1 - alpha), for delta_mu < 0.
double ThresholdKBar(double delta_mu, NoiseScale sigma_z, Probability alpha);

// k_tilde = sigma^2 ln(k) / delta_mu + (mu1 + mu0) / 2.
double DecisionThreshold(double mu0, double mu1, NoiseScale sigma_z, double k);

DetectorDesign MakeDesign(const HypothesisPair& pair, Probability alpha);
DetectorDesign MakeDegenerateDesign(double mu, NoiseScale sigma_z,
                                    Probability alpha);

// For a positive shift the attack is flagged when z > k_tilde; for a negative
// shift when z < k_tilde. z == k_tilde is always kNoAttack.
Decision Decide(double z, const DetectorDesign& design);

// Detection probability 1 - beta at size alpha. Throws DomainError when
// delta_mu == 0.
Probability Power(Probability alpha, double delta_mu, NoiseScale sigma_z);

struct RocPoint {
  Probability alpha;
  Probability beta_bar;
};

// Context recorded with a curve. epsilon/delta/s are informational and may be
// NaN when the curve was not produced from a privacy budget.
struct RocMetadata {
  double delta_mu;
  double sigma_z;
  double epsilon;
  double delta;
  double s;
};

struct RocCurve {
  std::vector<RocPoint> points;
  RocMetadata metadata;
};

// `alphas` must be strictly increasing inside (0, 1).
RocCurve ComputeRocCurve(double delta_mu, NoiseScale sigma_z,
                         std::span<const double> alphas);
RocCurve ComputeRocCurve(double delta_mu, const PrivacyBudget& budget,
                         Sensitivity s, std::span<const double> alphas,
                         CalibrationMode mode = CalibrationMode::kStandard);

// Header: alpha,beta_bar,delta_mu,sigma_z,epsilon,delta,s
void WriteRocCsv(const RocCurve& curve, std::ostream& out);

}  // namespace dplab

#endif  // DPLAB_DETECTOR_H_
