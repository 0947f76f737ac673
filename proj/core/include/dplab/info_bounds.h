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

#ifndef DPLAB_INFO_BOUNDS_H_
#define DPLAB_INFO_BOUNDS_H_

#include <cstdint>
#include <optional>

#include "dplab/mechanism.h"

namespace dplab {

// Mutual-information bounds between a dataset and its attacked neighbour.
//
// The neighbour adds one Gaussian record X_a of variance sigma2_xa to the
// aggregate. Two expansions of I(X^n; X~^n) are compared:
//
//   first:  1/2 ln(1 + S / sigma2_xa)
//   second: 1/2 ln((2 pi e)^(n-1) S / s^2)
//
// with S = sum of the record variances. Requiring first >= second gives a
// lower bound on the sensitivity and, inverted, a ceiling on sigma2_xa. The
// (2 pi e)^(n-1) factor overflows a double near n = 400, so everything is
// evaluated in the log domain and exponentiated only on request.

// ln(2 pi e).
inline constexpr double kLogTwoPiE = 2.8378770664093454835606594728112353;

class PopulationStats {
 public:
  PopulationStats(std::uint64_t n, double sum_var);
  static PopulationStats FromDataset(const Dataset& data);

  std::uint64_t n() const { return n_; }
  double sum_var() const { return sum_var_; }
  double log_sum_var() const { return log_sum_var_; }

 private:
  std::uint64_t n_;
  double sum_var_;
  double log_sum_var_;
};

// Variance of the injected record, held as its logarithm so that ceilings far
// below the smallest double stay exact.
class AttackVariance {
 public:
  static AttackVariance FromVariance(double sigma2_xa);
  static AttackVariance FromLog(double log_sigma2_xa);

  double log_value() const { return log_value_; }
  // May underflow to 0 or overflow to inf for extreme ceilings.
  double value() const;

 private:
  explicit AttackVariance(double log_value) : log_value_(log_value) {}
  double log_value_;
};

enum class LogContext {
  kMutualInformationNats,
  kSensitivityLower,
  kVarianceCeiling,
};

struct LogQuantity {
  double log_value;
  LogContext context;

  double Exp() const;
};

double MiFirstExpansion(const PopulationStats& stats,
                        const AttackVariance& attack);

// Throws DomainError when s == 0.
double MiSecondExpansion(const PopulationStats& stats, Sensitivity s);

// ln of the smallest sensitivity compatible with an attack of the given
// variance: s_min^2 = (2 pi e)^(n-1) S sigma2_xa / (S + sigma2_xa).
LogQuantity SensitivityLowerBound(const PopulationStats& stats,
                                  const AttackVariance& attack);

// sigma2_xa <= S / (S (2 pi e)^(n-1) / s^2 - 1). Returns nullopt when the
// denominator is <= 0: the constraint then admits any attack variance.
std::optional<AttackVariance> AttackVarianceCeiling(
    const PopulationStats& stats, Sensitivity s);
// Same with s supplied as ln(s^2), for sensitivities outside double range.
std::optional<AttackVariance> AttackVarianceCeilingFromLogS2(
    const PopulationStats& stats, double log_s2);

// s^2 derived from the mechanism's noise scale and budget, then the ceiling.
std::optional<AttackVariance> CeilingFromBudget(
    const PopulationStats& stats, NoiseScale sigma_z,
    const PrivacyBudget& budget,
    CalibrationMode mode = CalibrationMode::kStandard);

}  // namespace dplab

#endif  // DPLAB_INFO_BOUNDS_H_
