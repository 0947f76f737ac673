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

#include "dplab/errors.h"

namespace dplab {
namespace {

// ln(1 + e^x) without overflow.
double Log1pExp(double x) {
  if (x > 36.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

// ln(e^x - 1) for x > 0.
double LogExpm1(double x) {
  if (x > 36.0) return x + std::log1p(-std::exp(-x));
  return std::log(std::expm1(x));
}

// ln(S (2 pi e)^(n-1) / s^2), the margin whose sign decides feasibility.
double LogMargin(const PopulationStats& stats, double log_s2) {
  return static_cast<double>(stats.n() - 1) * kLogTwoPiE +
         stats.log_sum_var() - log_s2;
}

}  // namespace

PopulationStats::PopulationStats(std::uint64_t n, double sum_var)
    : n_(n), sum_var_(sum_var) {
  if (n == 0) throw DomainError("n", "must be >= 1");
  if (!(std::isfinite(sum_var) && sum_var > 0.0)) {
    throw DomainError("sum_var", "must be finite and > 0");
  }
  log_sum_var_ = std::log(sum_var);
}

PopulationStats PopulationStats::FromDataset(const Dataset& data) {
  return PopulationStats(data.size(), data.SumOfVariances());
}

AttackVariance AttackVariance::FromVariance(double sigma2_xa) {
  if (!(std::isfinite(sigma2_xa) && sigma2_xa > 0.0)) {
    throw DomainError("sigma2_xa", "must be finite and > 0");
  }
  return AttackVariance(std::log(sigma2_xa));
}

AttackVariance AttackVariance::FromLog(double log_sigma2_xa) {
  if (!std::isfinite(log_sigma2_xa)) {
    throw DomainError("sigma2_xa", "log variance must be finite");
  }
  return AttackVariance(log_sigma2_xa);
}

double AttackVariance::value() const { return std::exp(log_value_); }

double LogQuantity::Exp() const { return std::exp(log_value); }

double MiFirstExpansion(const PopulationStats& stats,
                        const AttackVariance& attack) {
  return 0.5 * Log1pExp(stats.log_sum_var() - attack.log_value());
}

double MiSecondExpansion(const PopulationStats& stats, Sensitivity s) {
  if (s.value() == 0.0) throw DomainError("s", "must be > 0");
  return 0.5 * LogMargin(stats, 2.0 * std::log(s.value()));
}

LogQuantity SensitivityLowerBound(const PopulationStats& stats,
                                  const AttackVariance& attack) {
  // ln(S + a) = ln S + ln(1 + a / S).
  const double log_sum =
      stats.log_sum_var() + Log1pExp(attack.log_value() - stats.log_sum_var());
  const double log_s2 = static_cast<double>(stats.n() - 1) * kLogTwoPiE +
                        stats.log_sum_var() + attack.log_value() - log_sum;
  return {0.5 * log_s2, LogContext::kSensitivityLower};
}

std::optional<AttackVariance> AttackVarianceCeiling(
    const PopulationStats& stats, Sensitivity s) {
  if (s.value() == 0.0) throw DomainError("s", "must be > 0");
  return AttackVarianceCeilingFromLogS2(stats, 2.0 * std::log(s.value()));
}

std::optional<AttackVariance> AttackVarianceCeilingFromLogS2(
    const PopulationStats& stats, double log_s2) {
  if (!std::isfinite(log_s2)) throw DomainError("s", "must be finite and > 0");
  const double margin = LogMargin(stats, log_s2);
  if (!(margin > 0.0)) return std::nullopt;
  return AttackVariance::FromLog(stats.log_sum_var() - LogExpm1(margin));
}

std::optional<AttackVariance> CeilingFromBudget(const PopulationStats& stats,
                                                NoiseScale sigma_z,
                                                const PrivacyBudget& budget,
                                                CalibrationMode mode) {
  const double s2 = SensitivitySquaredFromNoise(sigma_z, budget, mode);
  return AttackVarianceCeilingFromLogS2(stats, std::log(s2));
}

}  // namespace dplab
