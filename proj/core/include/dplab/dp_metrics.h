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

#ifndef DPLAB_DP_METRICS_H_
#define DPLAB_DP_METRICS_H_

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "dplab/mechanism.h"

namespace dplab {

// Univariate normal N(mu, sigma^2).
class GaussianModel {
 public:
  GaussianModel(double mu, double sigma);

  double mu() const { return mu_; }
  double sigma() const { return sigma_; }
  double variance() const { return sigma_ * sigma_; }

  friend bool operator==(const GaussianModel&, const GaussianModel&) = default;

 private:
  double mu_;
  double sigma_;
};

// Prior weight a in (0, 1) on the first hypothesis; b = 1 - a.
class PriorWeight {
 public:
  explicit PriorWeight(double a);
  double a() const { return a_; }
  double b() const { return 1.0 - a_; }

 private:
  double a_;
};

// D(f0 || f1) in nats.
double KlGaussians(const GaussianModel& f0, const GaussianModel& f1);

// Renyi divergence of order a:
//   ln(s1/s0) + ln(s1^2 / v_a) / (2(a-1)) + a (mu0-mu1)^2 / (2 v_a)
// with v_a = a s1^2 + (1-a) s0^2.
double RenyiGaussians(const GaussianModel& f0, const GaussianModel& f1,
                      PriorWeight prior);

// Chernoff exponent at weight a, (1 - a) D_a(f0 || f1) = -ln int f0^a f1^b.
// Always >= 0.
double ChernoffGaussians(const GaussianModel& f0, const GaussianModel& f1,
                         PriorWeight prior);

struct ChernoffInformation {
  double value;
  // Unset when f0 == f1: every weight gives 0.
  std::optional<double> a_star;
};

// max over a in (0,1) of ChernoffGaussians, by golden-section search. The
// objective is concave in a.
ChernoffInformation MaxChernoff(const GaussianModel& f0,
                                const GaussianModel& f1);

// metric <= exp(epsilon), boundary inclusive.
bool Complies(double metric_value, double epsilon);

struct DivergenceReport {
  double kl;
  double renyi_a;
  double chernoff_a;
  double chernoff_opt;
  std::optional<double> a_star;
  double budget_bound;  // exp(epsilon)
  bool kl_complies;
  bool chernoff_complies;  // judged on chernoff_a
};

DivergenceReport CompareDivergences(const GaussianModel& f0,
                                    const GaussianModel& f1, PriorWeight prior,
                                    double epsilon);

// Maps epsilon to the delta used when calibrating sweep rows.
using DeltaRule = std::function<double(double epsilon)>;

struct SweepRow {
  double epsilon;
  double delta;
  double delta_mu;
  double kl;
  double chernoff_half;
  double bound_exp_eps;
  bool kl_complies;
  bool chernoff_complies;
};

// For every epsilon and every delta_mu = m * s: sigma_z from CalibrateNoise,
// then KL and Chernoff(1/2) between N(0, sigma_z^2) and N(delta_mu, sigma_z^2).
// Rows are ordered by epsilon, then multiplier.
std::vector<SweepRow> MetricSweep(
    Sensitivity s, const DeltaRule& delta_rule,
    std::span<const double> epsilons, std::span<const double> multipliers,
    CalibrationMode mode = CalibrationMode::kStandard);

// Header: epsilon,delta,delta_mu,kl,chernoff_half,bound_exp_eps,
//         kl_complies,chernoff_complies
void WriteSweepCsv(std::span<const SweepRow> rows, std::ostream& out);

}  // namespace dplab

#endif  // DPLAB_DP_METRICS_H_
