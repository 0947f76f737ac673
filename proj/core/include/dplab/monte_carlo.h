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

#ifndef DPLAB_MONTE_CARLO_H_
#define DPLAB_MONTE_CARLO_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dplab/detector.h"
#include "dplab/random_stream.h"

namespace dplab {

// Trials are simulated in fixed-size blocks; block b draws H0 samples from
// stream.Split(2b) and H1 samples from stream.Split(2b + 1). Results depend
// only on (design, trials, stream), never on the worker count.
inline constexpr std::uint64_t kMonteCarloBlock = 1 << 16;

struct RateEstimate {
  std::uint64_t trials = 0;
  std::uint64_t false_alarms = 0;  // detections with z ~ N(mu0, sigma_z)
  std::uint64_t detections = 0;    // detections with z ~ N(mu1, sigma_z)

  double alpha_hat() const;
  double beta_bar_hat() const;
};

// `workers` == 0 picks std::thread::hardware_concurrency().
RateEstimate MonteCarloRates(const DetectorDesign& design,
                             std::uint64_t trials, const RandomStream& stream,
                             unsigned workers = 1);

// sigmas * sqrt(p (1 - p) / trials).
double BinomialBand(double p, std::uint64_t trials, double sigmas = 3.0);

struct ValidationCase {
  double epsilon;
  double delta;
  double s;
  double delta_mu;
  double alpha;
};

struct ValidationRow {
  ValidationCase input;
  double sigma_z;
  double beta_bar;  // analytic
  double alpha_hat;
  double beta_bar_hat;
  double alpha_band;
  double beta_band;
  bool passed;
};

using PowerFunction =
    std::function<Probability(Probability, double, NoiseScale)>;

// Compares Monte Carlo rates against the analytic size and power for every
// case, using 3-sigma binomial bands. Case i draws from stream.Split(i).
// `power` defaults to Power; tests substitute a perturbed function to check
// that the harness flags regressions.
std::vector<ValidationRow> ValidateAgainstMonteCarlo(
    std::span<const ValidationCase> cases, std::uint64_t trials,
    const RandomStream& stream, unsigned workers = 1,
    CalibrationMode mode = CalibrationMode::kStandard,
    const PowerFunction& power = Power);

}  // namespace dplab

#endif  // DPLAB_MONTE_CARLO_H_
