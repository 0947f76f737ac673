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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "dplab/gauss_special.h"

namespace dplab {
namespace {

struct BlockCounts {
  std::uint64_t false_alarms = 0;
  std::uint64_t detections = 0;
};

std::uint64_t CountDetections(const DetectorDesign& design, double location,
                              std::uint64_t count, RandomStream stream) {
  const double sigma = design.sigma_z.value();
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const double z = location + sigma * NextStdNormal(stream);
    hits += Decide(z, design) == Decision::kAttackDetected;
  }
  return hits;
}

BlockCounts RunBlock(const DetectorDesign& design, std::uint64_t block,
                     std::uint64_t count, const RandomStream& stream) {
  return {CountDetections(design, design.mu0, count, stream.Split(2 * block)),
          CountDetections(design, design.mu1, count,
                          stream.Split(2 * block + 1))};
}

}  // namespace

double RateEstimate::alpha_hat() const {
  return trials == 0 ? 0.0 : static_cast<double>(false_alarms) / trials;
}

double RateEstimate::beta_bar_hat() const {
  return trials == 0 ? 0.0 : static_cast<double>(detections) / trials;
}

RateEstimate MonteCarloRates(const DetectorDesign& design,
                             std::uint64_t trials, const RandomStream& stream,
                             unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t blocks = (trials + kMonteCarloBlock - 1) / kMonteCarloBlock;
  auto block_size = [&](std::uint64_t b) {
    return std::min(kMonteCarloBlock, trials - b * kMonteCarloBlock);
  };

  std::vector<BlockCounts> counts(blocks);
  if (workers == 1 || blocks <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) {
      counts[b] = RunBlock(design, b, block_size(b), stream);
    }
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    const unsigned n = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, blocks));
    for (unsigned w = 0; w < n; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t b = next++; b < blocks; b = next++) {
          counts[b] = RunBlock(design, b, block_size(b), stream);
        }
      });
    }
  }

  RateEstimate est;
  est.trials = trials;
  for (const BlockCounts& c : counts) {
    est.false_alarms += c.false_alarms;
    est.detections += c.detections;
  }
  return est;
}

double BinomialBand(double p, std::uint64_t trials, double sigmas) {
  if (trials == 0) return 1.0;
  return sigmas * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

std::vector<ValidationRow> ValidateAgainstMonteCarlo(
    std::span<const ValidationCase> cases, std::uint64_t trials,
    const RandomStream& stream, unsigned workers, CalibrationMode mode,
    const PowerFunction& power) {
  std::vector<ValidationRow> rows;
  rows.reserve(cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const ValidationCase& c = cases[i];
    const PrivacyBudget budget(c.epsilon, c.delta);
    const NoiseScale sigma_z = CalibrateNoise(budget, Sensitivity(c.s), mode);
    const Probability alpha(c.alpha);
    const DetectorDesign design =
        MakeDesign(HypothesisPair::FromShift(c.delta_mu, sigma_z), alpha);
    const double beta_bar = power(alpha, c.delta_mu, sigma_z).value();
    const RateEstimate est =
        MonteCarloRates(design, trials, stream.Split(i), workers);

    ValidationRow row{c,
                      sigma_z.value(),
                      beta_bar,
                      est.alpha_hat(),
                      est.beta_bar_hat(),
                      BinomialBand(c.alpha, trials),
                      BinomialBand(beta_bar, trials),
                      false};
    row.passed = std::fabs(row.alpha_hat - c.alpha) <= row.alpha_band &&
                 std::fabs(row.beta_bar_hat - beta_bar) <= row.beta_band;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dplab
