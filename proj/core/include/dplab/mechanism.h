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

#ifndef DPLAB_MECHANISM_H_
#define DPLAB_MECHANISM_H_

#include <cstddef>
#include <filesystem>
#include <vector>

#include "dplab/random_stream.h"

namespace dplab {

// (epsilon, delta) privacy budget. Requires epsilon > 0 and 0 < delta < 1.
class PrivacyBudget {
 public:
  PrivacyBudget(double epsilon, double delta);

  double epsilon() const { return epsilon_; }
  double delta() const { return delta_; }
  // ln(1.25 / delta), strictly positive for a valid budget.
  double LogTerm() const;

 private:
  double epsilon_;
  double delta_;
};

// L2 global sensitivity of the query, s >= 0.
class Sensitivity {
 public:
  explicit Sensitivity(double s);
  double value() const { return s_; }

 private:
  double s_;
};

// Standard deviation of the additive Gaussian noise, sigma_z > 0.
class NoiseScale {
 public:
  explicit NoiseScale(double sigma_z);
  double value() const { return sigma_z_; }
  double variance() const { return sigma_z_ * sigma_z_; }

 private:
  double sigma_z_;
};

// How sigma_z is derived from (epsilon, delta, s).
enum class CalibrationMode {
  // sigma_z^2 = 2 s^2 ln(1.25/delta) / epsilon^2, the usual Gaussian mechanism.
  kStandard,
  // sigma_z^2 = s^2 ln(1.25/delta)^2 / epsilon^2, the alternative form used
  // when stating the detection threshold.
  kSquaredLog,
};

// Records of a scalar dataset together with the generative variance of each
// record. Immutable once built.
class Dataset {
 public:
  Dataset(std::vector<double> records, std::vector<double> record_variances);
  static Dataset WithCommonVariance(std::vector<double> records,
                                    double variance);

  const std::vector<double>& records() const { return records_; }
  const std::vector<double>& record_variances() const {
    return record_variances_;
  }
  std::size_t size() const { return records_.size(); }
  double SumOfVariances() const;

 private:
  std::vector<double> records_;
  std::vector<double> record_variances_;
};

NoiseScale CalibrateNoise(const PrivacyBudget& budget, Sensitivity s,
                          CalibrationMode mode = CalibrationMode::kStandard);

// Inverse of CalibrateNoise: the squared sensitivity a given noise scale
// covers under `budget`.
double SensitivitySquaredFromNoise(
    NoiseScale sigma_z, const PrivacyBudget& budget,
    CalibrationMode mode = CalibrationMode::kStandard);

// q(X) = sum of records.
double AggregateQuery(const Dataset& data);

// Y = q(X) + sigma_z * Z.
double Release(const Dataset& data, NoiseScale noise, RandomStream& stream);

// n zero-mean Gaussian records of variance sigma2_x.
Dataset GenerateDataset(std::size_t n, double sigma2_x, RandomStream& stream);

// Reads a one-column CSV with header `value`. The generative variance is a
// model parameter and is supplied by the caller.
Dataset LoadDatasetCsv(const std::filesystem::path& path,
                       double record_variance);

}  // namespace dplab

#endif  // DPLAB_MECHANISM_H_
