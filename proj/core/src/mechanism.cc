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

#include "dplab/mechanism.h"

#include <cmath>
#include <fstream>
#include <numeric>
#include <string>
#include <utility>

#include "dplab/errors.h"
#include "dplab/gauss_special.h"

namespace dplab {
namespace {

bool IsFinite(double v) { return std::isfinite(v); }

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

PrivacyBudget::PrivacyBudget(double epsilon, double delta)
    : epsilon_(epsilon), delta_(delta) {
  if (!(IsFinite(epsilon) && epsilon > 0.0)) {
    throw DomainError("epsilon", "must be finite and > 0");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("delta", "must lie in the open interval (0, 1)");
  }
}

double PrivacyBudget::LogTerm() const { return std::log(1.25 / delta_); }

Sensitivity::Sensitivity(double s) : s_(s) {
  if (!(IsFinite(s) && s >= 0.0)) {
    throw DomainError("s", "must be finite and >= 0");
  }
}

NoiseScale::NoiseScale(double sigma_z) : sigma_z_(sigma_z) {
  if (!(IsFinite(sigma_z) && sigma_z > 0.0)) {
    throw DomainError("sigma_z", "must be finite and > 0");
  }
}

Dataset::Dataset(std::vector<double> records,
                 std::vector<double> record_variances)
    : records_(std::move(records)),
      record_variances_(std::move(record_variances)) {
  if (records_.empty()) throw DomainError("n", "must be >= 1");
  if (records_.size() != record_variances_.size()) {
    throw DomainError("record_variances", "length must match records");
  }
  for (double v : record_variances_) {
    if (!(IsFinite(v) && v > 0.0)) {
      throw DomainError("record_variances", "must be finite and > 0");
    }
  }
}

Dataset Dataset::WithCommonVariance(std::vector<double> records,
                                    double variance) {
  const std::size_t n = records.size();
  return Dataset(std::move(records), std::vector<double>(n, variance));
}

double Dataset::SumOfVariances() const {
  return std::accumulate(record_variances_.begin(), record_variances_.end(),
                         0.0);
}

NoiseScale CalibrateNoise(const PrivacyBudget& budget, Sensitivity s,
                          CalibrationMode mode) {
  if (s.value() == 0.0) {
    throw DomainError("s", "must be > 0 (zero sensitivity needs no noise)");
  }
  const double log_term = budget.LogTerm();
  switch (mode) {
    case CalibrationMode::kStandard:
      return NoiseScale(s.value() * std::sqrt(2.0 * log_term) /
                        budget.epsilon());
    case CalibrationMode::kSquaredLog:
      return NoiseScale(s.value() * log_term / budget.epsilon());
  }
  throw DomainError("calibration_mode", "unknown mode");
}

double SensitivitySquaredFromNoise(NoiseScale sigma_z,
                                   const PrivacyBudget& budget,
                                   CalibrationMode mode) {
  const double log_term = budget.LogTerm();
  const double eps2 = budget.epsilon() * budget.epsilon();
  switch (mode) {
    case CalibrationMode::kStandard:
      return sigma_z.variance() * eps2 / (2.0 * log_term);
    case CalibrationMode::kSquaredLog:
      return sigma_z.variance() * eps2 / (log_term * log_term);
  }
  throw DomainError("calibration_mode", "unknown mode");
}

double AggregateQuery(const Dataset& data) {
  return std::accumulate(data.records().begin(), data.records().end(), 0.0);
}

double Release(const Dataset& data, NoiseScale noise, RandomStream& stream) {
  return AggregateQuery(data) + noise.value() * NextStdNormal(stream);
}

Dataset GenerateDataset(std::size_t n, double sigma2_x, RandomStream& stream) {
  if (n == 0) throw DomainError("n", "must be >= 1");
  if (!(IsFinite(sigma2_x) && sigma2_x > 0.0)) {
    throw DomainError("sigma2_x", "must be finite and > 0");
  }
  std::vector<double> records = SampleStdNormal(stream, n);
  const double scale = std::sqrt(sigma2_x);
  for (double& r : records) r *= scale;
  return Dataset::WithCommonVariance(std::move(records), sigma2_x);
}

Dataset LoadDatasetCsv(const std::filesystem::path& path,
                       double record_variance) {
  std::ifstream in(path);
  if (!in) throw DomainError("data", "cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || Trim(line) != "value") {
    throw DomainError("data", "expected header 'value' in " + path.string());
  }
  std::vector<double> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string cell = Trim(line);
    if (cell.empty()) continue;
    std::size_t consumed = 0;
    double v = 0.0;
    try {
      v = std::stod(cell, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed != cell.size() || !IsFinite(v)) {
      throw DomainError("data", "line " + std::to_string(line_no) +
                                    ": not a finite number: '" + cell + "'");
    }
    records.push_back(v);
  }
  return Dataset::WithCommonVariance(std::move(records), record_variance);
}

}  // namespace dplab
