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

#include "dplab/dp_metrics.h"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "dplab/csv.h"
#include "dplab/errors.h"

namespace dplab {
namespace {

constexpr double kGoldenSectionTolerance = 1e-10;
constexpr double kInvPhi = 0.6180339887498948482045868343656381177;

}  // namespace

GaussianModel::GaussianModel(double mu, double sigma) : mu_(mu), sigma_(sigma) {
  if (!std::isfinite(mu)) throw DomainError("mu", "must be finite");
  if (!(std::isfinite(sigma) && sigma > 0.0)) {
    throw DomainError("sigma", "must be finite and > 0");
  }
}

PriorWeight::PriorWeight(double a) : a_(a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw DomainError("a", "must lie in the open interval (0, 1)");
  }
}

double KlGaussians(const GaussianModel& f0, const GaussianModel& f1) {
  const double d = f1.mu() - f0.mu();
  // ln(s1/s0) + v0/(2 v1) - 1/2 rearranged as (r - ln(1 + r)) / 2 with
  // r = (v0 - v1) / v1, which is exactly 0 for equal variances.
  const double r = (f0.variance() - f1.variance()) / f1.variance();
  const double kl = 0.5 * (r - std::log1p(r)) + 0.5 * d * d / f1.variance();
  return std::max(0.0, kl);
}

double RenyiGaussians(const GaussianModel& f0, const GaussianModel& f1,
                      PriorWeight prior) {
  const double a = prior.a();
  const double mixed = a * f1.variance() + prior.b() * f0.variance();
  const double d = f0.mu() - f1.mu();
  const double renyi = std::log(f1.sigma() / f0.sigma()) +
                       std::log(f1.variance() / mixed) / (2.0 * (a - 1.0)) +
                       0.5 * a * d * d / mixed;
  return std::max(0.0, renyi);
}

double ChernoffGaussians(const GaussianModel& f0, const GaussianModel& f1,
                         PriorWeight prior) {
  return prior.b() * RenyiGaussians(f0, f1, prior);
}

ChernoffInformation MaxChernoff(const GaussianModel& f0,
                                const GaussianModel& f1) {
  if (f0 == f1) return {0.0, std::nullopt};
  auto objective = [&](double a) {
    return ChernoffGaussians(f0, f1, PriorWeight(a));
  };
  double lo = 0.0;
  double hi = 1.0;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1v = objective(x1);
  double f2v = objective(x2);
  while (hi - lo > kGoldenSectionTolerance) {
    if (f1v < f2v) {
      lo = x1;
      x1 = x2;
      f1v = f2v;
      x2 = lo + kInvPhi * (hi - lo);
      f2v = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2v = f1v;
      x1 = hi - kInvPhi * (hi - lo);
      f1v = objective(x1);
    }
  }
  const double a_star = 0.5 * (lo + hi);
  return {std::max({objective(a_star), f1v, f2v}), a_star};
}

bool Complies(double metric_value, double epsilon) {
  return metric_value <= std::exp(epsilon);
}

DivergenceReport CompareDivergences(const GaussianModel& f0,
                                    const GaussianModel& f1, PriorWeight prior,
                                    double epsilon) {
  DivergenceReport r{};
  r.kl = KlGaussians(f0, f1);
  r.renyi_a = RenyiGaussians(f0, f1, prior);
  r.chernoff_a = ChernoffGaussians(f0, f1, prior);
  const ChernoffInformation opt = MaxChernoff(f0, f1);
  r.chernoff_opt = opt.value;
  r.a_star = opt.a_star;
  r.budget_bound = std::exp(epsilon);
  r.kl_complies = Complies(r.kl, epsilon);
  r.chernoff_complies = Complies(r.chernoff_a, epsilon);
  return r;
}

std::vector<SweepRow> MetricSweep(Sensitivity s, const DeltaRule& delta_rule,
                                  std::span<const double> epsilons,
                                  std::span<const double> multipliers,
                                  CalibrationMode mode) {
  if (epsilons.empty()) throw DomainError("eps", "grid must be nonempty");
  if (multipliers.empty()) {
    throw DomainError("multipliers", "grid must be nonempty");
  }
  std::vector<SweepRow> rows;
  rows.reserve(epsilons.size() * multipliers.size());
  const PriorWeight half(0.5);
  for (double eps : epsilons) {
    const PrivacyBudget budget(eps, delta_rule(eps));
    const NoiseScale sigma_z = CalibrateNoise(budget, s, mode);
    const GaussianModel f0(0.0, sigma_z.value());
    for (double m : multipliers) {
      const double delta_mu = m * s.value();
      const GaussianModel f1(delta_mu, sigma_z.value());
      SweepRow row{};
      row.epsilon = eps;
      row.delta = budget.delta();
      row.delta_mu = delta_mu;
      row.kl = KlGaussians(f0, f1);
      row.chernoff_half = ChernoffGaussians(f0, f1, half);
      row.bound_exp_eps = std::exp(eps);
      row.kl_complies = Complies(row.kl, eps);
      row.chernoff_complies = Complies(row.chernoff_half, eps);
      rows.push_back(row);
    }
  }
  return rows;
}

void WriteSweepCsv(std::span<const SweepRow> rows, std::ostream& out) {
  out << "epsilon,delta,delta_mu,kl,chernoff_half,bound_exp_eps,kl_complies,"
         "chernoff_complies\n";
  for (const SweepRow& r : rows) {
    out << FormatReal(r.epsilon) << ',' << FormatReal(r.delta) << ','
        << FormatReal(r.delta_mu) << ',' << FormatReal(r.kl) << ','
        << FormatReal(r.chernoff_half) << ',' << FormatReal(r.bound_exp_eps)
        << ',' << (r.kl_complies ? "true" : "false") << ','
        << (r.chernoff_complies ? "true" : "false") << '\n';
  }
}

}  // namespace dplab
