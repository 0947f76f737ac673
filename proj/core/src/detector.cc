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
#include <limits>
#include <ostream>

#include "dplab/csv.h"
#include "dplab/errors.h"

namespace dplab {
namespace {

void RequireOpen(Probability alpha) {
  if (!(alpha.value() > 0.0 && alpha.value() < 1.0)) {
    throw DomainError("alpha", "must lie in the open interval (0, 1)");
  }
}

// ln k for either sign of the shift; `quantile` is Q^-1(alpha) or
// Q^-1(1 - alpha).
double LogThreshold(double delta_mu, NoiseScale sigma_z, double quantile) {
  const double ratio = delta_mu / sigma_z.value();
  return ratio * (quantile - 0.5 * ratio);
}

}  // namespace

HypothesisPair::HypothesisPair(double mu0, double mu1, NoiseScale sigma_z)
    : mu0_(mu0), mu1_(mu1), sigma_z_(sigma_z) {
  if (!std::isfinite(mu0) || !std::isfinite(mu1)) {
    throw DomainError("mu", "locations must be finite");
  }
  if (mu0 == mu1) {
    throw DomainError("delta_mu", "must be non-zero (mu1 == mu0)");
  }
}

double ThresholdK(double delta_mu, NoiseScale sigma_z, Probability alpha) {
  if (!(delta_mu > 0.0)) {
    throw DomainError("delta_mu", "must be > 0 (use ThresholdKBar)");
  }
  RequireOpen(alpha);
  return std::exp(LogThreshold(delta_mu, sigma_z, QInverse(alpha)));
}

double ThresholdKBar(double delta_mu, NoiseScale sigma_z, Probability alpha) {
  if (!(delta_mu < 0.0)) {
    throw DomainError("delta_mu", "must be < 0 (use ThresholdK)");
  }
  RequireOpen(alpha);
  return std::exp(
      LogThreshold(delta_mu, sigma_z, QInverse(alpha.Complement())));
}

double DecisionThreshold(double mu0, double mu1, NoiseScale sigma_z,
                         double k) {
  const double delta_mu = mu1 - mu0;
  if (delta_mu == 0.0) throw DomainError("delta_mu", "must be non-zero");
  if (!(k > 0.0)) throw DomainError("k", "must be > 0");
  return sigma_z.variance() * std::log(k) / delta_mu + 0.5 * (mu1 + mu0);
}

DetectorDesign MakeDesign(const HypothesisPair& pair, Probability alpha) {
  RequireOpen(alpha);
  const double delta_mu = pair.delta_mu();
  const NoiseScale sigma_z = pair.sigma_z();
  const double quantile =
      delta_mu > 0.0 ? QInverse(alpha) : QInverse(alpha.Complement());
  const double log_k = LogThreshold(delta_mu, sigma_z, quantile);
  // Work from ln k so that very large |delta_mu| / sigma does not overflow k.
  const double k_tilde = sigma_z.variance() * log_k / delta_mu +
                         0.5 * (pair.mu1() + pair.mu0());
  return DetectorDesign{pair.mu0(), pair.mu1(), sigma_z,     alpha,
                        log_k,      std::exp(log_k), k_tilde, false};
}

DetectorDesign MakeDegenerateDesign(double mu, NoiseScale sigma_z,
                                    Probability alpha) {
  RequireOpen(alpha);
  return DetectorDesign{mu,  mu,  sigma_z, alpha,
                        0.0, 1.0, mu + sigma_z.value() * QInverse(alpha),
                        true};
}

Decision Decide(double z, const DetectorDesign& design) {
  const bool detected = design.delta_mu() < 0.0 ? z < design.k_tilde
                                                : z > design.k_tilde;
  return detected ? Decision::kAttackDetected : Decision::kNoAttack;
}

Probability Power(Probability alpha, double delta_mu, NoiseScale sigma_z) {
  RequireOpen(alpha);
  if (delta_mu == 0.0 || !std::isfinite(delta_mu)) {
    throw DomainError("delta_mu",
                      "must be finite and non-zero (power equals alpha)");
  }
  const double ratio = delta_mu / sigma_z.value();
  if (delta_mu > 0.0) return QFunction(QInverse(alpha) - ratio);
  // 1 - Q(x) == Q(-x); the reflected form keeps precision near 1.
  return QFunction(-(QInverse(alpha.Complement()) - ratio));
}

RocCurve ComputeRocCurve(double delta_mu, NoiseScale sigma_z,
                         std::span<const double> alphas) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  RocCurve curve{{}, {delta_mu, sigma_z.value(), nan, nan, nan}};
  curve.points.reserve(alphas.size());
  double previous = 0.0;
  for (double a : alphas) {
    if (!(a > previous && a < 1.0)) {
      throw DomainError("alpha_grid",
                        "must be strictly increasing inside (0, 1)");
    }
    previous = a;
    const Probability alpha(a);
    curve.points.push_back({alpha, Power(alpha, delta_mu, sigma_z)});
  }
  return curve;
}

RocCurve ComputeRocCurve(double delta_mu, const PrivacyBudget& budget,
                         Sensitivity s, std::span<const double> alphas,
                         CalibrationMode mode) {
  RocCurve curve =
      ComputeRocCurve(delta_mu, CalibrateNoise(budget, s, mode), alphas);
  curve.metadata.epsilon = budget.epsilon();
  curve.metadata.delta = budget.delta();
  curve.metadata.s = s.value();
  return curve;
}

void WriteRocCsv(const RocCurve& curve, std::ostream& out) {
  const RocMetadata& m = curve.metadata;
  out << "alpha,beta_bar,delta_mu,sigma_z,epsilon,delta,s\n";
  const std::string suffix = "," + FormatReal(m.delta_mu) + "," +
                             FormatReal(m.sigma_z) + "," +
                             FormatReal(m.epsilon) + "," +
                             FormatReal(m.delta) + "," + FormatReal(m.s) + "\n";
  for (const RocPoint& p : curve.points) {
    out << FormatReal(p.alpha.value()) << ',' << FormatReal(p.beta_bar.value())
        << suffix;
  }
}

}  // namespace dplab
