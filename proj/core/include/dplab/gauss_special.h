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

#ifndef DPLAB_GAUSS_SPECIAL_H_
#define DPLAB_GAUSS_SPECIAL_H_

#include <cstddef>
#include <span>
#include <vector>

#include "dplab/random_stream.h"

namespace dplab {

// A probability in [0, 1]. Construction rejects NaN and out-of-range values
// with DomainError.
class Probability {
 public:
  explicit Probability(double value);

  double value() const { return value_; }
  Probability Complement() const { return Probability(1.0 - value_); }

  friend auto operator<=>(Probability, Probability) = default;

 private:
  double value_;
};

// (2*pi)^(-1/2) * exp(-x^2 / 2).
double StdNormalPdf(double x);

// Upper tail Pr[Z > x] of the standard normal. Accurate to a few ulps in
// relative terms across the whole range, including the far tails where
// 1 - Phi(x) would cancel.
Probability QFunction(double x);

// Inverse of QFunction on the open interval (0, 1). Throws DomainError for
// p <= 0 or p >= 1.
double QInverse(Probability p);

// Rational approximation of the standard normal quantile Phi^-1(p) (lower
// tail), about 1e-16 relative accuracy for p in (0, 1). No refinement; used
// as the seed for QInverse and directly by the sampler.
double NormalQuantileRational(double p);

// Fills `out` with i.i.d. standard normal variates drawn by inversion of the
// stream's uniforms.
void FillStdNormal(RandomStream& stream, std::span<double> out);
std::vector<double> SampleStdNormal(RandomStream& stream, std::size_t count);

inline double NextStdNormal(RandomStream& stream) {
  return NormalQuantileRational(stream.NextUniform());
}

}  // namespace dplab

#endif  // DPLAB_GAUSS_SPECIAL_H_
