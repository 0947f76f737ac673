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

#include "dplab/gauss_special.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dplab/errors.h"

namespace dplab {
namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343818684759;

// Horner evaluation, coefficients in increasing order of degree.
template <std::size_t N>
double Poly(const double (&c)[N], double x) {
  double acc = c[N - 1];
  for (std::size_t i = N - 1; i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// Wichura, Algorithm AS 241 (PPND16).
constexpr double kCentralNum[] = {
    3.3871328727963666080e0, 1.3314166789178437745e+2,
    1.9715909503065514427e+3, 1.3731693765509461125e+4,
    4.5921953931549871457e+4, 6.7265770927008700853e+4,
    3.3430575583588128105e+4, 2.5090809287301226727e+3};
constexpr double kCentralDen[] = {
    1.0, 4.2313330701600911252e+1,
    6.8718700749205790830e+2, 5.3941960214247511077e+3,
    2.1213794301586595867e+4, 3.9307895800092710610e+4,
    2.8729085735721942674e+4, 5.2264952788528545610e+3};
constexpr double kNearNum[] = {
    1.42343711074968357734e0, 4.63033784615654529590e0,
    5.76949722146069140550e0, 3.64784832476320460504e0,
    1.27045825245236838258e0, 2.41780725177450611770e-1,
    2.27238449892691845833e-2, 7.74545014278341407640e-4};
constexpr double kNearDen[] = {
    1.0, 2.05319162663775882187e0,
    1.67638483018380384940e0, 6.89767334985100004550e-1,
    1.48103976427480074590e-1, 1.51986665636164571966e-2,
    5.47593808499534494600e-4, 1.05075007164441684324e-9};
constexpr double kFarNum[] = {
    6.65790464350110377720e0, 5.46378491116411436990e0,
    1.78482653991729133580e0, 2.96560571828504891230e-1,
    2.65321895265761230930e-2, 1.24266094738807843860e-3,
    2.71155556874348757815e-5, 2.01033439929228813265e-7};
constexpr double kFarDen[] = {
    1.0, 5.99832206555887937690e-1,
    1.36929880922735805310e-1, 1.48753612908506148525e-2,
    7.86869131145613259100e-4, 1.84631831751005468180e-5,
    1.42151175831644588870e-7, 2.04426310338993978564e-15};

}  // namespace

Probability::Probability(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError("probability", "must lie in [0, 1], got " +
                                         std::to_string(value));
  }
}

double StdNormalPdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

Probability QFunction(double x) {
  // erfc amplifies the rounding of x/sqrt(2) by ~2t^2 in the tail; apply the
  // first-order correction for the residual of the split constant.
  constexpr double kInvSqrt2Hi = 0.7071067811865476;
  constexpr double kInvSqrt2Lo = -4.8336466567264565e-17;
  const double t = x * kInvSqrt2Hi;
  const double residual = std::fma(x, kInvSqrt2Hi, -t) + x * kInvSqrt2Lo;
  const double q = 0.5 * std::erfc(t) -
                   residual * std::numbers::inv_sqrtpi * std::exp(-t * t);
  return Probability(std::clamp(q, 0.0, 1.0));
}

double NormalQuantileRational(double p) {
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q * Poly(kCentralNum, r) / Poly(kCentralDen, r);
  }
  double r = std::sqrt(-std::log(q < 0.0 ? p : 1.0 - p));
  double x;
  if (r <= 5.0) {
    r -= 1.6;
    x = Poly(kNearNum, r) / Poly(kNearDen, r);
  } else {
    r -= 5.0;
    x = Poly(kFarNum, r) / Poly(kFarDen, r);
  }
  return q < 0.0 ? -x : x;
}

double QInverse(Probability p) {
  const double v = p.value();
  if (!(v > 0.0 && v < 1.0)) {
    throw DomainError("p", "must lie in the open interval (0, 1)");
  }
  // Reflect so the Newton residual is always taken in the small tail, where
  // QFunction carries full relative precision. 1 - v is exact for v >= 0.5.
  if (v > 0.5) return -QInverse(Probability(1.0 - v));
  double x = -NormalQuantileRational(v);
  for (int step = 0; step < 2; ++step) {
    const double density = StdNormalPdf(x);
    if (density == 0.0) break;
    x += (QFunction(x).value() - v) / density;
  }
  return x;
}

void FillStdNormal(RandomStream& stream, std::span<double> out) {
  for (double& v : out) v = NextStdNormal(stream);
}

std::vector<double> SampleStdNormal(RandomStream& stream, std::size_t count) {
  std::vector<double> out(count);
  FillStdNormal(stream, out);
  return out;
}

}  // namespace dplab
