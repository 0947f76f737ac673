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

#include "dplab/random_stream.h"

namespace dplab {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer.
std::uint64_t Mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed)
    : seed_(seed), key_(Mix(Mix(seed) + kGolden)) {}

RandomStream RandomStream::Split(std::uint64_t index) const {
  return RandomStream(seed_, Mix(key_ ^ Mix(index * kGolden + 0x632be59bd9b4e019ULL)));
}

std::uint64_t RandomStream::NextU64() {
  // Two mixing rounds over (key, counter) keep neighbouring counters and
  // neighbouring keys decorrelated.
  const std::uint64_t c = ++counter_;
  return Mix(Mix(key_ + c * kGolden) ^ key_);
}

double RandomStream::NextUniform() {
  return (static_cast<double>(NextU64() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace dplab
