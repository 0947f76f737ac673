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

#ifndef DPLAB_RANDOM_STREAM_H_
#define DPLAB_RANDOM_STREAM_H_

#include <cstdint>

namespace dplab {

// Counter-based pseudo-random stream. The i-th output depends only on
// (key, i), so a stream can be split into substreams by index and handed to
// concurrent workers without any shared state. Two streams built from the
// same seed produce identical sequences.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  // Independent child stream addressed by `index`. Splitting does not advance
  // this stream; Split(i) always yields the same child.
  RandomStream Split(std::uint64_t index) const;

  std::uint64_t NextU64();

  // Uniform on the open interval (0, 1) with 53 bits of resolution.
  double NextUniform();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t key() const { return key_; }
  std::uint64_t position() const { return counter_; }

 private:
  RandomStream(std::uint64_t seed, std::uint64_t key)
      : seed_(seed), key_(key) {}

  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace dplab

#endif  // DPLAB_RANDOM_STREAM_H_
