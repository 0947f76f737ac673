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

#ifndef DPLAB_CSV_H_
#define DPLAB_CSV_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace dplab {

// Shortest decimal string that round-trips to the same double. Locale
// independent, so CSV output is byte-stable across runs and machines.
std::string FormatReal(double v);

// FNV-1a 64-bit digest, rendered as 16 lowercase hex digits.
std::string Fnv1a64Hex(std::string_view bytes);

}  // namespace dplab

#endif  // DPLAB_CSV_H_
