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

#ifndef DPLAB_TOOLS_MANIFEST_H_
#define DPLAB_TOOLS_MANIFEST_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace dplab::cli {

struct OutputRecord {
  std::string path;
  std::uintmax_t bytes;
  std::string fnv1a64;
};

// Written next to every data file a command produces. Only the manifest
// carries a timestamp; data files themselves are fully determined by the
// config and seed.
struct RunManifest {
  std::string command;
  nlohmann::ordered_json config;
  std::uint64_t seed = 0;
  std::vector<OutputRecord> outputs;
};

// Writes `contents` to `path` (creating parent directories) and returns its
// checksum record.
OutputRecord WriteOutput(const std::filesystem::path& path,
                         const std::string& contents);

void WriteManifest(const std::filesystem::path& path,
                   const RunManifest& manifest);

}  // namespace dplab::cli

#endif  // DPLAB_TOOLS_MANIFEST_H_
