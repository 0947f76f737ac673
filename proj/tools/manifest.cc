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

#include "manifest.h"

#include <ctime>
#include <fstream>
#include <stdexcept>

#include <fmt/chrono.h>
#include <fmt/format.h>

#include "cli.h"
#include "dplab/csv.h"

namespace dplab::cli {

OutputRecord WriteOutput(const std::filesystem::path& path,
                         const std::string& contents) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write " + path.string());
  file << contents;
  file.close();
  return {path.string(), contents.size(), Fnv1a64Hex(contents)};
}

void WriteManifest(const std::filesystem::path& path,
                   const RunManifest& manifest) {
  nlohmann::ordered_json j;
  j["tool"] = "dplab";
  j["version"] = kVersion;
  j["command"] = manifest.command;
  j["seed"] = manifest.seed;
  j["timestamp"] =
      fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(std::time(nullptr)));
  j["config"] = manifest.config;
  nlohmann::ordered_json outputs = nlohmann::ordered_json::array();
  for (const OutputRecord& o : manifest.outputs) {
    outputs.push_back({{"path", o.path}, {"bytes", o.bytes},
                       {"fnv1a64", o.fnv1a64}});
  }
  j["outputs"] = outputs;
  WriteOutput(path, j.dump(2) + "\n");
}

}  // namespace dplab::cli
