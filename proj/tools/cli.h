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

#ifndef DPLAB_TOOLS_CLI_H_
#define DPLAB_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace dplab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAcceptanceFailure = 1;
inline constexpr int kExitValidationFailure = 2;

inline constexpr const char* kVersion = "0.1.0";

// Runs the `dplab` command line. `args` excludes the program name. Reports go
// to `out`, diagnostics (`error: <field>: <constraint>`, warnings) to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dplab::cli

#endif  // DPLAB_TOOLS_CLI_H_
