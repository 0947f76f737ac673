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

#ifndef DPLAB_ERRORS_H_
#define DPLAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dplab {

// Raised when an argument violates an operation's precondition. The message
// has the form "<field>: <constraint>" so callers can surface it verbatim.
class DomainError : public std::domain_error {
 public:
  DomainError(const std::string& field, const std::string& constraint)
      : std::domain_error(field + ": " + constraint),
        field_(field),
        constraint_(constraint) {}

  const std::string& field() const { return field_; }
  const std::string& constraint() const { return constraint_; }

 private:
  std::string field_;
  std::string constraint_;
};

}  // namespace dplab

#endif  // DPLAB_ERRORS_H_
