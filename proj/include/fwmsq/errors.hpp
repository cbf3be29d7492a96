// Copyright 2026 The fwmsq Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fwmsq {

/// Bad input: out-of-domain argument, malformed file, unknown key.
/// The command-line front end maps this to exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed request that no physical configuration can satisfy, e.g. a
/// squeezing target at or below the loss floor. Maps to exit code 2.
class InfeasibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parse failure carrying the 1-based line number of the offending input line
/// (0 when the problem is not tied to a line, e.g. a missing required key).
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ValidationError(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace fwmsq
