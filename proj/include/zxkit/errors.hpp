// Copyright 2026 The zxkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

namespace zxkit {

// Invalid arguments are reported with std::invalid_argument. The types below
// cover the remaining failure classes.

/// Sequential composition of diagrams whose boundaries do not line up.
class CompositionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A computation would exceed a configured size budget (open wires,
/// intermediate tensor rank, truth-table width).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A circuit rewrite was requested where its side conditions do not hold.
class RuleNotApplicable : public std::logic_error {
 public:
  RuleNotApplicable(std::string condition, const std::string& what)
      : std::logic_error(what), condition_(std::move(condition)) {}

  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

/// Malformed text or JSON input. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(
            line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace zxkit
