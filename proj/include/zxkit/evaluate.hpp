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

#include "zxkit/diagram.hpp"
#include "zxkit/tensor.hpp"

namespace zxkit {

inline constexpr std::size_t kDefaultWireBudget = 12;

struct EvalOptions {
  /// Maximum number of open wires (inputs + outputs).
  std::size_t wire_budget = kDefaultWireBudget;
  /// Maximum number of indices held by any intermediate tensor.
  std::size_t max_intermediate_rank = 24;
};

/**
 * Contracts the diagram into its dense tensor.
 *
 * Every edge is a binary index. Internal indices are summed out one at a
 * time, always choosing the index whose elimination produces the smallest
 * intermediate tensor. Throws ResourceLimitError when the open-wire count
 * exceeds the budget or an intermediate would exceed the rank cap, and
 * std::invalid_argument for malformed diagrams.
 */
Tensor evaluate(const Diagram& d, const EvalOptions& opts = {});

}  // namespace zxkit
