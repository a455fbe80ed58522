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

#include <json.hpp>

#include "zxkit/diagram.hpp"
#include "zxkit/tensor.hpp"

namespace zxkit {

/**
 * Diagram JSON:
 *
 *   {"nodes": [{"id": 0, "kind": "B"},
 *              {"id": 1, "kind": "Z", "phase": {"num": 1, "den": 4}},
 *              {"id": 2, "kind": "X", "phase": {"rad": 0.3}}, ...],
 *    "edges": [[0, 1], ...],
 *    "inputs": [0], "outputs": [5]}
 *
 * Kinds are Z, X, TRI, TRI_T and B. A triangle's first listed edge is its
 * in-port, the second its out-port. Throws ParseError on malformed input.
 */
Diagram diagram_from_json(const nlohmann::json& j);
/// Throws std::invalid_argument if triangle ports cannot be ordered (a
/// closed cycle of triangles).
nlohmann::json diagram_to_json(const Diagram& d);

/// {"shape": [...], "n_outputs": m, "n_inputs": n, "entries": [[re, im], ...]}
nlohmann::json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const nlohmann::json& j);

nlohmann::json phase_to_json(const PhaseAngle& a);
PhaseAngle phase_from_json(const nlohmann::json& j);

}  // namespace zxkit
