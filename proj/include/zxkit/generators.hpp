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

#include <optional>
#include <string_view>
#include <vector>

#include "zxkit/diagram.hpp"

namespace zxkit {

enum class Generator {
  ZSpider,
  XSpider,
  Triangle,
  TriangleTransposed,
  Identity,
  Cup,
  Cap,
  Swap,
  Empty,
};

struct GeneratorParams {
  int n_inputs = 0;
  int n_outputs = 0;
  PhaseAngle phase;
};

/**
 * Single-generator diagram. Spiders take their arities and phase from
 * `params`; the other generators ignore it. Cup is 2 -> 0 and cap 0 -> 2.
 * Throws std::invalid_argument for negative arities.
 */
Diagram make_generator(Generator kind, const GeneratorParams& params = {});

// Shorthands.
Diagram z_spider(int n_inputs, int n_outputs, PhaseAngle phase = {});
Diagram x_spider(int n_inputs, int n_outputs, PhaseAngle phase = {});
Diagram triangle();
Diagram triangle_transposed();
Diagram identity(int wires = 1);
Diagram cup();
Diagram cap();
Diagram swap();
Diagram empty_diagram();

/// Permutation of bare wires: input i is joined to output perm[i].
Diagram wire_permutation(const std::vector<int>& perm);

enum class Derived { Copy, Xor, Delete, And, Cnot, PhaseGadget, AndPhase };

/// Wire positions are 1-based. `wires` is the total wire count of the
/// diagonal/CNOT constructors; 0 means "largest index mentioned".
struct DerivedParams {
  int arity = 0;
  int wires = 0;
  int target = 0;
  std::vector<int> controls;
  std::vector<int> support;
  PhaseAngle angle;
};

/**
 * Derived gates as diagrams.
 *
 *  - Copy(arity=m):  1 -> m, |b> to |b...b>
 *  - Xor:            2 -> 1, |ab> to |a xor b>
 *  - Delete:         1 -> 0, the uniform effect
 *  - And(arity=n):   n -> 1, |x> to |x_1 and ... and x_n>; And(0) is |1>
 *  - Cnot:           flips `target` iff every wire in `controls` is 1
 *  - PhaseGadget:    diagonal e^{i angle (xor of support)}
 *  - AndPhase:       diagonal e^{i angle (and of support)}
 *
 * All hold up to a nonzero scalar. Throws std::invalid_argument on negative
 * arities, empty supports, or wire indices out of range.
 */
Diagram make_derived(Derived kind, const DerivedParams& params);

Diagram copy_gate(int m);
Diagram xor_gate();
Diagram delete_gate();
Diagram and_gate(int n);
Diagram cnot_gate(int wires, int target, const std::vector<int>& controls);
Diagram phase_gadget(int wires, const std::vector<int>& support, PhaseAngle angle);
Diagram and_phase(int wires, const std::vector<int>& support, PhaseAngle angle);

}  // namespace zxkit
