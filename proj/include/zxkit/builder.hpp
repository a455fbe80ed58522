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
#include <vector>

#include "zxkit/diagram.hpp"

namespace zxkit {

/// A dangling leg: connecting to it adds an edge at this endpoint. Spider
/// legs can be reused, every use adds another edge to the same spider.
using Leg = Endpoint;

/**
 * Wire-level construction of diagrams out of classical gadgets.
 *
 * Quantum wires are tracked as legs; `tap` puts a Z spider on a wire and
 * hands back the same spider as a classical signal, which is how COPY,
 * XOR and AND boxes read Z-basis values off a wire.
 */
class DiagramBuilder {
 public:
  Leg input();
  void output(Leg leg);

  /// New spider joined to every leg in `legs`.
  Leg z(PhaseAngle phase, const std::vector<Leg>& legs = {});
  Leg x(PhaseAngle phase, const std::vector<Leg>& legs = {});
  /// Triangle pointing down (in at top); returns its out leg.
  Leg triangle(Leg in);
  /// Inverse triangle: Z(pi), triangle, Z(pi).
  Leg triangle_inverse(Leg in);

  /// Z spider on the wire; the result is both the continuation of the wire
  /// and a signal carrying its Z-basis value.
  Leg tap(Leg wire) { return z({}, {wire}); }

  /// XOR of signals (X spider). With no inputs this is |0>.
  Leg xor_of(const std::vector<Leg>& signals) { return x({}, signals); }

  /// n-ary AND of signals: triangles into a Z(pi) hub, then an inverse
  /// triangle tail. With no inputs this is |1>.
  Leg and_of(const std::vector<Leg>& signals);

  /// Terminates a signal with the effect <0| + e^{i phase}<1|.
  void phase_effect(Leg signal, PhaseAngle phase) { z(phase, {signal}); }

  /// Computational basis state |kappa/pi> as an X spider.
  Leg basis_state(PhaseAngle kappa) { return x(kappa); }

  Diagram& diagram() { return d_; }
  Diagram build() const { return d_; }

 private:
  Diagram d_;
};

}  // namespace zxkit
