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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zxkit/diagram.hpp"
#include "zxkit/phase_angle.hpp"
#include "zxkit/tensor.hpp"

namespace zxkit {

enum class TermKind {
  /// e^{i angle (x_s1 xor x_s2 xor ...)}
  Gadget,
  /// e^{i angle (x_s1 and x_s2 and ...)}
  AndPhase,
};

struct PhaseTerm {
  TermKind kind = TermKind::Gadget;
  /// 1-based wire indices, sorted, no repeats, nonempty.
  std::vector<int> support;
  PhaseAngle angle;

  bool operator==(const PhaseTerm&) const = default;
};

PhaseTerm gadget_term(std::vector<int> support, PhaseAngle angle);
PhaseTerm and_phase_term(std::vector<int> support, PhaseAngle angle);

struct GadgetCircuit {
  int n = 0;
  std::vector<PhaseTerm> terms;

  /// Throws std::invalid_argument when a support is empty, unsorted,
  /// repeats a wire or leaves 1..n.
  void validate() const;

  bool operator==(const GadgetCircuit&) const = default;
};

/// Orders supports by size, then lexicographically.
bool support_less(const std::vector<int>& a, const std::vector<int>& b);

/**
 * Canonical form of a diagonal unitary over n wires: the phase at basis x is
 * the sum of the coefficients of all subsets T whose wires are all 1 in x.
 * Zero coefficients are never stored.
 */
class MonomialMap {
 public:
  using Terms = std::map<std::vector<int>, PhaseAngle>;

  explicit MonomialMap(int n = 0) : n_(n) {}

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  /// Zero when absent.
  PhaseAngle at(const std::vector<int>& subset) const;

  /// Adds `angle` to the coefficient of `subset` mod 2pi.
  void add(const std::vector<int>& subset, PhaseAngle angle);
  MonomialMap& operator+=(const MonomialMap& other);

  bool operator==(const MonomialMap& other) const;

 private:
  int n_;
  Terms terms_;
};

/// Subsets are limited to 24 wires; larger supports throw ResourceLimitError.
MonomialMap gadget_monomials(const PhaseTerm& term, int n = 0);
MonomialMap and_monomials(const PhaseTerm& term, int n = 0);
MonomialMap term_monomials(const PhaseTerm& term, int n = 0);
MonomialMap circuit_monomials(const GadgetCircuit& c);

/**
 * One AND-phase term per nonempty T of `support` at beta*(-2)^(|T|-1), zero
 * angles dropped, ordered by support_less. Throws std::invalid_argument on
 * an empty support.
 */
std::vector<PhaseTerm> decompose_parity_to_and(const std::vector<int>& support,
                                               PhaseAngle beta);

/// (n-2)(n-3)pi/8 and (3-n)pi/4, normalized.
PhaseAngle pi4_sigma(int n);
PhaseAngle pi4_tau(int n);

/**
 * Rewrites the pi/4 gadget on `support` (at least 3 wires) as n one-wire
 * gadgets at sigma, the C(n,2) two-wire gadgets at tau and the C(n,3)
 * three-wire gadgets at pi/4, in that order. With `drop_zero` off the
 * zero-angle terms are kept. Throws std::invalid_argument when n < 3.
 */
GadgetCircuit decompose_pi4_gadget(const std::vector<int>& support, bool drop_zero = true);

/// Merges terms of equal kind and support, drops zeros, sorts.
GadgetCircuit fuse_gadgets(const GadgetCircuit& c);

/// Terms at odd multiples of pi/4. Throws std::invalid_argument on generic
/// angles.
int t_count(const GadgetCircuit& c);

/// Throws ResourceLimitError when n exceeds `wire_budget`.
Tensor monomials_to_diagonal(const MonomialMap& m, int wire_budget = 12);

/// Gadgets as phase_gadget, AND terms as and_phase, composed in order.
Diagram circuit_to_diagram(const GadgetCircuit& c);

struct OptimizeResult {
  GadgetCircuit circuit;
  int t_before = 0;
  int t_after = 0;
};

/**
 * fuse, then rewrite every gadget on 4 or more wires whose angle is k*pi/4
 * with k odd as k times the pi/4 decomposition, then fuse again. Checks the
 * monomial map before returning and throws std::logic_error on mismatch.
 * Throws std::invalid_argument on generic angles.
 */
OptimizeResult optimize(const GadgetCircuit& c);

/**
 * Text format:
 *
 *   # comment
 *   wires 4
 *   gadget 1/4pi 1 2 3 4
 *   andphase -1/2pi 1 2
 *
 * The header comes before any term. An input with neither header nor terms
 * is the empty circuit on 0 wires. Throws ParseError.
 */
GadgetCircuit parse_gadget_circuit(std::string_view text);
std::string format_gadget_circuit(const GadgetCircuit& c);

/// {"n": N, "terms": [{"subset": [...], "num": p, "den": q}, ...]}; generic
/// coefficients use "rad" instead of num/den.
nlohmann::json monomials_to_json(const MonomialMap& m);
MonomialMap monomials_from_json(const nlohmann::json& j);

}  // namespace zxkit
