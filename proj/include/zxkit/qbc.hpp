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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zxkit/diagram.hpp"
#include "zxkit/evaluate.hpp"

namespace zxkit {

/// Generalized CNOT: flips `target` iff every wire in `controls` is 1.
/// Wires are 1-based; an empty control set is a plain NOT.
struct QbcGate {
  int target = 1;
  /// Sorted, no repeats, never contains `target`.
  std::vector<int> controls;

  bool operator==(const QbcGate&) const = default;
};

/// Normalizes the control set. Throws std::invalid_argument when the target
/// is among the controls or an index is below 1.
QbcGate make_gate(int target, std::vector<int> controls);

/**
 * Gates apply left to right. Data wires are 1..n_data, ancillae
 * n_data+1..n_data+n_anc and start in |0>. In a basis index wire 1 is the
 * most significant bit, so the ancillae are the low bits.
 */
struct QbcCircuit {
  int n_data = 0;
  int n_anc = 0;
  std::vector<QbcGate> gates;

  int wires() const { return n_data + n_anc; }
  bool is_ancilla(int wire) const { return wire > n_data && wire <= wires(); }
  /// Throws std::invalid_argument on negative counts or out-of-range gates.
  void validate() const;

  bool operator==(const QbcCircuit&) const = default;
};

constexpr int kMaxTruthTableWires = 16;

/// Throws std::invalid_argument when a gate index exceeds `wires`.
std::uint32_t apply_gate(std::uint32_t x, const QbcGate& g, int wires);

struct TruthTable {
  int n_data = 0;
  int n_anc = 0;
  /// Basis-state map over all 2^N inputs.
  std::vector<std::uint32_t> full;
  /// full restricted to inputs whose ancilla bits are 0, indexed by the
  /// data bits.
  std::vector<std::uint32_t> restricted;
};

/// Throws ResourceLimitError when N exceeds kMaxTruthTableWires.
TruthTable truth_table(const QbcCircuit& c);

/// Composition of CNOT diagrams; the identity on N wires when empty.
Diagram to_zx(const QbcCircuit& c);

/// to_zx with |0> plugged into every ancilla input.
Diagram to_zx_restricted(const QbcCircuit& c);

struct IwamaOptions {
  /// Rewrite right-hand side to left-hand side.
  bool reverse = false;
  /// The gate to insert for rules 1 and 6 applied in reverse.
  std::optional<QbcGate> gate;
};

/**
 * Applies transformation rule 1..6 with its left-hand side starting at gate
 * index `position` (0-based). In reverse the right-hand side is matched
 * there instead; for rules 1 and 6 in reverse `options.gate` is inserted at
 * `position`. Throws RuleNotApplicable naming the failed side condition and
 * std::invalid_argument for a bad rule number. The input is never modified.
 *
 *   1  [t,C][t,C] = e
 *   2  [t1,C1][t2,C2] = [t2,C2][t1,C1]             t1 not in C2, t2 not in C1
 *   3  [t1,C1][t2,C2] = [t2,C2][t1,C1][t1,C1+C2-t2]  t1 not in C2, t2 in C1
 *   4  [t1,C1][t2,C2] = [t2,C1+C2-t1][t2,C2][t1,C1]  t1 in C2, t2 not in C1
 *   5  [t1,{c1}][t2,C2+c1] = [t1,{c1}][t2,C2+t1]     t1 an ancilla not targeted
 *                                                    earlier, t1 != t2
 *   6  [t,C] = e      some ancilla i in C is not targeted earlier
 */
QbcCircuit iwama_apply(const QbcCircuit& c, int rule, std::size_t position,
                       const IwamaOptions& options = {});

enum class CompareMode {
  /// All N output bits on ancilla-zero inputs.
  AllBits,
  /// Only the data output bits.
  DataBits,
};

struct Equivalence {
  bool equivalent = true;
  /// First differing ancilla-zero input, as a full basis index.
  std::optional<std::uint32_t> witness;
  std::uint32_t output_a = 0;
  std::uint32_t output_b = 0;
};

/// Throws std::invalid_argument when n_data differs, or in AllBits mode
/// when n_anc differs.
Equivalence circuits_equivalent(const QbcCircuit& a, const QbcCircuit& b,
                                CompareMode mode = CompareMode::AllBits);
/// Basis index as a bit string, wire 1 first.
std::string basis_string(std::uint32_t x, int wires);

struct SoundnessOptions {
  int trials = 200;
  std::uint64_t seed = 0;
  /// Total wire count N is drawn from the rule's minimum up to this.
  int max_wires = 8;
  /// ZX cross-check up to this many wires.
  int zx_max_wires = 6;
  /// Negative control: toggles one control of the rewritten gate sitting at
  /// the rewrite position (for rule 3, the added third gate).
  bool corrupt = false;
  EvalOptions eval;
};

struct SoundnessRecord {
  int trial = 0;
  QbcCircuit before;
  QbcCircuit after;
  std::size_t position = 0;
  bool equivalent = false;
  bool zx_checked = false;
  bool zx_equal = false;
  std::string error;

  bool passed() const { return error.empty() && equivalent && (!zx_checked || zx_equal); }
};

struct SoundnessReport {
  int rule = 0;
  std::vector<SoundnessRecord> records;

  std::size_t passed() const;
  std::size_t failed() const { return records.size() - passed(); }
  bool all_passed() const { return failed() == 0; }
};

/**
 * Draws random circuits with a position where `rule` applies, rewrites, and
 * compares: full truth tables for rules 1-4, ancilla-zero restricted tables
 * for 5 and 6. Up to zx_max_wires the restricted ZX tensors of both sides
 * are also compared up to scalar. Throws std::invalid_argument when
 * trials < 1, the rule is out of range or max_wires is below the rule's
 * minimum (2 for rules 1-4 and 6, 3 for rule 5).
 */
SoundnessReport check_rule_soundness(int rule, const SoundnessOptions& options);

/**
 * Text format:
 *
 *   # comment
 *   qbc data=3 anc=1
 *   cx 3 : 1 2
 *   cx 1 :
 *
 * Throws ParseError.
 */
QbcCircuit parse_qbc(std::string_view text);
std::string format_qbc(const QbcCircuit& c);

nlohmann::json qbc_to_json(const QbcCircuit& c);
nlohmann::json soundness_to_json(const SoundnessReport& r);

}  // namespace zxkit
