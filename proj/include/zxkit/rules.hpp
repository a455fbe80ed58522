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
#include "zxkit/tensor.hpp"

namespace zxkit {

enum class RuleId {
  S1, S2, S3, B1, B2, B3,
  T1, T2, T3, T4,
  A1, A2, A3,
  EQ3, EQ4,
  P1, P2, P3, P4, P5, P6, P7, P8,
  L1, L2, L3, L4,
  LEM5, LEM6,
};

std::string_view rule_name(RuleId id);
std::optional<RuleId> rule_from_name(std::string_view name);
/// Every rule, in catalog order.
const std::vector<RuleId>& all_rules();

/**
 * Parameter signature of a rule.
 *
 * `angles` holds `generic_angles` free angles first, then `kappa_angles`
 * angles restricted to {0, pi}; `optional_kappa` rules accept one extra
 * trailing kappa. `arities[i] >= arity_min[i]`.
 */
struct RuleSignature {
  int generic_angles = 0;
  int kappa_angles = 0;
  bool optional_kappa = false;
  std::vector<int> arity_min;
  /// Holds with red and green exchanged.
  bool color_swappable = false;
};

struct CatalogEntry {
  RuleId id;
  /// Where the rule comes from, by family.
  std::string family;
  /// The equation as implemented, LHS = RHS.
  std::string statement;
  RuleSignature signature;
  std::string note;
};

const std::vector<CatalogEntry>& rule_catalog();
const CatalogEntry& catalog_entry(RuleId id);
/// Markdown table of the catalog.
std::string catalog_markdown();

struct RuleParams {
  std::vector<PhaseAngle> angles;
  std::vector<int> arities;
  bool color_swap = false;
};

struct RuleInstance {
  RuleId id;
  RuleParams params;
  Diagram lhs;
  Diagram rhs;
};

/// A representative instance of each rule.
RuleParams default_params(RuleId id);

/// Builds both sides. Throws std::invalid_argument when `params` does not
/// fit the rule's signature (wrong counts, kappa outside {0, pi}, arity below
/// its minimum, color swap on a rule that does not admit it).
RuleInstance instantiate_rule(RuleId id, const RuleParams& params);
inline RuleInstance instantiate_rule(RuleId id) {
  return instantiate_rule(id, default_params(id));
}

/// Evaluates both sides and compares them up to scalar. Propagates
/// ResourceLimitError.
ScalarMatch validate_rule(const RuleInstance& instance,
                          double tol = kDefaultTolerance,
                          const EvalOptions& eval = {});

/// Negative control: adds `delta` to the phase of the first spider on the
/// RHS, or puts Z(delta) X(delta) on the first boundary wire when the RHS has
/// no spider.
RuleInstance perturb_rhs(const RuleInstance& instance, PhaseAngle delta);

struct ValidationRecord {
  RuleId id;
  RuleParams params;
  ScalarMatch match;
  double elapsed_ms = 0.0;
  /// Set when evaluation threw; the record then counts as a failure.
  std::string error;

  bool passed() const { return error.empty() && match.equal; }
};

struct ValidationReport {
  std::vector<ValidationRecord> records;

  std::size_t passed() const;
  std::size_t failed() const { return records.size() - passed(); }
  bool all_passed() const { return failed() == 0; }
};

struct CorpusOptions {
  int samples = 20;
  std::uint64_t seed = 0;
  int max_arity = 4;
  double tolerance = kDefaultTolerance;
  /// Restricts the run to these rules; empty means all.
  std::vector<RuleId> only;
  EvalOptions eval;
};

/**
 * Validates `samples` random instantiations of every variant of every rule:
 * both colorings of the color-swappable rules, both kappa values, and the
 * plugged forms of EQ3. Angles are random multiples of pi with denominator
 * at most 16. Single-arity rules cycle their arity through min..max_arity;
 * multi-arity rules draw arities uniformly, redrawing when the instance
 * would exceed the wire budget. Deterministic for a given seed.
 * Throws std::invalid_argument when samples < 1.
 */
ValidationReport validate_corpus(const CorpusOptions& opts);

nlohmann::json params_to_json(const RuleParams& p);
/// Timings are left out unless `timings` is set, so reports are
/// reproducible byte for byte.
nlohmann::json report_to_json(const ValidationReport& report, bool timings = false);

}  // namespace zxkit
