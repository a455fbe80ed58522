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

#include "zxkit/qbc.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "zxkit/errors.hpp"
#include "zxkit/generators.hpp"
#include "zxkit/tensor.hpp"

namespace zxkit {

namespace {

bool contains(const std::vector<int>& s, int w) { return std::binary_search(s.begin(), s.end(), w); }

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> without(std::vector<int> s, int w) {
  s.erase(std::remove(s.begin(), s.end(), w), s.end());
  return s;
}

std::vector<int> with(std::vector<int> s, int w) {
  if (!contains(s, w)) {
    s.insert(std::upper_bound(s.begin(), s.end(), w), w);
  }
  return s;
}

[[noreturn]] void not_applicable(int rule, const std::string& condition) {
  throw RuleNotApplicable(condition, "rule " + std::to_string(rule) + " does not apply: " + condition);
}

void need(bool ok, int rule, const std::string& condition) {
  if (!ok) not_applicable(rule, condition);
}

bool targeted_before(const QbcCircuit& c, std::size_t position, int wire) {
  for (std::size_t i = 0; i < position && i < c.gates.size(); ++i) {
    if (c.gates[i].target == wire) return true;
  }
  return false;
}

void need_gates(const QbcCircuit& c, std::size_t position, std::size_t count, int rule) {
  need(position + count <= c.gates.size(), rule,
       std::to_string(count) + " gate(s) at position " + std::to_string(position));
}

QbcCircuit replaced(const QbcCircuit& c, std::size_t position, std::size_t count,
                    const std::vector<QbcGate>& with_gates) {
  QbcCircuit out = c;
  auto first = out.gates.begin() + static_cast<std::ptrdiff_t>(position);
  out.gates.erase(first, first + static_cast<std::ptrdiff_t>(count));
  out.gates.insert(out.gates.begin() + static_cast<std::ptrdiff_t>(position), with_gates.begin(),
                   with_gates.end());
  return out;
}

void check_gate_in(const QbcGate& g, int wires) {
  if (g.target < 1 || g.target > wires) {
    throw std::invalid_argument("target " + std::to_string(g.target) + " outside 1.." +
                                std::to_string(wires));
  }
  for (int w : g.controls) {
    if (w < 1 || w > wires) {
      throw std::invalid_argument("control " + std::to_string(w) + " outside 1.." +
                                  std::to_string(wires));
    }
  }
}

}  // namespace

QbcGate make_gate(int target, std::vector<int> controls) {
  std::sort(controls.begin(), controls.end());
  controls.erase(std::unique(controls.begin(), controls.end()), controls.end());
  if (target < 1 || (!controls.empty() && controls.front() < 1)) {
    throw std::invalid_argument("wire indices start at 1");
  }
  if (contains(controls, target)) {
    throw std::invalid_argument("gate target " + std::to_string(target) + " is also a control");
  }
  return {target, std::move(controls)};
}

void QbcCircuit::validate() const {
  if (n_data < 0 || n_anc < 0) throw std::invalid_argument("negative wire count");
  for (const auto& g : gates) {
    check_gate_in(g, wires());
    if (!std::is_sorted(g.controls.begin(), g.controls.end()) ||
        std::adjacent_find(g.controls.begin(), g.controls.end()) != g.controls.end() ||
        contains(g.controls, g.target)) {
      throw std::invalid_argument("malformed gate control set");
    }
  }
}

std::uint32_t apply_gate(std::uint32_t x, const QbcGate& g, int wires) {
  check_gate_in(g, wires);
  auto bit = [wires](int w) { return std::uint32_t{1} << (wires - w); };
  for (int c : g.controls) {
    if (!(x & bit(c))) return x;
  }
  return x ^ bit(g.target);
}

TruthTable truth_table(const QbcCircuit& c) {
  c.validate();
  const int n = c.wires();
  if (n > kMaxTruthTableWires) {
    throw ResourceLimitError(std::to_string(n) + " wires exceed the truth-table limit of " +
                             std::to_string(kMaxTruthTableWires));
  }
  TruthTable t{c.n_data, c.n_anc, {}, {}};
  const std::uint32_t dim = std::uint32_t{1} << n;
  t.full.resize(dim);
  for (std::uint32_t x = 0; x < dim; ++x) {
    std::uint32_t y = x;
    for (const auto& g : c.gates) y = apply_gate(y, g, n);
    t.full[x] = y;
  }
  const std::uint32_t data_dim = std::uint32_t{1} << c.n_data;
  t.restricted.resize(data_dim);
  for (std::uint32_t d = 0; d < data_dim; ++d) t.restricted[d] = t.full[d << c.n_anc];
  return t;
}

Diagram to_zx(const QbcCircuit& c) {
  c.validate();
  Diagram d = identity(c.wires());
  for (const auto& g : c.gates) d = compose_seq(d, cnot_gate(c.wires(), g.target, g.controls));
  return d;
}

Diagram to_zx_restricted(const QbcCircuit& c) {
  std::vector<Diagram> inputs{identity(c.n_data)};
  for (int i = 0; i < c.n_anc; ++i) inputs.push_back(x_spider(0, 1));
  return compose_seq(compose_par(inputs), to_zx(c));
}

QbcCircuit iwama_apply(const QbcCircuit& c, int rule, std::size_t position,
                       const IwamaOptions& options) {
  c.validate();
  const auto& gs = c.gates;
  const bool rev = options.reverse;
  switch (rule) {
    case 1: {
      if (rev) {
        need(options.gate.has_value(), 1, "a gate to insert");
        need(position <= gs.size(), 1, "position within the circuit");
        check_gate_in(*options.gate, c.wires());
        return replaced(c, position, 0, {*options.gate, *options.gate});
      }
      need_gates(c, position, 2, 1);
      need(gs[position] == gs[position + 1], 1, "adjacent gates identical");
      return replaced(c, position, 2, {});
    }
    case 2: {
      need_gates(c, position, 2, 2);
      const auto& a = gs[position];
      const auto& b = gs[position + 1];
      need(!contains(b.controls, a.target), 2, "t1 not in C2");
      need(!contains(a.controls, b.target), 2, "t2 not in C1");
      return replaced(c, position, 2, {b, a});
    }
    case 3: {
      if (!rev) {
        need_gates(c, position, 2, 3);
        const auto& g1 = gs[position];
        const auto& g2 = gs[position + 1];
        need(!contains(g2.controls, g1.target), 3, "t1 not in C2");
        need(contains(g1.controls, g2.target), 3, "t2 in C1");
        QbcGate extra{g1.target, without(set_union(g1.controls, g2.controls), g2.target)};
        return replaced(c, position, 2, {g2, g1, extra});
      }
      need_gates(c, position, 3, 3);
      const auto& g2 = gs[position];
      const auto& g1 = gs[position + 1];
      const auto& extra = gs[position + 2];
      need(!contains(g2.controls, g1.target), 3, "t1 not in C2");
      need(contains(g1.controls, g2.target), 3, "t2 in C1");
      need(extra == QbcGate{g1.target, without(set_union(g1.controls, g2.controls), g2.target)},
           3, "third gate is [t1, C1+C2-t2]");
      return replaced(c, position, 3, {g1, g2});
    }
    case 4: {
      if (!rev) {
        need_gates(c, position, 2, 4);
        const auto& g1 = gs[position];
        const auto& g2 = gs[position + 1];
        need(contains(g2.controls, g1.target), 4, "t1 in C2");
        need(!contains(g1.controls, g2.target), 4, "t2 not in C1");
        QbcGate extra{g2.target, without(set_union(g1.controls, g2.controls), g1.target)};
        return replaced(c, position, 2, {extra, g2, g1});
      }
      need_gates(c, position, 3, 4);
      const auto& extra = gs[position];
      const auto& g2 = gs[position + 1];
      const auto& g1 = gs[position + 2];
      need(contains(g2.controls, g1.target), 4, "t1 in C2");
      need(!contains(g1.controls, g2.target), 4, "t2 not in C1");
      need(extra == QbcGate{g2.target, without(set_union(g1.controls, g2.controls), g1.target)},
           4, "first gate is [t2, C1+C2-t1]");
      return replaced(c, position, 3, {g1, g2});
    }
    case 5: {
      need_gates(c, position, 2, 5);
      const auto& g1 = gs[position];
      const auto& g2 = gs[position + 1];
      need(g1.controls.size() == 1, 5, "first gate has a single control");
      const int t1 = g1.target;
      const int c1 = g1.controls.front();
      const int t2 = g2.target;
      need(c.is_ancilla(t1), 5, "t1 is an ancilla");
      need(!targeted_before(c, position, t1), 5, "no CNOT_t1 before [t1, {c1}]");
      need(t1 != t2, 5, "t1 != t2");
      const int from = rev ? t1 : c1;
      const int to = rev ? c1 : t1;
      need(contains(g2.controls, from), 5,
           rev ? "t1 in the second gate's controls" : "c1 in the second gate's controls");
      need(to != t2, 5, "c1 != t2");
      QbcGate rewritten{t2, with(without(g2.controls, from), to)};
      return replaced(c, position, 2, {g1, rewritten});
    }
    case 6: {
      auto has_free_ancilla = [&](const QbcGate& g) {
        return std::any_of(g.controls.begin(), g.controls.end(), [&](int i) {
          return c.is_ancilla(i) && !targeted_before(c, position, i);
        });
      };
      if (rev) {
        need(options.gate.has_value(), 6, "a gate to insert");
        need(position <= gs.size(), 6, "position within the circuit");
        check_gate_in(*options.gate, c.wires());
        need(has_free_ancilla(*options.gate), 6,
             "some ancilla i in C with no CNOT_i before [t, C]");
        return replaced(c, position, 0, {*options.gate});
      }
      need_gates(c, position, 1, 6);
      need(has_free_ancilla(gs[position]), 6, "some ancilla i in C with no CNOT_i before [t, C]");
      return replaced(c, position, 1, {});
    }
    default:
      throw std::invalid_argument("rule must be 1..6, got " + std::to_string(rule));
  }
}

Equivalence circuits_equivalent(const QbcCircuit& a, const QbcCircuit& b, CompareMode mode) {
  if (a.n_data != b.n_data) {
    throw std::invalid_argument("data wire counts differ: " + std::to_string(a.n_data) + " vs " +
                                std::to_string(b.n_data));
  }
  if (mode == CompareMode::AllBits && a.n_anc != b.n_anc) {
    throw std::invalid_argument("ancilla counts differ: " + std::to_string(a.n_anc) + " vs " +
                                std::to_string(b.n_anc));
  }
  const TruthTable ta = truth_table(a);
  const TruthTable tb = truth_table(b);
  Equivalence e;
  for (std::uint32_t d = 0; d < ta.restricted.size(); ++d) {
    std::uint32_t ya = ta.restricted[d];
    std::uint32_t yb = tb.restricted[d];
    if (mode == CompareMode::DataBits) {
      ya >>= a.n_anc;
      yb >>= b.n_anc;
    }
    if (ya != yb) {
      e.equivalent = false;
      e.witness = d << a.n_anc;
      e.output_a = ya;
      e.output_b = yb;
      break;
    }
  }
  return e;
}

std::string basis_string(std::uint32_t x, int wires) {
  std::string s;
  for (int w = 1; w <= wires; ++w) s += (x >> (wires - w) & 1u) ? '1' : '0';
  return s;
}

std::size_t SoundnessReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const auto& r) { return r.passed(); }));
}

namespace {

struct Sampler {
  std::mt19937_64 rng;
  int n = 0;

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng); }

  // Random subset of 1..n minus `exclude`.
  std::vector<int> subset(const std::vector<int>& exclude, double p = 0.35) {
    std::vector<int> s;
    for (int w = 1; w <= n; ++w) {
      if (std::find(exclude.begin(), exclude.end(), w) == exclude.end() && coin(p)) s.push_back(w);
    }
    return s;
  }

  int wire_except(const std::vector<int>& exclude) {
    std::vector<int> pool;
    for (int w = 1; w <= n; ++w) {
      if (std::find(exclude.begin(), exclude.end(), w) == exclude.end()) pool.push_back(w);
    }
    return pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))];
  }

  QbcGate gate(const std::vector<int>& banned_targets = {}) {
    const int t = wire_except(banned_targets);
    return {t, subset({t})};
  }

  std::vector<QbcGate> gates(int count, const std::vector<int>& banned_targets = {}) {
    std::vector<QbcGate> g;
    for (int i = 0; i < count; ++i) g.push_back(gate(banned_targets));
    return g;
  }
};

// Draws a circuit with the rule's left-hand side at the returned position.
std::pair<QbcCircuit, std::size_t> draw_instance(int rule, Sampler& s, int max_wires) {
  const int min_wires = rule == 5 ? 3 : 2;
  const int n = s.uniform(min_wires, max_wires);
  s.n = n;
  QbcCircuit c;
  const int min_anc = rule >= 5 ? 1 : 0;
  const int max_anc = rule == 5 ? n - 2 : n - 1;
  c.n_anc = s.uniform(min_anc, max_anc);
  c.n_data = n - c.n_anc;
  auto ancilla = [&] { return c.n_data + s.uniform(1, c.n_anc); };

  std::vector<int> protect;  // wires the prefix must not target
  std::vector<QbcGate> core;
  switch (rule) {
    case 1: {
      QbcGate g = s.gate();
      core = {g, g};
      break;
    }
    case 2: {
      const int t1 = s.uniform(1, n);
      const int t2 = s.uniform(1, n);
      core = {{t1, s.subset({t1, t2})}, {t2, s.subset({t1, t2})}};
      break;
    }
    case 3: {
      const int t1 = s.uniform(1, n);
      const int t2 = s.wire_except({t1});
      core = {{t1, with(s.subset({t1, t2}), t2)}, {t2, s.subset({t1, t2})}};
      break;
    }
    case 4: {
      const int t1 = s.uniform(1, n);
      const int t2 = s.wire_except({t1});
      core = {{t1, s.subset({t1, t2})}, {t2, with(s.subset({t1, t2}), t1)}};
      break;
    }
    case 5: {
      const int t1 = ancilla();
      const int c1 = s.wire_except({t1});
      const int t2 = s.wire_except({t1, c1});
      core = {{t1, {c1}}, {t2, with(s.subset({t2, c1}), c1)}};
      protect = {t1};
      break;
    }
    case 6: {
      const int i = ancilla();
      const int t = s.wire_except({i});
      core = {{t, with(s.subset({t, i}), i)}};
      protect = {i};
      break;
    }
  }
  // Keep at least one target available for the prefix.
  if (static_cast<int>(protect.size()) >= n) protect.clear();
  std::vector<QbcGate> prefix = s.gates(s.uniform(0, 3), protect);
  std::vector<QbcGate> suffix = s.gates(s.uniform(0, 2));
  c.gates = prefix;
  c.gates.insert(c.gates.end(), core.begin(), core.end());
  c.gates.insert(c.gates.end(), suffix.begin(), suffix.end());
  return {c, prefix.size()};
}

void corrupt_at(QbcCircuit& c, std::size_t position, Sampler& s) {
  // For rule 3 the gate to damage is the added [t1, C1+C2-t2].
  if (c.gates.empty()) return;
  std::size_t idx = std::min(position, c.gates.size() - 1);
  QbcGate& g = c.gates[idx];
  const int w = s.wire_except({g.target});
  g.controls = contains(g.controls, w) ? without(g.controls, w) : with(g.controls, w);
}

}  // namespace

SoundnessReport check_rule_soundness(int rule, const SoundnessOptions& opts) {
  if (rule < 1 || rule > 6) throw std::invalid_argument("rule must be 1..6");
  if (opts.trials < 1) throw std::invalid_argument("trials must be >= 1");
  const int min_wires = rule == 5 ? 3 : 2;
  if (opts.max_wires < min_wires || opts.max_wires > kMaxTruthTableWires) {
    throw std::invalid_argument("max_wires must be in " + std::to_string(min_wires) + ".." +
                                std::to_string(kMaxTruthTableWires));
  }
  Sampler s{std::mt19937_64(opts.seed ^ (0x9E3779B97F4A7C15ull * static_cast<unsigned>(rule)))};
  SoundnessReport report;
  report.rule = rule;
  for (int trial = 0; trial < opts.trials; ++trial) {
    SoundnessRecord rec;
    rec.trial = trial;
    auto [before, pos] = draw_instance(rule, s, opts.max_wires);
    rec.before = before;
    rec.position = pos;
    try {
      QbcCircuit after = iwama_apply(before, rule, pos);
      if (opts.corrupt) corrupt_at(after, rule == 3 ? pos + 2 : pos, s);
      rec.after = after;
      if (rule <= 4) {
        rec.equivalent = truth_table(before).full == truth_table(after).full;
      } else {
        rec.equivalent = circuits_equivalent(before, after).equivalent;
      }
      if (before.wires() <= opts.zx_max_wires) {
        rec.zx_checked = true;
        rec.zx_equal = equal_up_to_scalar(evaluate(to_zx_restricted(before), opts.eval),
                                          evaluate(to_zx_restricted(after), opts.eval))
                           .equal;
      }
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace zxkit
