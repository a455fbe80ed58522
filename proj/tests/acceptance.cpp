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

// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "zxkit/evaluate.hpp"
#include "zxkit/generators.hpp"
#include "zxkit/phase_poly.hpp"
#include "zxkit/qbc.hpp"
#include "zxkit/rules.hpp"

using namespace zxkit;

namespace {

// Pinned limits.
constexpr double kTensorTol = 1e-9;
constexpr double kLimitGenerators = 1.0;
constexpr double kLimitCorpus = 60.0;
constexpr double kLimitParity = 30.0;
constexpr double kLimitPi4 = 10.0;
constexpr double kLimitQbc = 120.0;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

PhaseAngle q(std::int64_t num, std::int64_t den = 1) { return PhaseAngle::exact(num, den); }

std::vector<int> range(int n) {
  std::vector<int> r;
  for (int i = 1; i <= n; ++i) r.push_back(i);
  return r;
}

PhaseAngle random_exact(std::mt19937_64& rng, int max_den = 16) {
  const int den = std::uniform_int_distribution<int>(1, max_den)(rng);
  return q(std::uniform_int_distribution<int>(0, 2 * den - 1)(rng), den);
}

Tensor literal(std::size_t n_out, std::size_t n_in, std::vector<Complex> e) {
  return Tensor(n_out, n_in, std::move(e));
}

// |0..0><0..0| + e^{ia}|1..1><1..1|
Tensor green_closed_form(int n, int m, PhaseAngle a) {
  Tensor t(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  t.at(0, 0) += 1.0;
  t.at(t.rows() - 1, t.cols() - 1) += a.unit();
  return t;
}

// |+..+><+..+| + e^{ia}|-..-><-..-|: entry (1 + e^{ia}(-1)^{|x|}) / sqrt2^(n+m)
Tensor red_closed_form(int n, int m, PhaseAngle a) {
  Tensor t(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  const int k = n + m;
  double norm = std::ldexp(1.0, -(k / 2));
  if (k % 2) norm *= std::numbers::sqrt2 / 2.0;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.cols(); ++c) {
      const int parity = (std::popcount(r) + std::popcount(c)) % 2;
      t.at(r, c) = norm * (1.0 + (parity ? -1.0 : 1.0) * a.unit());
    }
  }
  return t;
}

// ---------------------------------------------------------------------------

void generator_table(Outcome& o) {
  auto exact = [&](const std::string& what, const Diagram& d, const Tensor& want) {
    const Tensor got = evaluate(d);
    if (got.shape() != want.shape() || max_abs_diff(got, want) != 0.0) o.fail(what + " differs");
  };
  exact("triangle", triangle(), literal(1, 1, {1, 1, 0, 1}));
  exact("wire", identity(), literal(1, 1, {1, 0, 0, 1}));
  exact("cup", cup(), literal(0, 2, {1, 0, 0, 1}));
  exact("cap", cap(), literal(2, 0, {1, 0, 0, 1}));
  exact("swap", swap(), literal(2, 2, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1}));
  exact("empty", empty_diagram(), Tensor::scalar(1.0));
  int spiders = 0;
  for (const auto& a : {q(0), q(1, 2), q(1), q(3, 2)}) {
    for (int n = 0; n <= 3; ++n) {
      for (int m = 0; m <= 3; ++m) {
        exact("Z(" + std::to_string(n) + "," + std::to_string(m) + "," + a.to_string() + ")",
              z_spider(n, m, a), green_closed_form(n, m, a));
        exact("X(" + std::to_string(n) + "," + std::to_string(m) + "," + a.to_string() + ")",
              x_spider(n, m, a), red_closed_form(n, m, a));
        spiders += 2;
      }
    }
  }
  o.detail << "8 generators, " << spiders << " spider instances at 0, pi/2, pi, 3pi/2, max diff 0";
}

void rule_corpus(Outcome& o) {
  CorpusOptions opts;
  opts.samples = 20;
  opts.seed = 7;
  opts.max_arity = 4;
  opts.tolerance = kTensorTol;
  const ValidationReport report = validate_corpus(opts);
  std::set<RuleId> rules;
  std::set<RuleId> swapped;
  for (const auto& r : report.records) {
    rules.insert(r.id);
    if (r.params.color_swap) swapped.insert(r.id);
    if (!r.passed()) {
      o.fail(std::string(rule_name(r.id)) + " failed " + params_to_json(r.params).dump() + " " +
             r.error);
    }
  }
  if (rules.size() != all_rules().size()) o.fail("not every rule was validated");
  for (RuleId id : {RuleId::S1, RuleId::S2, RuleId::S3, RuleId::B1, RuleId::B2, RuleId::B3}) {
    if (!swapped.count(id)) o.fail(std::string(rule_name(id)) + " missing its color swap");
  }

  // Negative controls: every rule, default and swapped where allowed, with
  // the RHS knocked off by pi/8 must be rejected.
  int negatives = 0;
  for (const auto& e : rule_catalog()) {
    for (bool sw : {false, true}) {
      if (sw && !e.signature.color_swappable) continue;
      RuleParams p = default_params(e.id);
      p.color_swap = sw;
      const RuleInstance bad = perturb_rhs(instantiate_rule(e.id, p), q(1, 8));
      ++negatives;
      if (validate_rule(bad, kTensorTol).equal) {
        o.fail(std::string("negative control accepted for ") + std::string(rule_name(e.id)));
      }
    }
  }
  o.detail << report.passed() << "/" << report.records.size() << " instances over "
           << rules.size() << " rules; " << negatives << " perturbed controls rejected";
}

void parity_to_and(Outcome& o) {
  std::mt19937_64 rng(2024);
  int checks = 0;
  int tensor_checks = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int i = 0; i < 20; ++i) {
      const PhaseAngle beta = random_exact(rng);
      const PhaseTerm gadget = gadget_term(range(n), beta);
      const auto terms = decompose_parity_to_and(range(n), beta);
      const GadgetCircuit rhs{n, terms};
      const MonomialMap want = test::moebius(n, {gadget});
      if (!(circuit_monomials(rhs) == want) || !(gadget_monomials(gadget, n) == want)) {
        o.fail("monomial map differs at n=" + std::to_string(n) + ", beta=" + beta.to_string());
      }
      PhaseAngle by_size[9];
      for (const auto& t : terms) by_size[t.support.size()] = t.angle;
      if (!(by_size[1] == beta)) o.fail("size-1 angle is not beta");
      for (int k = 1; k < n; ++k) {
        if (!(by_size[k + 1] == by_size[k].scaled(-2))) {
          o.fail("recurrence broken at k=" + std::to_string(k) + ", n=" + std::to_string(n));
        }
      }
      ++checks;
      if (n <= 6) {
        const Tensor lhs = evaluate(phase_gadget(n, range(n), beta));
        const Tensor via_diagram = evaluate(circuit_to_diagram(rhs));
        const Tensor via_map = monomials_to_diagonal(circuit_monomials(rhs));
        if (!equal_up_to_scalar(lhs, via_diagram, kTensorTol).equal ||
            !equal_up_to_scalar(lhs, via_map, kTensorTol).equal) {
          o.fail("tensor mismatch at n=" + std::to_string(n));
        }
        ++tensor_checks;
      }
    }
  }
  o.detail << checks << " exact decompositions (n=2..8), " << tensor_checks
           << " tensor cross-checks (n<=6)";
}

void pi4_decomposition(Outcome& o) {
  for (int n = 3; n <= 8; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    const PhaseAngle sigma = q(static_cast<std::int64_t>(n - 2) * (n - 3), 8);
    const PhaseAngle tau = q(3 - n, 4);
    const GadgetCircuit full = decompose_pi4_gadget(range(n), false);
    const std::size_t expected = static_cast<std::size_t>(n + n * (n - 1) / 2 + n * (n - 1) * (n - 2) / 6);
    if (full.terms.size() != expected) o.fail("term count" + at);
    for (const auto& t : full.terms) {
      const PhaseAngle want = t.support.size() == 1 ? sigma : t.support.size() == 2 ? tau : q(1, 4);
      if (t.kind != TermKind::Gadget || t.support.size() > 3 || !(t.angle == want)) {
        o.fail("unexpected term" + at);
      }
    }
    const PhaseTerm gadget = gadget_term(range(n), q(1, 4));
    const MonomialMap want = test::moebius(n, {gadget});
    const MonomialMap got = circuit_monomials(decompose_pi4_gadget(range(n)));
    if (!(got == want) || !(circuit_monomials(full) == want)) o.fail("monomial map" + at);
    for (const auto& [subset, a] : want.terms()) {
      if (subset.size() >= 4) o.fail("nonzero coefficient on a large subset" + at);
    }
  }
  o.detail << "sigma, tau, term counts and monomial maps exact for n=3..8";
}

void qbc_rules(Outcome& o) {
  std::size_t trials = 0;
  std::size_t zx = 0;
  for (int rule = 1; rule <= 6; ++rule) {
    SoundnessOptions opts;
    opts.trials = 200;
    opts.seed = 17;
    opts.max_wires = 8;
    opts.zx_max_wires = 6;
    const SoundnessReport r = check_rule_soundness(rule, opts);
    std::size_t rule_zx = 0;
    for (const auto& rec : r.records) {
      if (rec.before.wires() > 8) o.fail("circuit above 8 wires");
      if (rec.zx_checked) ++rule_zx;
      if (!rec.passed()) {
        o.fail("rule " + std::to_string(rule) + " trial " + std::to_string(rec.trial) +
               " failed " + rec.error);
      }
    }
    if (rule_zx == 0) o.fail("rule " + std::to_string(rule) + " had no ZX cross-check");
    trials += r.records.size();
    zx += rule_zx;
  }
  SoundnessOptions corrupt;
  corrupt.trials = 50;
  corrupt.seed = 17;
  corrupt.corrupt = true;
  const SoundnessReport bad = check_rule_soundness(3, corrupt);
  if (bad.passed() != 0) o.fail("corrupted rule 3 passed a trial");
  o.detail << trials << " trials, " << zx << " ZX cross-checks, corrupted rule 3 rejected "
           << bad.failed() << "/" << bad.records.size();
}

GadgetCircuit random_gadget_circuit(std::mt19937_64& rng, int max_n, int max_terms) {
  GadgetCircuit c{std::uniform_int_distribution<int>(1, max_n)(rng), {}};
  const int terms = std::uniform_int_distribution<int>(0, max_terms)(rng);
  for (int i = 0; i < terms; ++i) {
    std::vector<int> s;
    while (s.empty()) {
      for (int w = 1; w <= c.n; ++w) {
        if (rng() & 1) s.push_back(w);
      }
    }
    c.terms.push_back({rng() & 1 ? TermKind::Gadget : TermKind::AndPhase, s, random_exact(rng)});
  }
  return c;
}

void cross_oracle(Outcome& o) {
  std::mt19937_64 rng(606);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const GadgetCircuit c = random_gadget_circuit(rng, 6, 8);
    const ScalarMatch m = equal_up_to_scalar(monomials_to_diagonal(circuit_monomials(c)),
                                             evaluate(circuit_to_diagram(c)), kTensorTol);
    worst = std::max(worst, m.residual);
    if (!m.equal) o.fail("circuit " + std::to_string(i) + ":\n" + format_gadget_circuit(c));
  }
  o.detail << "100 circuits, worst residual " << std::scientific << std::setprecision(2) << worst;
}

void optimization(Outcome& o) {
  std::mt19937_64 rng(77);
  auto run = [&](const GadgetCircuit& c) {
    // Through the text format, as the command line does.
    const GadgetCircuit in = parse_gadget_circuit(format_gadget_circuit(c));
    const OptimizeResult r = optimize(in);
    const GadgetCircuit out = parse_gadget_circuit(format_gadget_circuit(r.circuit));
    if (!(circuit_monomials(out) == circuit_monomials(in))) o.fail("monomial map changed");
    return r;
  };
  for (int i = 0; i < 50; ++i) {
    // Odd pi/4 gadgets, each support used by exactly two of them.
    const int n = std::uniform_int_distribution<int>(4, 8)(rng);
    GadgetCircuit c{n, {}};
    const int pairs = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int p = 0; p < pairs; ++p) {
      std::vector<int> s;
      while (s.empty()) {
        for (int w = 1; w <= n; ++w) {
          if (rng() & 1) s.push_back(w);
        }
      }
      for (int k = 0; k < 2; ++k) {
        c.terms.push_back(gadget_term(s, q(2 * std::uniform_int_distribution<int>(0, 3)(rng) + 1, 4)));
      }
    }
    std::shuffle(c.terms.begin(), c.terms.end(), rng);
    const OptimizeResult r = run(c);
    if (r.t_after > r.t_before) o.fail("t-count rose on a paired file");
  }
  for (int i = 0; i < 50; ++i) run(random_gadget_circuit(rng, 8, 8));

  const OptimizeResult single = run({4, {gadget_term(range(4), q(1, 4))}});
  if (single.t_before != 1 || single.t_after != 14) o.fail("single gadget not 1 -> 14");
  const OptimizeResult doubled =
      run({5, {gadget_term(range(5), q(1, 4)), gadget_term(range(5), q(1, 4))}});
  if (doubled.t_before != 2 || doubled.t_after != 0) o.fail("doubled gadget not 2 -> 0");
  o.detail << "50 paired + 50 mixed files preserved; single n=4 " << single.t_before << " -> "
           << single.t_after << ", doubled " << doubled.t_before << " -> " << doubled.t_after;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 = no runtime bound
    std::function<void(Outcome&)> run;
  };
  const Criterion criteria[] = {
      {1, "generator tensors", kLimitGenerators, generator_table},
      {2, "rule corpus soundness", kLimitCorpus, rule_corpus},
      {3, "parity to AND decomposition", kLimitParity, parity_to_and},
      {4, "pi/4 gadget decomposition", kLimitPi4, pi4_decomposition},
      {5, "circuit rule soundness", kLimitQbc, qbc_rules},
      {6, "cross-oracle agreement", 0.0, cross_oracle},
      {7, "optimization soundness", 0.0, optimization},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " ("
              << std::fixed << std::setprecision(3) << secs << " s) " << o.detail.str() << "\n";
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (7 - failed) << "/7\n";
  return failed ? 1 : 0;
}
