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

#include "zxkit/rules.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "zxkit/builder.hpp"
#include "zxkit/generators.hpp"

namespace zxkit {

namespace {

const PhaseAngle kPi = PhaseAngle::exact(1);
const PhaseAngle kZero = PhaseAngle::exact(0);

struct NamedRule {
  RuleId id;
  std::string_view name;
};

constexpr NamedRule kNames[] = {
    {RuleId::S1, "S1"},   {RuleId::S2, "S2"},     {RuleId::S3, "S3"},
    {RuleId::B1, "B1"},   {RuleId::B2, "B2"},     {RuleId::B3, "B3"},
    {RuleId::T1, "T1"},   {RuleId::T2, "T2"},     {RuleId::T3, "T3"},
    {RuleId::T4, "T4"},   {RuleId::A1, "A1"},     {RuleId::A2, "A2"},
    {RuleId::A3, "A3"},   {RuleId::EQ3, "EQ3"},   {RuleId::EQ4, "EQ4"},
    {RuleId::P1, "P1"},   {RuleId::P2, "P2"},     {RuleId::P3, "P3"},
    {RuleId::P4, "P4"},   {RuleId::P5, "P5"},     {RuleId::P6, "P6"},
    {RuleId::P7, "P7"},   {RuleId::P8, "P8"},     {RuleId::L1, "L1"},
    {RuleId::L2, "L2"},   {RuleId::L3, "L3"},     {RuleId::L4, "L4"},
    {RuleId::LEM5, "LEM5"}, {RuleId::LEM6, "LEM6"},
};

RuleSignature sig(int generic, int kappa, std::vector<int> arity_min = {},
                  bool swappable = false, bool optional_kappa = false) {
  RuleSignature s;
  s.generic_angles = generic;
  s.kappa_angles = kappa;
  s.optional_kappa = optional_kappa;
  s.arity_min = std::move(arity_min);
  s.color_swappable = swappable;
  return s;
}

std::vector<CatalogEntry> build_catalog() {
  return {
      {RuleId::S1, "core rules: spider fusion",
       "Z(n1,m1,a) joined by one wire to Z(n2,m2,b) = Z(n1+n2-1, m1+m2-1, a+b)",
       sig(2, 0, {0, 1, 1, 0}, true),
       "arities (n1, m1, n2, m2) count the joining wire on both spiders"},
      {RuleId::S2, "core rules: identity spider", "Z(1,1,0) = wire", sig(0, 0, {}, true), ""},
      {RuleId::S3, "core rules: compact structure", "Z(0,2,0) = cap", sig(0, 0, {}, true), ""},
      {RuleId::B1, "core rules: basis-state copy",
       "X(0,1,k) ; Z(1,2,0) = X(0,1,k) (x) X(0,1,k)", sig(0, 1, {}, true), ""},
      {RuleId::B2, "core rules: bialgebra",
       "X(2,1,0) ; Z(1,2,0) = (Z(1,2,0) (x) Z(1,2,0)) ; (1 (x) swap (x) 1) ; (X(2,1,0) (x) X(2,1,0))",
       sig(0, 0, {}, true), ""},
      {RuleId::B3, "core rules: pi-commutation",
       "X(1,1,k)^(x)n ; Z(n,m,a) = Z(n,m,(-1)^(k/pi) a) ; X(1,1,k)^(x)m",
       sig(1, 1, {0, 0}, true),
       ""},
      {RuleId::T1, "triangle rules", "X(0,1,pi) ; T = Z(0,1,0)", sig(0, 0), "|1> to |+>"},
      {RuleId::T2, "triangle rules", "T ; X(1,0,0) = Z(1,0,0)", sig(0, 0), "<0| to <+|"},
      {RuleId::T3, "triangle rules: inverse", "T ; Z(1,1,pi) ; T ; Z(1,1,pi) = wire", sig(0, 0),
       "the inverse triangle is Z(pi) T Z(pi)"},
      {RuleId::T4, "triangle rules", "X(1,1,pi) ; T ; X(1,1,pi) = T^t", sig(0, 0), ""},
      {RuleId::A1, "AND rules: distributivity", "AND(p xor q, r) = AND(p, r) xor AND(q, r)",
       sig(0, 0), ""},
      {RuleId::A2, "AND rules: idempotence", "COPY ; AND = wire", sig(0, 0), ""},
      {RuleId::A3, "AND rules: AND is a COPY homomorphism",
       "AND ; COPY = (COPY (x) COPY) ; (1 (x) swap (x) 1) ; (AND (x) AND)", sig(0, 0), ""},
      {RuleId::EQ3, "phase gadgets: three-line AND decomposition",
       "gadget({1,2,3}, b) = prod_i Z_i(b) prod_{i<j} ANDphase({i,j}, -2b) ANDphase({1,2,3}, 4b)",
       sig(1, 0, {}, false, true),
       "optional second angle k plugs X(0,1,k) onto the top of line 1"},
      {RuleId::EQ4, "phase gadgets: two-line AND decomposition",
       "gadget({1,2}, b) = Z_1(b) Z_2(b) ANDphase({1,2}, -2b)", sig(1, 0),
       "EQ3 with <0| and |0> plugged onto line 1"},
      {RuleId::P1, "derived propositions: generalized COPY",
       "X(0,1,k) ; Z(1,m,0) = X(0,1,k)^(x)m", sig(0, 1, {1})},
      {RuleId::P2, "derived propositions", "X(0,1,0) ; T = X(0,1,0)", sig(0, 0), "T|0> = |0>"},
      {RuleId::P3, "derived propositions", "T ; X(1,0,pi) = X(1,0,pi)", sig(0, 0), "<1|T = <1|"},
      {RuleId::P4, "derived propositions", "Z(0,1,pi) ; T = X(0,1,pi)", sig(0, 0), "T|-> ~ |1>"},
      {RuleId::P5, "derived propositions", "T ; Z(1,0,pi) = X(1,0,0)", sig(0, 0), "<-|T ~ <0|"},
      {RuleId::P6, "derived propositions: 0-AND", "AND(0) = X(0,1,pi)", sig(0, 0),
       "the empty AND is |1>"},
      {RuleId::P7, "derived propositions: AND absorbs 0",
       "AND(|0>, x1..xn) = |0> (x) DELETE^(x)n", sig(0, 0, {0})},
      {RuleId::P8, "derived propositions: AND and deletion", "AND ; DELETE = DELETE (x) DELETE",
       sig(0, 0), "homomorphism for the unit of COPY"},
      {RuleId::L1, "derived lemmas: n-ary COPY homomorphism",
       "AND(n) ; COPY = COPY^(x)n ; interleave ; AND(n) (x) AND(n)", sig(0, 0, {0}),
       "n = 0 copies |1>, n = 1 is trivial, n = 2 is A3"},
      {RuleId::L2, "derived lemmas: n-ary distributivity",
       "AND(p xor q, r1..rn) = AND(p, r1..rn) xor AND(q, r1..rn)", sig(0, 0, {0}),
       "n = 0 is AND(1) = wire, n = 1 is A1"},
      {RuleId::L3, "derived lemmas: m-output COPY homomorphism",
       "AND ; Z(1,m,0) = (Z(1,m,0) (x) Z(1,m,0)) ; interleave ; AND^(x)m", sig(0, 0, {0}),
       "m = 0 is P8, m = 2 is A3"},
      {RuleId::L4, "derived lemmas: idempotence inside AND",
       "AND(p, p, r1..rk) = AND(p, r1..rk)", sig(0, 0, {0}), "k = 0 is A2"},
      {RuleId::LEM5, "phase-gadget lemmas",
       "ANDphase(p xor q, r; a) = ANDphase(p,r; a) ANDphase(q,r; a) ANDphase(p,q,r; -2a)",
       sig(1, 0), ""},
      {RuleId::LEM6, "phase-gadget lemmas: induction step",
       "ANDphase(p xor q, r1..rk; a) = ANDphase(p,R; a) ANDphase(q,R; a) ANDphase(p,q,R; -2a)",
       sig(1, 0, {1}), "k = 1 coincides with LEM5"},
  };
}

bool is_kappa(const PhaseAngle& a) { return a == kZero || a == kPi; }

void check_params(const CatalogEntry& e, const RuleParams& p) {
  const auto& s = e.signature;
  const std::string name(rule_name(e.id));
  const std::size_t fixed = static_cast<std::size_t>(s.generic_angles + s.kappa_angles);
  if (p.angles.size() != fixed && !(s.optional_kappa && p.angles.size() == fixed + 1)) {
    throw std::invalid_argument(name + " expects " + std::to_string(fixed) +
                                " angle(s), got " + std::to_string(p.angles.size()));
  }
  for (std::size_t i = static_cast<std::size_t>(s.generic_angles); i < p.angles.size(); ++i) {
    if (!is_kappa(p.angles[i])) {
      throw std::invalid_argument(name + ": kappa must be 0 or pi, got " +
                                  p.angles[i].to_string());
    }
  }
  if (p.arities.size() != s.arity_min.size()) {
    throw std::invalid_argument(name + " expects " + std::to_string(s.arity_min.size()) +
                                " arities, got " + std::to_string(p.arities.size()));
  }
  for (std::size_t i = 0; i < p.arities.size(); ++i) {
    if (p.arities[i] < s.arity_min[i]) {
      throw std::invalid_argument(name + ": arity " + std::to_string(i) + " must be >= " +
                                  std::to_string(s.arity_min[i]));
    }
  }
  if (p.color_swap && !s.color_swappable) {
    throw std::invalid_argument(name + " has no color-swapped form");
  }
}

Diagram repeat_par(const Diagram& d, int times) {
  std::vector<Diagram> parts(static_cast<std::size_t>(std::max(times, 0)), d);
  return compose_par(parts);
}

// Copies every one of n inputs twice and feeds two n-ary ANDs.
Diagram and_pair_from_copies(int n, int copies) {
  DiagramBuilder b;
  std::vector<Leg> c;
  for (int i = 0; i < n; ++i) c.push_back(b.z({}, {b.input()}));
  for (int k = 0; k < copies; ++k) b.output(b.and_of(c));
  return b.build();
}

// Diagonal product of AND-phase terms over `wires` wires.
Diagram and_phase_product(int wires,
                          const std::vector<std::pair<std::vector<int>, PhaseAngle>>& terms) {
  Diagram acc = identity(wires);
  for (const auto& [support, angle] : terms) {
    acc = compose_seq(acc, and_phase(wires, support, angle));
  }
  return acc;
}

// ANDphase((p xor q) and r1..rk; a) on wires p, q, r1..rk.
Diagram xor_and_phase(int k, PhaseAngle a) {
  DiagramBuilder b;
  std::vector<Leg> wires;
  for (int i = 0; i < k + 2; ++i) wires.push_back(b.tap(b.input()));
  Leg s = b.xor_of({wires[0], wires[1]});
  std::vector<Leg> conj{s};
  for (int i = 0; i < k; ++i) conj.push_back(wires[static_cast<std::size_t>(i + 2)]);
  b.phase_effect(b.and_of(conj), a);
  for (const Leg& w : wires) b.output(w);
  return b.build();
}

Diagram xor_and_phase_expanded(int k, PhaseAngle a) {
  std::vector<int> r;
  for (int i = 0; i < k; ++i) r.push_back(i + 3);
  auto with = [&](std::vector<int> head) {
    head.insert(head.end(), r.begin(), r.end());
    return head;
  };
  return and_phase_product(k + 2, {{with({1}), a}, {with({2}), a}, {with({1, 2}), a.scaled(-2)}});
}

std::pair<Diagram, Diagram> build_sides(RuleId id, const RuleParams& p) {
  const auto& ang = p.angles;
  const auto& ar = p.arities;
  switch (id) {
    case RuleId::S1: {
      const int n1 = ar[0], m1 = ar[1], n2 = ar[2], m2 = ar[3];
      DiagramBuilder b;
      std::vector<Leg> in1, in2;
      for (int i = 0; i < n1; ++i) in1.push_back(b.input());
      for (int i = 0; i < n2 - 1; ++i) in2.push_back(b.input());
      Leg s1 = b.z(ang[0], in1);
      in2.push_back(s1);
      Leg s2 = b.z(ang[1], in2);
      for (int i = 0; i < m1 - 1; ++i) b.output(s1);
      for (int i = 0; i < m2; ++i) b.output(s2);
      return {b.build(), z_spider(n1 + n2 - 1, m1 - 1 + m2, ang[0] + ang[1])};
    }
    case RuleId::S2:
      return {z_spider(1, 1), identity(1)};
    case RuleId::S3:
      return {z_spider(0, 2), cap()};
    case RuleId::B1:
      return {compose_seq(x_spider(0, 1, ang[0]), z_spider(1, 2)),
              compose_par(x_spider(0, 1, ang[0]), x_spider(0, 1, ang[0]))};
    case RuleId::B2:
      return {compose_seq(x_spider(2, 1), z_spider(1, 2)),
              compose_seq({compose_par(z_spider(1, 2), z_spider(1, 2)),
                           compose_par({identity(1), swap(), identity(1)}),
                           compose_par(x_spider(2, 1), x_spider(2, 1))})};
    case RuleId::B3: {
      const int n = ar[0], m = ar[1];
      const PhaseAngle a = ang[0], k = ang[1];
      const PhaseAngle pushed = k == kPi ? -a : a;
      return {compose_seq(repeat_par(x_spider(1, 1, k), n), z_spider(n, m, a)),
              compose_seq(z_spider(n, m, pushed), repeat_par(x_spider(1, 1, k), m))};
    }
    case RuleId::T1:
      return {compose_seq(x_spider(0, 1, kPi), triangle()), z_spider(0, 1)};
    case RuleId::T2:
      return {compose_seq(triangle(), x_spider(1, 0)), z_spider(1, 0)};
    case RuleId::T3:
      return {compose_seq({triangle(), z_spider(1, 1, kPi), triangle(), z_spider(1, 1, kPi)}),
              identity(1)};
    case RuleId::T4:
      return {compose_seq({x_spider(1, 1, kPi), triangle(), x_spider(1, 1, kPi)}),
              triangle_transposed()};
    case RuleId::A1: {
      DiagramBuilder l;
      Leg p1 = l.input(), q1 = l.input(), r1 = l.input();
      l.output(l.and_of({l.xor_of({p1, q1}), r1}));
      DiagramBuilder r;
      Leg p2 = r.input(), q2 = r.input();
      Leg rc = r.z({}, {r.input()});
      r.output(r.xor_of({r.and_of({p2, rc}), r.and_of({q2, rc})}));
      return {l.build(), r.build()};
    }
    case RuleId::A2: {
      DiagramBuilder l;
      Leg c = l.z({}, {l.input()});
      l.output(l.and_of({c, c}));
      return {l.build(), identity(1)};
    }
    case RuleId::A3:
      return {compose_seq(and_gate(2), copy_gate(2)), and_pair_from_copies(2, 2)};
    case RuleId::EQ3:
    case RuleId::EQ4: {
      const int w = id == RuleId::EQ3 ? 3 : 2;
      const PhaseAngle beta = ang[0];
      std::vector<std::pair<std::vector<int>, PhaseAngle>> terms;
      for (int i = 1; i <= w; ++i) terms.push_back({{i}, beta});
      for (int i = 1; i <= w; ++i) {
        for (int j = i + 1; j <= w; ++j) terms.push_back({{i, j}, beta.scaled(-2)});
      }
      if (w == 3) terms.push_back({{1, 2, 3}, beta.scaled(4)});
      std::vector<int> all(static_cast<std::size_t>(w));
      for (int i = 0; i < w; ++i) all[static_cast<std::size_t>(i)] = i + 1;
      Diagram lhs = phase_gadget(w, all, beta);
      Diagram rhs = and_phase_product(w, terms);
      if (ang.size() == 2) {
        Diagram plug = compose_par(x_spider(0, 1, ang[1]), identity(w - 1));
        lhs = compose_seq(plug, lhs);
        rhs = compose_seq(plug, rhs);
      }
      return {lhs, rhs};
    }
    case RuleId::P1:
      return {compose_seq(x_spider(0, 1, ang[0]), z_spider(1, ar[0])),
              repeat_par(x_spider(0, 1, ang[0]), ar[0])};
    case RuleId::P2:
      return {compose_seq(x_spider(0, 1), triangle()), x_spider(0, 1)};
    case RuleId::P3:
      return {compose_seq(triangle(), x_spider(1, 0, kPi)), x_spider(1, 0, kPi)};
    case RuleId::P4:
      return {compose_seq(z_spider(0, 1, kPi), triangle()), x_spider(0, 1, kPi)};
    case RuleId::P5:
      return {compose_seq(triangle(), z_spider(1, 0, kPi)), x_spider(1, 0)};
    case RuleId::P6:
      return {and_gate(0), x_spider(0, 1, kPi)};
    case RuleId::P7: {
      const int n = ar[0];
      return {compose_seq(compose_par(x_spider(0, 1), identity(n)), and_gate(n + 1)),
              compose_par(x_spider(0, 1), repeat_par(delete_gate(), n))};
    }
    case RuleId::P8:
      return {compose_seq(and_gate(2), delete_gate()),
              compose_par(delete_gate(), delete_gate())};
    case RuleId::L1:
      return {compose_seq(and_gate(ar[0]), copy_gate(2)), and_pair_from_copies(ar[0], 2)};
    case RuleId::L2: {
      const int n = ar[0];
      DiagramBuilder l;
      Leg p1 = l.input(), q1 = l.input();
      std::vector<Leg> conj{l.xor_of({p1, q1})};
      for (int i = 0; i < n; ++i) conj.push_back(l.input());
      l.output(l.and_of(conj));
      DiagramBuilder r;
      Leg p2 = r.input(), q2 = r.input();
      std::vector<Leg> rs;
      for (int i = 0; i < n; ++i) rs.push_back(r.z({}, {r.input()}));
      std::vector<Leg> with_p{p2}, with_q{q2};
      with_p.insert(with_p.end(), rs.begin(), rs.end());
      with_q.insert(with_q.end(), rs.begin(), rs.end());
      r.output(r.xor_of({r.and_of(with_p), r.and_of(with_q)}));
      return {l.build(), r.build()};
    }
    case RuleId::L3:
      return {compose_seq(and_gate(2), copy_gate(ar[0])), and_pair_from_copies(2, ar[0])};
    case RuleId::L4: {
      const int k = ar[0];
      DiagramBuilder l;
      Leg pc = l.z({}, {l.input()});
      std::vector<Leg> conj{pc, pc};
      for (int i = 0; i < k; ++i) conj.push_back(l.input());
      l.output(l.and_of(conj));
      return {l.build(), and_gate(k + 1)};
    }
    case RuleId::LEM5:
      return {xor_and_phase(1, ang[0]), xor_and_phase_expanded(1, ang[0])};
    case RuleId::LEM6:
      return {xor_and_phase(ar[0], ang[0]), xor_and_phase_expanded(ar[0], ang[0])};
  }
  throw std::invalid_argument("unknown rule");
}

}  // namespace

std::string_view rule_name(RuleId id) {
  for (const auto& n : kNames) {
    if (n.id == id) return n.name;
  }
  return "?";
}

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const auto& n : kNames) {
    if (n.name == name) return n.id;
  }
  return std::nullopt;
}

const std::vector<RuleId>& all_rules() {
  static const std::vector<RuleId> rules = [] {
    std::vector<RuleId> r;
    for (const auto& n : kNames) r.push_back(n.id);
    return r;
  }();
  return rules;
}

const std::vector<CatalogEntry>& rule_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

const CatalogEntry& catalog_entry(RuleId id) {
  for (const auto& e : rule_catalog()) {
    if (e.id == id) return e;
  }
  throw std::invalid_argument("rule missing from catalog");
}

std::string catalog_markdown() {
  std::ostringstream os;
  os << "| Rule | Family | Statement | Angles | Arities (min) | Color swap | Note |\n"
     << "|---|---|---|---|---|---|---|\n";
  for (const auto& e : rule_catalog()) {
    const auto& s = e.signature;
    // One entry per angle parameter, in order: free, then {0, pi}, then optional.
    std::string angles;
    auto add = [&](const char* kind) { angles += (angles.empty() ? "" : ", ") + std::string(kind); };
    for (int i = 0; i < s.generic_angles; ++i) add("any");
    for (int i = 0; i < s.kappa_angles; ++i) add("{0,pi}");
    if (s.optional_kappa) add("[{0,pi}]");
    std::string arities;
    for (int m : s.arity_min) {
      if (!arities.empty()) arities += ", ";
      arities += ">=" + std::to_string(m);
    }
    // GitHub tables accept an escaped pipe even inside code spans.
    auto cell = [](std::string t) {
      for (std::size_t i = 0; (i = t.find('|', i)) != std::string::npos; i += 2) t.insert(i, "\\");
      return t;
    };
    os << "| " << rule_name(e.id) << " | " << e.family << " | `" << cell(e.statement) << "` | "
       << (angles.empty() ? "-" : angles) << " | " << (arities.empty() ? "-" : arities)
       << " | " << (s.color_swappable ? "yes" : "no") << " | " << cell(e.note) << " |\n";
  }
  return os.str();
}

RuleParams default_params(RuleId id) {
  const PhaseAngle third = PhaseAngle::exact(1, 3);
  switch (id) {
    case RuleId::S1:
      return {{PhaseAngle::exact(1, 4), PhaseAngle::exact(1, 2)}, {1, 2, 2, 1}};
    case RuleId::B1:
      return {{kPi}, {}};
    case RuleId::B3:
      return {{third, kPi}, {2, 1}};
    case RuleId::EQ3:
    case RuleId::EQ4:
      return {{third}, {}};
    case RuleId::P1:
      return {{kPi}, {3}};
    case RuleId::P7:
    case RuleId::L1:
    case RuleId::L2:
    case RuleId::L3:
    case RuleId::L4:
      return {{}, {2}};
    case RuleId::LEM5:
      return {{PhaseAngle::exact(1, 5)}, {}};
    case RuleId::LEM6:
      return {{PhaseAngle::exact(1, 5)}, {2}};
    default:
      return {};
  }
}

RuleInstance instantiate_rule(RuleId id, const RuleParams& params) {
  check_params(catalog_entry(id), params);
  auto [lhs, rhs] = build_sides(id, params);
  if (params.color_swap) {
    lhs = color_swap(lhs);
    rhs = color_swap(rhs);
  }
  return RuleInstance{id, params, std::move(lhs), std::move(rhs)};
}

ScalarMatch validate_rule(const RuleInstance& instance, double tol, const EvalOptions& eval) {
  return equal_up_to_scalar(evaluate(instance.lhs, eval), evaluate(instance.rhs, eval), tol);
}

RuleInstance perturb_rhs(const RuleInstance& instance, PhaseAngle delta) {
  RuleInstance out = instance;
  for (const auto& [id, n] : out.rhs.nodes()) {
    if (n.is_spider()) {
      out.rhs.set_phase(id, n.phase + delta);
      return out;
    }
  }
  Diagram kick = compose_seq(z_spider(1, 1, delta), x_spider(1, 1, delta));
  if (out.rhs.n_outputs() > 0) {
    auto rest = static_cast<int>(out.rhs.n_outputs()) - 1;
    out.rhs = compose_seq(out.rhs, compose_par(kick, identity(rest)));
  } else if (out.rhs.n_inputs() > 0) {
    auto rest = static_cast<int>(out.rhs.n_inputs()) - 1;
    out.rhs = compose_seq(compose_par(kick, identity(rest)), out.rhs);
  } else {
    throw std::invalid_argument("cannot perturb a closed diagram without spiders");
  }
  return out;
}

}  // namespace zxkit
