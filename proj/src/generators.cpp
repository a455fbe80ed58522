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

#include "zxkit/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "zxkit/builder.hpp"

namespace zxkit {

// ---- DiagramBuilder ---------------------------------------------------------

Leg DiagramBuilder::input() { return Leg{d_.add_input()}; }

void DiagramBuilder::output(Leg leg) {
  NodeId b = d_.add_output();
  d_.add_edge(leg, Endpoint{b});
}

Leg DiagramBuilder::z(PhaseAngle phase, const std::vector<Leg>& legs) {
  NodeId n = d_.add_z(phase);
  for (const Leg& l : legs) d_.add_edge(l, Endpoint{n});
  return Leg{n};
}

Leg DiagramBuilder::x(PhaseAngle phase, const std::vector<Leg>& legs) {
  NodeId n = d_.add_x(phase);
  for (const Leg& l : legs) d_.add_edge(l, Endpoint{n});
  return Leg{n};
}

Leg DiagramBuilder::triangle(Leg in) {
  NodeId t = d_.add_node(NodeType::Triangle);
  d_.add_edge(in, Endpoint{t, Port::In});
  return Leg{t, Port::Out};
}

Leg DiagramBuilder::triangle_inverse(Leg in) {
  Leg a = z(PhaseAngle::exact(1), {in});
  Leg b = triangle(a);
  return z(PhaseAngle::exact(1), {b});
}

Leg DiagramBuilder::and_of(const std::vector<Leg>& signals) {
  std::vector<Leg> raised;
  raised.reserve(signals.size());
  for (const Leg& s : signals) raised.push_back(triangle(s));
  // Z(pi) hub followed by triangle then Z(pi): the hub's pi merges with the
  // leading Z(pi) of the inverse triangle.
  Leg hub = z(PhaseAngle::exact(1), raised);
  Leg t = triangle(hub);
  return z(PhaseAngle::exact(1), {t});
}

// ---- generators -------------------------------------------------------------

namespace {

void check_arity(int n, const char* what) {
  if (n < 0) {
    throw std::invalid_argument(std::string(what) + " must be >= 0, got " +
                                std::to_string(n));
  }
}

Diagram spider(NodeType type, int n_in, int n_out, PhaseAngle phase) {
  check_arity(n_in, "spider input arity");
  check_arity(n_out, "spider output arity");
  Diagram d;
  std::vector<NodeId> ins;
  for (int i = 0; i < n_in; ++i) ins.push_back(d.add_input());
  NodeId s = d.add_node(type, phase);
  for (NodeId b : ins) d.add_edge(b, s);
  for (int i = 0; i < n_out; ++i) d.add_edge(s, d.add_output());
  return d;
}

Diagram triangle_node(NodeType type) {
  Diagram d;
  NodeId in = d.add_input();
  NodeId t = d.add_node(type);
  NodeId out = d.add_output();
  d.add_edge(Endpoint{in}, Endpoint{t, Port::In});
  d.add_edge(Endpoint{t, Port::Out}, Endpoint{out});
  return d;
}

std::vector<int> checked_wires(const std::vector<int>& w, int wires,
                               const char* what) {
  std::set<int> s(w.begin(), w.end());
  if (s.size() != w.size()) {
    throw std::invalid_argument(std::string(what) + " has repeated wires");
  }
  for (int i : s) {
    if (i < 1 || i > wires) {
      throw std::invalid_argument(std::string(what) + " wire " +
                                  std::to_string(i) + " outside 1.." +
                                  std::to_string(wires));
    }
  }
  return {s.begin(), s.end()};
}

int max_wire(std::initializer_list<const std::vector<int>*> lists, int extra = 0) {
  int m = extra;
  for (const auto* l : lists) {
    for (int i : *l) m = std::max(m, i);
  }
  return m;
}

// Diagonal on `wires` wires: each support wire is tapped and the taps feed
// `combine`, whose output is closed by the phase effect.
template <class Combine>
Diagram diagonal(int wires, const std::vector<int>& support, PhaseAngle angle,
                 Combine combine) {
  DiagramBuilder b;
  std::vector<Leg> legs;
  for (int i = 0; i < wires; ++i) legs.push_back(b.input());
  std::vector<Leg> signals;
  for (int w : support) {
    Leg t = b.tap(legs[w - 1]);
    legs[w - 1] = t;
    signals.push_back(t);
  }
  b.phase_effect(combine(b, signals), angle);
  for (const Leg& l : legs) b.output(l);
  return b.build();
}

}  // namespace

Diagram make_generator(Generator kind, const GeneratorParams& p) {
  switch (kind) {
    case Generator::ZSpider:
      return spider(NodeType::ZSpider, p.n_inputs, p.n_outputs, p.phase);
    case Generator::XSpider:
      return spider(NodeType::XSpider, p.n_inputs, p.n_outputs, p.phase);
    case Generator::Triangle:
      return triangle_node(NodeType::Triangle);
    case Generator::TriangleTransposed:
      return triangle_node(NodeType::TriangleTransposed);
    case Generator::Identity: {
      Diagram d;
      NodeId in = d.add_input();
      d.add_edge(in, d.add_output());
      return d;
    }
    case Generator::Cup: {
      Diagram d;
      NodeId a = d.add_input();
      NodeId b = d.add_input();
      d.add_edge(a, b);
      return d;
    }
    case Generator::Cap: {
      Diagram d;
      NodeId a = d.add_output();
      NodeId b = d.add_output();
      d.add_edge(a, b);
      return d;
    }
    case Generator::Swap:
      return wire_permutation({1, 0});
    case Generator::Empty:
      return Diagram{};
  }
  throw std::invalid_argument("unknown generator");
}

Diagram z_spider(int n_in, int n_out, PhaseAngle phase) {
  return make_generator(Generator::ZSpider, {n_in, n_out, phase});
}
Diagram x_spider(int n_in, int n_out, PhaseAngle phase) {
  return make_generator(Generator::XSpider, {n_in, n_out, phase});
}
Diagram triangle() { return make_generator(Generator::Triangle); }
Diagram triangle_transposed() {
  return make_generator(Generator::TriangleTransposed);
}
Diagram identity(int wires) {
  check_arity(wires, "identity width");
  std::vector<int> perm(static_cast<std::size_t>(wires));
  for (int i = 0; i < wires; ++i) perm[static_cast<std::size_t>(i)] = i;
  return wire_permutation(perm);
}
Diagram cup() { return make_generator(Generator::Cup); }
Diagram cap() { return make_generator(Generator::Cap); }
Diagram swap() { return make_generator(Generator::Swap); }
Diagram empty_diagram() { return make_generator(Generator::Empty); }

Diagram wire_permutation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[static_cast<std::size_t>(i)] != i) {
      throw std::invalid_argument("wire_permutation: not a permutation");
    }
  }
  Diagram d;
  std::vector<NodeId> ins;
  for (int i = 0; i < n; ++i) ins.push_back(d.add_input());
  std::vector<NodeId> outs;
  for (int i = 0; i < n; ++i) outs.push_back(d.add_output());
  for (int i = 0; i < n; ++i) {
    d.add_edge(ins[static_cast<std::size_t>(i)],
               outs[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
  }
  return d;
}

Diagram make_derived(Derived kind, const DerivedParams& p) {
  switch (kind) {
    case Derived::Copy:
      check_arity(p.arity, "copy arity");
      return z_spider(1, p.arity);
    case Derived::Xor:
      return x_spider(2, 1);
    case Derived::Delete:
      return z_spider(1, 0);
    case Derived::And: {
      check_arity(p.arity, "AND arity");
      DiagramBuilder b;
      std::vector<Leg> ins;
      for (int i = 0; i < p.arity; ++i) ins.push_back(b.input());
      b.output(b.and_of(ins));
      return b.build();
    }
    case Derived::Cnot: {
      const int wires = p.wires > 0
                            ? p.wires
                            : max_wire({&p.controls}, p.target);
      auto controls = checked_wires(p.controls, wires, "CNOT controls");
      checked_wires({p.target}, wires, "CNOT target");
      if (std::count(controls.begin(), controls.end(), p.target)) {
        throw std::invalid_argument("CNOT target is also a control");
      }
      DiagramBuilder b;
      std::vector<Leg> legs;
      for (int i = 0; i < wires; ++i) legs.push_back(b.input());
      std::vector<Leg> signals;
      for (int c : controls) {
        Leg t = b.tap(legs[static_cast<std::size_t>(c - 1)]);
        legs[static_cast<std::size_t>(c - 1)] = t;
        signals.push_back(t);
      }
      Leg cond = b.and_of(signals);
      auto& tgt = legs[static_cast<std::size_t>(p.target - 1)];
      tgt = b.xor_of({tgt, cond});
      for (const Leg& l : legs) b.output(l);
      return b.build();
    }
    case Derived::PhaseGadget:
    case Derived::AndPhase: {
      if (p.support.empty()) {
        throw std::invalid_argument("phase term needs a non-empty support");
      }
      const int wires = p.wires > 0 ? p.wires : max_wire({&p.support});
      auto support = checked_wires(p.support, wires, "support");
      if (kind == Derived::PhaseGadget) {
        return diagonal(wires, support, p.angle,
                        [](DiagramBuilder& b, const std::vector<Leg>& s) {
                          return b.xor_of(s);
                        });
      }
      return diagonal(wires, support, p.angle,
                      [](DiagramBuilder& b, const std::vector<Leg>& s) {
                        return b.and_of(s);
                      });
    }
  }
  throw std::invalid_argument("unknown derived gate");
}

Diagram copy_gate(int m) { return make_derived(Derived::Copy, {.arity = m}); }
Diagram xor_gate() { return make_derived(Derived::Xor, {}); }
Diagram delete_gate() { return make_derived(Derived::Delete, {}); }
Diagram and_gate(int n) { return make_derived(Derived::And, {.arity = n}); }

Diagram cnot_gate(int wires, int target, const std::vector<int>& controls) {
  return make_derived(Derived::Cnot,
                      {.wires = wires, .target = target, .controls = controls});
}

Diagram phase_gadget(int wires, const std::vector<int>& support,
                     PhaseAngle angle) {
  return make_derived(Derived::PhaseGadget,
                      {.wires = wires, .support = support, .angle = angle});
}

Diagram and_phase(int wires, const std::vector<int>& support,
                  PhaseAngle angle) {
  return make_derived(Derived::AndPhase,
                      {.wires = wires, .support = support, .angle = angle});
}

}  // namespace zxkit
