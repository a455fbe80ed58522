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

#include "zxkit/diagram.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "zxkit/errors.hpp"

namespace zxkit {

std::string_view node_type_name(NodeType t) {
  switch (t) {
    case NodeType::ZSpider:
      return "Z";
    case NodeType::XSpider:
      return "X";
    case NodeType::Triangle:
      return "TRI";
    case NodeType::TriangleTransposed:
      return "TRI_T";
    case NodeType::Boundary:
      return "B";
  }
  return "?";
}

NodeId Diagram::add_node(NodeType type, PhaseAngle phase) {
  NodeId id = next_id_++;
  nodes_.emplace(id, Node{type, phase});
  return id;
}

NodeId Diagram::add_input() {
  NodeId id = add_node(NodeType::Boundary);
  inputs_.push_back(id);
  return id;
}

NodeId Diagram::add_output() {
  NodeId id = add_node(NodeType::Boundary);
  outputs_.push_back(id);
  return id;
}

void Diagram::add_edge(Endpoint a, Endpoint b) {
  if (!has_node(a.node) || !has_node(b.node)) {
    throw std::invalid_argument("edge endpoint is not a node of the diagram");
  }
  edges_.push_back(Edge{a, b});
}

void Diagram::set_phase(NodeId id, PhaseAngle phase) {
  auto it = nodes_.find(id);
  if (it == nodes_.end() || !it->second.is_spider()) {
    throw std::invalid_argument("set_phase: node " + std::to_string(id) +
                                " is not a spider");
  }
  it->second.phase = phase;
}

void Diagram::insert_node(NodeId id, Node node) {
  if (!nodes_.emplace(id, node).second) {
    throw std::invalid_argument("duplicate node id " + std::to_string(id));
  }
  next_id_ = std::max(next_id_, id + 1);
}

void Diagram::set_boundaries(std::vector<NodeId> inputs,
                             std::vector<NodeId> outputs) {
  inputs_ = std::move(inputs);
  outputs_ = std::move(outputs);
}

const Node& Diagram::node(NodeId id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) {
    throw std::invalid_argument("no node with id " + std::to_string(id));
  }
  return it->second;
}

std::size_t Diagram::degree(NodeId id) const {
  std::size_t d = 0;
  for (const auto& e : edges_) {
    d += (e.a.node == id) + (e.b.node == id);
  }
  return d;
}

std::vector<std::size_t> Diagram::incident_edges(NodeId id) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].a.node == id || edges_[i].b.node == id) out.push_back(i);
  }
  return out;
}

void Diagram::validate() const {
  std::set<NodeId> seen;
  auto check_boundary = [&](NodeId id, const char* side) {
    auto it = nodes_.find(id);
    if (it == nodes_.end() || it->second.type != NodeType::Boundary) {
      throw std::invalid_argument(std::string(side) + " " + std::to_string(id) +
                                  " is not a boundary node");
    }
    if (!seen.insert(id).second) {
      throw std::invalid_argument("boundary " + std::to_string(id) +
                                  " listed more than once");
    }
  };
  for (NodeId id : inputs_) check_boundary(id, "input");
  for (NodeId id : outputs_) check_boundary(id, "output");

  for (const auto& e : edges_) {
    for (const Endpoint& ep : {e.a, e.b}) {
      auto it = nodes_.find(ep.node);
      if (it == nodes_.end()) {
        throw std::invalid_argument("edge refers to unknown node " +
                                    std::to_string(ep.node));
      }
      if (it->second.is_triangle() == (ep.port == Port::Any)) {
        throw std::invalid_argument("bad port on node " +
                                    std::to_string(ep.node));
      }
    }
  }

  for (const auto& [id, n] : nodes_) {
    if (n.type == NodeType::Boundary) {
      if (!seen.count(id)) {
        throw std::invalid_argument("boundary node " + std::to_string(id) +
                                    " is neither an input nor an output");
      }
      if (degree(id) != 1) {
        throw std::invalid_argument("boundary node " + std::to_string(id) +
                                    " must have degree 1");
      }
    } else if (n.is_triangle()) {
      int in = 0, out = 0;
      for (const auto& e : edges_) {
        if (e.a.node == id && e.b.node == id) {
          throw std::invalid_argument("self-loop on triangle " +
                                      std::to_string(id));
        }
        for (const Endpoint& ep : {e.a, e.b}) {
          if (ep.node != id) continue;
          in += ep.port == Port::In;
          out += ep.port == Port::Out;
        }
      }
      if (in != 1 || out != 1) {
        throw std::invalid_argument("triangle " + std::to_string(id) +
                                    " needs exactly one in and one out edge");
      }
    }
  }
}

void Diagram::splice_out(NodeId id) {
  auto inc = incident_edges(id);
  if (inc.size() == 1 && edges_[inc[0]].a.node == id &&
      edges_[inc[0]].b.node == id) {
    // Closed loop: a nonzero scalar.
    edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(inc[0]));
    nodes_.erase(id);
    return;
  }
  if (inc.size() != 2) {
    throw std::logic_error("splice_out on node of degree != 2");
  }
  auto other = [&](const Edge& e) { return e.a.node == id ? e.b : e.a; };
  Edge joined{other(edges_[inc[0]]), other(edges_[inc[1]])};
  edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(inc[1]));
  edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(inc[0]));
  edges_.push_back(joined);
  nodes_.erase(id);
}

void Diagram::remove_identity_spiders() {
  std::vector<NodeId> candidates;
  for (const auto& [id, n] : nodes_) {
    if (n.type == NodeType::ZSpider && n.phase.is_zero()) candidates.push_back(id);
  }
  for (NodeId id : candidates) {
    auto inc = incident_edges(id);
    if (inc.size() != 2) continue;
    splice_out(id);
  }
}

namespace {

Endpoint shifted(Endpoint e, NodeId offset) {
  return Endpoint{e.node + offset, e.port};
}

}  // namespace

Diagram compose_seq(const Diagram& first, const Diagram& then) {
  if (first.n_outputs() != then.n_inputs()) {
    throw CompositionError(
        "compose_seq: first has " + std::to_string(first.n_outputs()) +
        " outputs but then has " + std::to_string(then.n_inputs()) + " inputs");
  }
  Diagram out;
  const NodeId offset = first.next_id_;
  out.nodes_ = first.nodes_;
  for (const auto& [id, n] : then.nodes_) out.nodes_.emplace(id + offset, n);
  out.next_id_ = offset + then.next_id_;
  out.edges_ = first.edges_;
  for (const auto& e : then.edges_) {
    out.edges_.push_back(Edge{shifted(e.a, offset), shifted(e.b, offset)});
  }

  // Each joined boundary pair becomes one identity Z spider, then is spliced.
  std::vector<NodeId> joints;
  for (std::size_t k = 0; k < first.n_outputs(); ++k) {
    const NodeId o = first.outputs_[k];
    const NodeId i = then.inputs_[k] + offset;
    out.nodes_[o] = Node{NodeType::ZSpider, {}};
    for (auto& e : out.edges_) {
      if (e.a.node == i) e.a = Endpoint{o};
      if (e.b.node == i) e.b = Endpoint{o};
    }
    out.nodes_.erase(i);
    joints.push_back(o);
  }
  for (NodeId j : joints) out.splice_out(j);

  out.inputs_ = first.inputs_;
  for (NodeId id : then.outputs_) out.outputs_.push_back(id + offset);
  return out;
}

Diagram compose_par(const Diagram& left, const Diagram& right) {
  Diagram out = left;
  const NodeId offset = left.next_id_;
  for (const auto& [id, n] : right.nodes_) out.nodes_.emplace(id + offset, n);
  out.next_id_ = offset + right.next_id_;
  for (const auto& e : right.edges_) {
    out.edges_.push_back(Edge{shifted(e.a, offset), shifted(e.b, offset)});
  }
  for (NodeId id : right.inputs_) out.inputs_.push_back(id + offset);
  for (NodeId id : right.outputs_) out.outputs_.push_back(id + offset);
  return out;
}

Diagram compose_seq(const std::vector<Diagram>& stages) {
  if (stages.empty()) throw std::invalid_argument("compose_seq: no stages");
  Diagram acc = stages.front();
  for (std::size_t i = 1; i < stages.size(); ++i) acc = compose_seq(acc, stages[i]);
  return acc;
}

Diagram compose_par(const std::vector<Diagram>& parts) {
  Diagram acc;
  for (const auto& p : parts) acc = compose_par(acc, p);
  return acc;
}

Diagram transpose(const Diagram& d) {
  Diagram out;
  for (const auto& [id, n] : d.nodes()) {
    Node m = n;
    if (n.type == NodeType::Triangle) m.type = NodeType::TriangleTransposed;
    if (n.type == NodeType::TriangleTransposed) m.type = NodeType::Triangle;
    out.insert_node(id, m);
  }
  auto flip = [](Endpoint e) {
    if (e.port == Port::In) e.port = Port::Out;
    else if (e.port == Port::Out) e.port = Port::In;
    return e;
  };
  for (const auto& e : d.edges()) out.add_edge(flip(e.a), flip(e.b));
  out.set_boundaries(d.outputs(), d.inputs());
  return out;
}

Diagram color_swap(const Diagram& d) {
  Diagram out;
  for (const auto& [id, n] : d.nodes()) {
    Node m = n;
    if (n.type == NodeType::ZSpider) m.type = NodeType::XSpider;
    if (n.type == NodeType::XSpider) m.type = NodeType::ZSpider;
    out.insert_node(id, m);
  }
  for (const auto& e : d.edges()) out.add_edge(e.a, e.b);
  out.set_boundaries(d.inputs(), d.outputs());
  return out;
}

}  // namespace zxkit
