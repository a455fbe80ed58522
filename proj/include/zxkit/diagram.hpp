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
#include <map>
#include <string_view>
#include <vector>

#include "zxkit/phase_angle.hpp"

namespace zxkit {

using NodeId = std::size_t;

enum class NodeType { ZSpider, XSpider, Triangle, TriangleTransposed, Boundary };

std::string_view node_type_name(NodeType t);

struct Node {
  NodeType type = NodeType::ZSpider;
  /// Meaningful for spiders only.
  PhaseAngle phase;

  bool is_spider() const {
    return type == NodeType::ZSpider || type == NodeType::XSpider;
  }
  bool is_triangle() const {
    return type == NodeType::Triangle || type == NodeType::TriangleTransposed;
  }
};

/// Which leg of a node an edge attaches to. Spiders and boundaries use Any;
/// triangles have exactly one In and one Out leg.
enum class Port { Any, In, Out };

struct Endpoint {
  NodeId node = 0;
  Port port = Port::Any;

  bool operator==(const Endpoint&) const = default;
};

struct Edge {
  Endpoint a;
  Endpoint b;
};

/**
 * An open graph of ZX generators with ordered boundary wires.
 *
 * Diagrams read top to bottom: `inputs()` are the top boundary wires and
 * `outputs()` the bottom ones. Edges form a multiset; self-loops are allowed
 * on spiders. Every boundary node has exactly one incident edge, possibly
 * straight to another boundary (a bare wire, cup or cap).
 *
 * Mutation is for construction only; the free functions below treat
 * diagrams as values.
 */
class Diagram {
 public:
  NodeId add_node(NodeType type, PhaseAngle phase = {});
  NodeId add_z(PhaseAngle phase = {}) { return add_node(NodeType::ZSpider, phase); }
  NodeId add_x(PhaseAngle phase = {}) { return add_node(NodeType::XSpider, phase); }

  /// Creates a boundary node and appends it to the input list.
  NodeId add_input();
  NodeId add_output();

  void add_edge(Endpoint a, Endpoint b);
  void add_edge(NodeId a, NodeId b) { add_edge(Endpoint{a}, Endpoint{b}); }

  void set_phase(NodeId id, PhaseAngle phase);

  /// Inserts an existing node id (used by deserialization). Throws
  /// std::invalid_argument on duplicates.
  void insert_node(NodeId id, Node node);
  void set_boundaries(std::vector<NodeId> inputs, std::vector<NodeId> outputs);

  const std::map<NodeId, Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<NodeId>& inputs() const { return inputs_; }
  const std::vector<NodeId>& outputs() const { return outputs_; }
  std::size_t n_inputs() const { return inputs_.size(); }
  std::size_t n_outputs() const { return outputs_.size(); }

  const Node& node(NodeId id) const;
  bool has_node(NodeId id) const { return nodes_.count(id) != 0; }
  /// Edge-ends at the node; a self-loop counts twice.
  std::size_t degree(NodeId id) const;
  /// Indices into edges() touching `id`, in edge order (self-loops once).
  std::vector<std::size_t> incident_edges(NodeId id) const;

  /// Smallest id strictly greater than every node id in use.
  NodeId next_id() const { return next_id_; }

  /// Throws std::invalid_argument when a structural invariant fails.
  void validate() const;

  /// Removes phase-0 degree-2 Z spiders, reconnecting their neighbours.
  /// The tensor is unchanged.
  void remove_identity_spiders();

 private:
  friend Diagram compose_seq(const Diagram&, const Diagram&);
  friend Diagram compose_par(const Diagram&, const Diagram&);

  void splice_out(NodeId id);

  std::map<NodeId, Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<NodeId> inputs_;
  std::vector<NodeId> outputs_;
  NodeId next_id_ = 0;
};

/// `first` then `then`: outputs of `first` are joined to inputs of `then` in
/// order. Throws CompositionError when the counts differ.
Diagram compose_seq(const Diagram& first, const Diagram& then);

/// Disjoint union; inputs and outputs are concatenated left then right.
Diagram compose_par(const Diagram& left, const Diagram& right);

/// Folds compose_seq over a non-empty list.
Diagram compose_seq(const std::vector<Diagram>& stages);
/// Folds compose_par; an empty list gives the empty diagram.
Diagram compose_par(const std::vector<Diagram>& parts);

/**
 * Inputs and outputs swap roles; triangles flip orientation so they still
 * point downwards. evaluate(transpose(d)) is the matrix transpose of
 * evaluate(d).
 */
Diagram transpose(const Diagram& d);

/// Exchanges Z and X spiders. Triangles are left untouched.
Diagram color_swap(const Diagram& d);

}  // namespace zxkit
