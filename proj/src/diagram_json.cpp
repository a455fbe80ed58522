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

#include "zxkit/diagram_json.hpp"

#include <functional>
#include <map>
#include <set>

#include "zxkit/errors.hpp"

namespace zxkit {

using nlohmann::json;

namespace {

NodeType kind_from_string(const std::string& s) {
  if (s == "Z") return NodeType::ZSpider;
  if (s == "X") return NodeType::XSpider;
  if (s == "TRI") return NodeType::Triangle;
  if (s == "TRI_T") return NodeType::TriangleTransposed;
  if (s == "B") return NodeType::Boundary;
  throw ParseError(0, "unknown node kind '" + s + "'");
}

}  // namespace

json phase_to_json(const PhaseAngle& a) {
  if (a.is_exact()) return json{{"num", a.num()}, {"den", a.den()}};
  return json{{"rad", a.to_radians()}};
}

PhaseAngle phase_from_json(const json& j) {
  if (!j.is_object()) throw ParseError(0, "phase must be an object");
  if (j.contains("rad")) return PhaseAngle::radians(j.at("rad").get<double>());
  if (!j.contains("num") || !j.contains("den")) {
    throw ParseError(0, "phase needs num/den or rad");
  }
  auto den = j.at("den").get<std::int64_t>();
  if (den <= 0) throw ParseError(0, "phase denominator must be positive");
  return PhaseAngle::exact(j.at("num").get<std::int64_t>(), den);
}

Diagram diagram_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError(0, "diagram must be a JSON object");
    Diagram d;
    for (const auto& jn : j.at("nodes")) {
      Node n;
      n.type = kind_from_string(jn.at("kind").get<std::string>());
      if (jn.contains("phase") && !jn.at("phase").is_null()) {
        if (!n.is_spider()) throw ParseError(0, "only spiders carry a phase");
        n.phase = phase_from_json(jn.at("phase"));
      }
      auto id = jn.at("id").get<std::int64_t>();
      if (id < 0) throw ParseError(0, "node ids must be non-negative");
      d.insert_node(static_cast<NodeId>(id), n);
    }
    std::map<NodeId, int> tri_seen;
    for (const auto& je : j.at("edges")) {
      if (!je.is_array() || je.size() != 2) {
        throw ParseError(0, "edges must be [id, id] pairs");
      }
      Endpoint ends[2];
      for (int k = 0; k < 2; ++k) {
        auto id = static_cast<NodeId>(je[static_cast<std::size_t>(k)].get<std::int64_t>());
        if (!d.has_node(id)) {
          throw ParseError(0, "edge refers to unknown node " + std::to_string(id));
        }
        ends[k] = Endpoint{id};
        if (d.node(id).is_triangle()) {
          int seen = tri_seen[id]++;
          if (seen > 1) {
            throw ParseError(0, "triangle " + std::to_string(id) + " has more than two edges");
          }
          ends[k].port = seen == 0 ? Port::In : Port::Out;
        }
      }
      d.add_edge(ends[0], ends[1]);
    }
    d.set_boundaries(j.at("inputs").get<std::vector<NodeId>>(),
                     j.at("outputs").get<std::vector<NodeId>>());
    d.validate();
    return d;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("bad diagram JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string("invalid diagram: ") + e.what());
  }
}

json diagram_to_json(const Diagram& d) {
  json nodes = json::array();
  for (const auto& [id, n] : d.nodes()) {
    json jn{{"id", id}, {"kind", std::string(node_type_name(n.type))}};
    if (n.is_spider()) jn["phase"] = phase_to_json(n.phase);
    nodes.push_back(jn);
  }

  // Emit edges so that each triangle's in-edge precedes its out-edge.
  const auto& edges = d.edges();
  std::map<NodeId, std::size_t> in_edge;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (const auto& ep : {edges[i].a, edges[i].b}) {
      if (ep.port == Port::In) in_edge[ep.node] = i;
    }
  }
  std::vector<int> state(edges.size(), 0);  // 0 new, 1 visiting, 2 done
  json out_edges = json::array();
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    if (state[i] == 2) return;
    if (state[i] == 1) {
      throw std::invalid_argument("triangle ports form a cycle; cannot serialize");
    }
    state[i] = 1;
    for (const auto& ep : {edges[i].a, edges[i].b}) {
      if (ep.port == Port::Out) visit(in_edge.at(ep.node));
    }
    state[i] = 2;
    out_edges.push_back(json::array({edges[i].a.node, edges[i].b.node}));
  };
  for (std::size_t i = 0; i < edges.size(); ++i) visit(i);

  return json{{"nodes", nodes},
              {"edges", out_edges},
              {"inputs", d.inputs()},
              {"outputs", d.outputs()}};
}

json tensor_to_json(const Tensor& t) {
  json entries = json::array();
  for (const auto& z : t.entries()) entries.push_back(json::array({z.real(), z.imag()}));
  return json{{"shape", t.shape()},
              {"n_outputs", t.n_outputs()},
              {"n_inputs", t.n_inputs()},
              {"entries", entries}};
}

Tensor tensor_from_json(const json& j) {
  try {
    std::vector<Complex> entries;
    for (const auto& e : j.at("entries")) {
      entries.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    }
    std::size_t n_out = 0, n_in = 0;
    if (j.contains("n_outputs")) {
      n_out = j.at("n_outputs").get<std::size_t>();
      n_in = j.at("n_inputs").get<std::size_t>();
    } else {
      // Shape alone: treat every wire as an output.
      n_out = j.at("shape").size();
    }
    return Tensor(n_out, n_in, std::move(entries));
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("bad tensor JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string("bad tensor JSON: ") + e.what());
  }
}

}  // namespace zxkit
