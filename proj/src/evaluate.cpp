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

#include "zxkit/evaluate.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <queue>
#include <tuple>
#include <set>
#include <string>

#include "zxkit/errors.hpp"

namespace zxkit {

namespace {

using Var = std::size_t;

// A dense tensor over binary variables; vars[k] is bit k of the flat index.
struct Factor {
  std::vector<Var> vars;
  std::vector<Complex> data;
};

double inv_sqrt2_pow(std::size_t k) {
  // Exact powers of 1/2 for even k keep generator tensors bit-exact.
  double v = std::ldexp(1.0, -static_cast<int>(k / 2));
  if (k % 2) v *= std::numbers::sqrt2 / 2.0;
  return v;
}

Complex leg_value(const Node& n, const std::vector<int>& bits) {
  switch (n.type) {
    case NodeType::ZSpider: {
      bool all0 = std::all_of(bits.begin(), bits.end(), [](int b) { return b == 0; });
      bool all1 = std::all_of(bits.begin(), bits.end(), [](int b) { return b == 1; });
      Complex v{0.0, 0.0};
      if (all0) v += 1.0;
      if (all1) v += n.phase.unit();
      return v;
    }
    case NodeType::XSpider: {
      int parity = 0;
      for (int b : bits) parity ^= b;
      Complex v = 1.0 + (parity ? -n.phase.unit() : n.phase.unit());
      return v * inv_sqrt2_pow(bits.size());
    }
    case NodeType::Triangle:
      // matrix [[1,1],[0,1]] indexed [out][in]; bits = {in, out}
      return (bits[0] == 0 && bits[1] == 1) ? 0.0 : 1.0;
    case NodeType::TriangleTransposed:
      return (bits[0] == 1 && bits[1] == 0) ? 0.0 : 1.0;
    case NodeType::Boundary:
      break;
  }
  throw std::logic_error("boundary nodes carry no tensor");
}

Factor node_factor(const Node& n, const std::vector<Var>& legs) {
  Factor f;
  f.vars = legs;
  std::sort(f.vars.begin(), f.vars.end());
  f.vars.erase(std::unique(f.vars.begin(), f.vars.end()), f.vars.end());
  std::vector<std::size_t> slot(legs.size());
  for (std::size_t i = 0; i < legs.size(); ++i) {
    slot[i] = static_cast<std::size_t>(
        std::lower_bound(f.vars.begin(), f.vars.end(), legs[i]) - f.vars.begin());
  }
  f.data.resize(std::size_t{1} << f.vars.size());
  std::vector<int> bits(legs.size());
  for (std::size_t a = 0; a < f.data.size(); ++a) {
    for (std::size_t i = 0; i < legs.size(); ++i) bits[i] = (a >> slot[i]) & 1;
    f.data[a] = leg_value(n, bits);
  }
  return f;
}

// Multiplies `parts` together and sums out `eliminated` (if any).
Factor contract(const std::vector<const Factor*>& parts,
                const std::vector<Var>& result_vars,
                const std::vector<Var>& eliminated) {
  std::vector<Var> all = result_vars;
  all.insert(all.end(), eliminated.begin(), eliminated.end());
  // Position of each variable in the joint assignment.
  std::map<Var, std::size_t> pos;
  for (std::size_t i = 0; i < all.size(); ++i) pos[all[i]] = i;

  // idx_p(a) = sum over bytes c of a of table[p][c][byte c], so each factor
  // index costs one lookup per byte of the joint assignment.
  const std::size_t chunks = (all.size() + 7) / 8;
  std::vector<std::vector<std::array<std::uint32_t, 256>>> table(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    table[p].assign(chunks, {});
    const auto& vars = parts[p]->vars;
    for (std::size_t c = 0; c < chunks; ++c) {
      for (std::uint32_t byte = 0; byte < 256; ++byte) {
        std::uint32_t idx = 0;
        for (std::size_t k = 0; k < vars.size(); ++k) {
          const std::size_t bit = pos.at(vars[k]);
          if (bit / 8 == c && ((byte >> (bit % 8)) & 1)) idx |= std::uint32_t{1} << k;
        }
        table[p][c][byte] = idx;
      }
    }
  }

  Factor out;
  out.vars = result_vars;
  out.data.assign(std::size_t{1} << result_vars.size(), Complex{});
  const std::size_t total = std::size_t{1} << all.size();
  const std::size_t result_mask = (std::size_t{1} << result_vars.size()) - 1;
  // Smallest factor first: spider tensors are mostly zero, which ends the
  // product early. Plain arithmetic avoids the library's NaN-checking multiply.
  std::vector<std::size_t> order(parts.size());
  for (std::size_t p = 0; p < order.size(); ++p) order[p] = p;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return parts[x]->vars.size() < parts[y]->vars.size();
  });
  for (std::size_t a = 0; a < total; ++a) {
    double re = 1.0, im = 0.0;
    for (std::size_t p : order) {
      std::size_t idx = 0;
      for (std::size_t c = 0; c < chunks; ++c) idx |= table[p][c][(a >> (8 * c)) & 0xff];
      const Complex& z = parts[p]->data[idx];
      const double r = re * z.real() - im * z.imag();
      im = re * z.imag() + im * z.real();
      re = r;
      if (re == 0.0 && im == 0.0) break;
    }
    out.data[a & result_mask] += Complex{re, im};
  }
  return out;
}

using VarSet = std::vector<Var>;

// Variables surviving a merge of two factors, and those summed out.
void split_merge(const VarSet& x, const VarSet& y, const std::set<Var>& internal,
                 VarSet& keep, VarSet& drop) {
  keep.clear();
  drop.clear();
  VarSet all;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(all));
  for (Var v : all) {
    const bool shared = std::binary_search(x.begin(), x.end(), v) &&
                        std::binary_search(y.begin(), y.end(), v);
    (shared && internal.count(v) ? drop : keep).push_back(v);
  }
}

// Pairwise merges (i, j) of factor slots: the result goes to slot i and
// slot j is emptied.
struct Plan {
  std::vector<std::pair<std::size_t, std::size_t>> steps;
  std::size_t peak = 0;  // largest joint index set visited
  double cost = 0.0;     // sum of 2^(joint indices) over steps

  void add(std::size_t i, std::size_t j, std::size_t rank) {
    steps.push_back({i, j});
    peak = std::max(peak, rank);
    cost += std::ldexp(1.0, static_cast<int>(rank));
  }
};

bool shares(const VarSet& x, const VarSet& y) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return true;
    *i < *j ? ++i : ++j;
  }
  return false;
}

// Grows one factor at a time, absorbing the earliest factor that touches it.
// Good for circuits, whose node ids follow the gate order.
Plan plan_sweep(std::vector<VarSet> shapes, const std::set<Var>& internal) {
  Plan plan;
  VarSet keep, drop;
  std::vector<bool> used(shapes.size(), false);
  for (std::size_t acc = 0; acc < shapes.size(); ++acc) {
    if (used[acc]) continue;
    used[acc] = true;
    for (std::size_t j = acc + 1; j < shapes.size();) {
      if (used[j] || !shares(shapes[acc], shapes[j])) {
        ++j;
        continue;
      }
      split_merge(shapes[acc], shapes[j], internal, keep, drop);
      plan.add(acc, j, keep.size() + drop.size());
      shapes[acc] = keep;
      used[j] = true;
      j = acc + 1;
    }
  }
  return plan;
}

// Greedy over connected pairs: smallest result first, or least storage growth.
// Scores are kept in a heap; entries for merged slots go stale and are skipped.
Plan plan_greedy(std::vector<VarSet> shapes, const std::set<Var>& internal, bool rank_first) {
  struct Cand {
    double key1, key2;
    std::size_t i, j, vi, vj, rank;
    bool operator>(const Cand& o) const {
      return std::tie(key1, key2, i, j) > std::tie(o.key1, o.key2, o.i, o.j);
    }
  };
  Plan plan;
  std::vector<std::size_t> version(shapes.size(), 0);
  std::map<Var, std::vector<std::size_t>> owners;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    for (Var v : shapes[i]) {
      if (internal.count(v)) owners[v].push_back(i);
    }
  }
  std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> heap;
  VarSet keep, drop;
  auto push = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    split_merge(shapes[i], shapes[j], internal, keep, drop);
    const double k = static_cast<double>(keep.size());
    const double growth = std::ldexp(1.0, static_cast<int>(keep.size())) -
                          std::ldexp(1.0, static_cast<int>(shapes[i].size())) -
                          std::ldexp(1.0, static_cast<int>(shapes[j].size()));
    heap.push({rank_first ? k : growth, rank_first ? growth : k, i, j, version[i], version[j],
               keep.size() + drop.size()});
  };
  for (const auto& [v, own] : owners) {
    if (own.size() == 2) push(own[0], own[1]);
  }
  while (!heap.empty()) {
    const Cand c = heap.top();
    heap.pop();
    if (c.vi != version[c.i] || c.vj != version[c.j]) continue;
    plan.add(c.i, c.j, c.rank);
    split_merge(shapes[c.i], shapes[c.j], internal, keep, drop);
    for (Var v : drop) owners.erase(v);
    for (Var v : shapes[c.j]) {
      auto it = owners.find(v);
      if (it == owners.end()) continue;
      for (auto& o : it->second) {
        if (o == c.j) o = c.i;
      }
    }
    shapes[c.i] = keep;
    shapes[c.j].clear();
    ++version[c.i];
    ++version[c.j];
    std::set<std::size_t> neighbours;
    for (Var v : shapes[c.i]) {
      auto it = owners.find(v);
      if (it == owners.end()) continue;
      for (std::size_t o : it->second) {
        if (o != c.i) neighbours.insert(o);
      }
    }
    for (std::size_t o : neighbours) push(c.i, o);
  }
  return plan;
}

}  // namespace

Tensor evaluate(const Diagram& d, const EvalOptions& opts) {
  d.validate();
  const std::size_t open = d.n_inputs() + d.n_outputs();
  if (open > opts.wire_budget) {
    throw ResourceLimitError("diagram has " + std::to_string(open) +
                             " open wires; budget is " +
                             std::to_string(opts.wire_budget));
  }

  const auto& edges = d.edges();
  std::map<NodeId, std::vector<Var>> legs;
  std::map<NodeId, std::pair<Var, Var>> tri_ports;
  for (Var v = 0; v < edges.size(); ++v) {
    for (const Endpoint& ep : {edges[v].a, edges[v].b}) {
      if (ep.port == Port::In) tri_ports[ep.node].first = v;
      else if (ep.port == Port::Out) tri_ports[ep.node].second = v;
      else legs[ep.node].push_back(v);
    }
  }

  std::vector<Factor> factors;
  std::set<Var> open_vars;
  for (const auto& [id, n] : d.nodes()) {
    if (n.type == NodeType::Boundary) {
      open_vars.insert(legs.at(id).front());
      continue;
    }
    if (n.is_triangle()) {
      auto [in, out] = tri_ports.at(id);
      factors.push_back(node_factor(n, {in, out}));
    } else {
      auto it = legs.find(id);
      factors.push_back(node_factor(n, it == legs.end() ? std::vector<Var>{} : it->second));
    }
  }

  std::set<Var> internal;
  for (Var v = 0; v < edges.size(); ++v) {
    if (!open_vars.count(v)) internal.insert(v);
  }

  // A self-loop leaves its variable on one factor only; sum it out first.
  std::map<Var, int> owners;
  for (const auto& f : factors) {
    for (Var v : f.vars) ++owners[v];
  }
  for (auto& f : factors) {
    std::vector<Var> keep, drop;
    for (Var v : f.vars) (internal.count(v) && owners[v] == 1 ? drop : keep).push_back(v);
    if (!drop.empty()) f = contract({&f}, keep, drop);
  }

  std::vector<VarSet> shapes;
  for (const auto& f : factors) shapes.push_back(f.vars);
  // Cheapest plan within the rank cap, else the one with the lowest peak.
  std::vector<Plan> plans;
  plans.push_back(plan_sweep(shapes, internal));
  for (bool rank_first : {true, false}) plans.push_back(plan_greedy(shapes, internal, rank_first));
  Plan plan = plans.front();
  auto fits = [&](const Plan& x) { return x.peak <= opts.max_intermediate_rank; };
  for (const auto& x : plans) {
    if (fits(x) ? !fits(plan) || x.cost < plan.cost : !fits(plan) && x.peak < plan.peak) {
      plan = x;
    }
  }
  if (plan.peak > opts.max_intermediate_rank) {
    throw ResourceLimitError("contraction needs an intermediate tensor of " +
                             std::to_string(plan.peak) + " indices");
  }
  std::vector<bool> live(factors.size(), true);
  for (auto [i, j] : plan.steps) {
    VarSet keep, drop;
    split_merge(factors[i].vars, factors[j].vars, internal, keep, drop);
    factors[i] = contract({&factors[i], &factors[j]}, keep, drop);
    factors[j] = Factor{};
    live[j] = false;
  }

  // Everything left lives on open wires.
  std::set<Var> u;
  std::vector<const Factor*> parts;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!live[i]) continue;
    const Factor& f = factors[i];
    parts.push_back(&f);
    u.insert(f.vars.begin(), f.vars.end());
  }
  Factor final_factor = contract(parts, {u.begin(), u.end()}, {});
  std::map<Var, std::size_t> final_pos;
  for (std::size_t i = 0; i < final_factor.vars.size(); ++i) {
    final_pos[final_factor.vars[i]] = i;
  }

  std::vector<Var> boundary_vars;
  for (NodeId id : d.outputs()) boundary_vars.push_back(legs.at(id).front());
  for (NodeId id : d.inputs()) boundary_vars.push_back(legs.at(id).front());

  Tensor t(d.n_outputs(), d.n_inputs());
  auto& data = t.entries();
  std::map<Var, int> assign;
  for (std::size_t flat = 0; flat < data.size(); ++flat) {
    assign.clear();
    bool consistent = true;
    for (std::size_t p = 0; p < open && consistent; ++p) {
      int bit = static_cast<int>((flat >> (open - 1 - p)) & 1);
      auto [it, fresh] = assign.emplace(boundary_vars[p], bit);
      if (!fresh && it->second != bit) consistent = false;
    }
    if (!consistent) continue;
    std::size_t idx = 0;
    for (const auto& [v, i] : final_pos) {
      idx |= static_cast<std::size_t>(assign.at(v)) << i;
    }
    data[flat] = final_factor.data[idx];
  }
  return t;
}

}  // namespace zxkit
