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

#include "zxkit/phase_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "zxkit/errors.hpp"
#include "zxkit/generators.hpp"

namespace zxkit {

namespace {

constexpr int kMaxSubsetWires = 24;

void check_support(const std::vector<int>& s, int n) {
  if (s.empty()) throw std::invalid_argument("empty support");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || (n > 0 && s[i] > n)) {
      throw std::invalid_argument("wire " + std::to_string(s[i]) + " outside 1.." +
                                  std::to_string(n));
    }
    if (i > 0 && s[i] <= s[i - 1]) {
      throw std::invalid_argument("support must be sorted without repeats");
    }
  }
}

std::vector<int> normalized_support(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw std::invalid_argument("support repeats a wire");
  }
  check_support(s, 0);
  return s;
}

int ambient(const PhaseTerm& t, int n) { return n > 0 ? n : t.support.back(); }

// Every nonempty subset of `s`, each sorted.
template <class F>
void for_each_subset(const std::vector<int>& s, F f) {
  if (s.size() > static_cast<std::size_t>(kMaxSubsetWires)) {
    throw ResourceLimitError("support of " + std::to_string(s.size()) +
                             " wires is too large to expand");
  }
  const std::uint32_t count = 1u << s.size();
  std::vector<int> sub;
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    sub.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (mask >> i & 1u) sub.push_back(s[i]);
    }
    f(sub);
  }
}

std::int64_t neg2_pow(std::size_t k) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= -2;
  return r;
}

std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& s, std::size_t k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < s.size(); ++i) {
      cur.push_back(s[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

void require_exact(const GadgetCircuit& c) {
  for (const auto& t : c.terms) {
    if (!t.angle.is_exact()) {
      throw std::invalid_argument("generic angle " + t.angle.to_string() +
                                  " where an exact multiple of pi is required");
    }
  }
}

}  // namespace

PhaseTerm gadget_term(std::vector<int> support, PhaseAngle angle) {
  return {TermKind::Gadget, normalized_support(std::move(support)), angle};
}

PhaseTerm and_phase_term(std::vector<int> support, PhaseAngle angle) {
  return {TermKind::AndPhase, normalized_support(std::move(support)), angle};
}

void GadgetCircuit::validate() const {
  if (n < 0) throw std::invalid_argument("negative wire count");
  for (const auto& t : terms) {
    check_support(t.support, n);
    if (t.support.back() > n) throw std::invalid_argument("support exceeds wire count");
  }
}

bool support_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

PhaseAngle MonomialMap::at(const std::vector<int>& subset) const {
  auto it = terms_.find(subset);
  return it == terms_.end() ? PhaseAngle{} : it->second;
}

void MonomialMap::add(const std::vector<int>& subset, PhaseAngle angle) {
  check_support(subset, n_);
  auto it = terms_.find(subset);
  PhaseAngle sum = it == terms_.end() ? angle : it->second + angle;
  if (sum.is_zero()) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it == terms_.end()) {
    terms_.emplace(subset, sum);
  } else {
    it->second = sum;
  }
}

MonomialMap& MonomialMap::operator+=(const MonomialMap& other) {
  n_ = std::max(n_, other.n_);
  for (const auto& [s, a] : other.terms_) add(s, a);
  return *this;
}

bool MonomialMap::operator==(const MonomialMap& other) const {
  return n_ == other.n_ && terms_ == other.terms_;
}

MonomialMap gadget_monomials(const PhaseTerm& term, int n) {
  check_support(term.support, n);
  MonomialMap m(ambient(term, n));
  for_each_subset(term.support, [&](const std::vector<int>& t) {
    m.add(t, term.angle.scaled(neg2_pow(t.size() - 1)));
  });
  return m;
}

MonomialMap and_monomials(const PhaseTerm& term, int n) {
  check_support(term.support, n);
  MonomialMap m(ambient(term, n));
  m.add(term.support, term.angle);
  return m;
}

MonomialMap term_monomials(const PhaseTerm& term, int n) {
  return term.kind == TermKind::Gadget ? gadget_monomials(term, n) : and_monomials(term, n);
}

MonomialMap circuit_monomials(const GadgetCircuit& c) {
  c.validate();
  MonomialMap m(c.n);
  for (const auto& t : c.terms) m += term_monomials(t, c.n);
  return m;
}

std::vector<PhaseTerm> decompose_parity_to_and(const std::vector<int>& support,
                                               PhaseAngle beta) {
  if (support.empty()) throw std::invalid_argument("decomposition needs a nonempty support");
  std::vector<int> s = normalized_support(support);
  std::vector<PhaseTerm> out;
  for_each_subset(s, [&](const std::vector<int>& t) {
    PhaseAngle a = beta.scaled(neg2_pow(t.size() - 1));
    if (!a.is_zero()) out.push_back({TermKind::AndPhase, t, a});
  });
  std::sort(out.begin(), out.end(),
            [](const PhaseTerm& a, const PhaseTerm& b) { return support_less(a.support, b.support); });
  return out;
}

PhaseAngle pi4_sigma(int n) {
  return PhaseAngle::exact(static_cast<std::int64_t>(n - 2) * (n - 3), 8);
}

PhaseAngle pi4_tau(int n) { return PhaseAngle::exact(3 - n, 4); }

GadgetCircuit decompose_pi4_gadget(const std::vector<int>& support, bool drop_zero) {
  std::vector<int> s = normalized_support(support);
  const int n = static_cast<int>(s.size());
  if (n < 3) {
    throw std::invalid_argument("pi/4 decomposition needs at least 3 wires, got " +
                                std::to_string(n));
  }
  const PhaseAngle angles[] = {pi4_sigma(n), pi4_tau(n), PhaseAngle::exact(1, 4)};
  GadgetCircuit c{s.back(), {}};
  for (std::size_t k = 1; k <= 3; ++k) {
    const PhaseAngle a = angles[k - 1];
    if (drop_zero && a.is_zero()) continue;
    for (auto& sub : subsets_of_size(s, k)) c.terms.push_back({TermKind::Gadget, sub, a});
  }
  return c;
}

GadgetCircuit fuse_gadgets(const GadgetCircuit& c) {
  c.validate();
  auto key_less = [](const std::pair<std::vector<int>, TermKind>& a,
                     const std::pair<std::vector<int>, TermKind>& b) {
    if (a.first != b.first) return support_less(a.first, b.first);
    return a.second < b.second;
  };
  std::map<std::pair<std::vector<int>, TermKind>, PhaseAngle, decltype(key_less)> acc(key_less);
  for (const auto& t : c.terms) {
    auto [it, fresh] = acc.try_emplace({t.support, t.kind}, t.angle);
    if (!fresh) it->second += t.angle;
  }
  GadgetCircuit out{c.n, {}};
  for (const auto& [key, angle] : acc) {
    if (!angle.is_zero()) out.terms.push_back({key.second, key.first, angle});
  }
  return out;
}

int t_count(const GadgetCircuit& c) {
  int count = 0;
  for (const auto& t : c.terms) {
    if (t.angle.is_odd_quarter_pi()) ++count;
  }
  return count;
}

Tensor monomials_to_diagonal(const MonomialMap& m, int wire_budget) {
  const int n = m.n();
  if (n > wire_budget) {
    throw ResourceLimitError(std::to_string(n) + " wires exceed the budget of " +
                             std::to_string(wire_budget));
  }
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::pair<std::size_t, PhaseAngle>> masks;
  for (const auto& [s, a] : m.terms()) {
    std::size_t mask = 0;
    for (int w : s) mask |= std::size_t{1} << (n - w);
    masks.emplace_back(mask, a);
  }
  std::vector<Complex> entries(dim * dim, Complex{0.0, 0.0});
  for (std::size_t x = 0; x < dim; ++x) {
    PhaseAngle phase;
    for (const auto& [mask, a] : masks) {
      if ((x & mask) == mask) phase += a;
    }
    entries[x * dim + x] = phase.unit();
  }
  return Tensor(static_cast<std::size_t>(n), static_cast<std::size_t>(n), std::move(entries));
}

Diagram circuit_to_diagram(const GadgetCircuit& c) {
  c.validate();
  Diagram d = identity(c.n);
  for (const auto& t : c.terms) {
    d = compose_seq(d, t.kind == TermKind::Gadget ? phase_gadget(c.n, t.support, t.angle)
                                                  : and_phase(c.n, t.support, t.angle));
  }
  return d;
}

OptimizeResult optimize(const GadgetCircuit& c) {
  c.validate();
  require_exact(c);
  OptimizeResult r;
  r.t_before = t_count(c);
  GadgetCircuit fused = fuse_gadgets(c);
  GadgetCircuit expanded{c.n, {}};
  for (const auto& t : fused.terms) {
    if (t.kind == TermKind::Gadget && t.support.size() >= 4 && t.angle.is_odd_quarter_pi()) {
      // angle = k*pi/4 with k odd; the decomposition is linear in the angle.
      const std::int64_t k = t.angle.num() * (4 / t.angle.den());
      for (auto part : decompose_pi4_gadget(t.support).terms) {
        part.angle = part.angle.scaled(k);
        expanded.terms.push_back(part);
      }
    } else {
      expanded.terms.push_back(t);
    }
  }
  r.circuit = fuse_gadgets(expanded);
  r.t_after = t_count(r.circuit);
  if (!(circuit_monomials(r.circuit) == circuit_monomials(c))) {
    throw std::logic_error("optimized circuit changes the phase polynomial");
  }
  return r;
}

}  // namespace zxkit
