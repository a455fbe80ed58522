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

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "zxkit/diagram_json.hpp"
#include "zxkit/errors.hpp"
#include "zxkit/rules.hpp"

namespace zxkit {

namespace {

struct Variant {
  bool color_swap = false;
  std::vector<PhaseAngle> kappas;
};

std::vector<Variant> variants_of(const CatalogEntry& e) {
  const auto& s = e.signature;
  std::vector<std::vector<PhaseAngle>> kappa_sets{{}};
  for (int k = 0; k < s.kappa_angles; ++k) {
    std::vector<std::vector<PhaseAngle>> next;
    for (const auto& set : kappa_sets) {
      for (auto v : {PhaseAngle::exact(0), PhaseAngle::exact(1)}) {
        auto grown = set;
        grown.push_back(v);
        next.push_back(grown);
      }
    }
    kappa_sets = std::move(next);
  }
  if (s.optional_kappa) {
    std::vector<std::vector<PhaseAngle>> next;
    for (const auto& set : kappa_sets) {
      next.push_back(set);
      for (auto v : {PhaseAngle::exact(0), PhaseAngle::exact(1)}) {
        auto grown = set;
        grown.push_back(v);
        next.push_back(grown);
      }
    }
    kappa_sets = std::move(next);
  }
  std::vector<Variant> out;
  for (bool swap : {false, true}) {
    if (swap && !s.color_swappable) continue;
    for (const auto& k : kappa_sets) out.push_back({swap, k});
  }
  return out;
}

PhaseAngle random_angle(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> den_d(1, 16);
  const std::int64_t den = den_d(rng);
  std::uniform_int_distribution<std::int64_t> num_d(0, 2 * den - 1);
  return PhaseAngle::exact(num_d(rng), den);
}

}  // namespace

std::size_t ValidationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const auto& r) { return r.passed(); }));
}

ValidationReport validate_corpus(const CorpusOptions& opts) {
  if (opts.samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (opts.max_arity < 0) throw std::invalid_argument("max_arity must be >= 0");
  std::mt19937_64 rng(opts.seed);
  ValidationReport report;
  for (const auto& entry : rule_catalog()) {
    if (!opts.only.empty() &&
        std::find(opts.only.begin(), opts.only.end(), entry.id) == opts.only.end()) {
      continue;
    }
    const auto& s = entry.signature;
    for (const auto& variant : variants_of(entry)) {
      for (int i = 0; i < opts.samples; ++i) {
        RuleParams p;
        p.color_swap = variant.color_swap;
        for (int g = 0; g < s.generic_angles; ++g) p.angles.push_back(random_angle(rng));
        p.angles.insert(p.angles.end(), variant.kappas.begin(), variant.kappas.end());

        ValidationRecord rec{entry.id, p, {}, 0.0, {}};
        const auto start = std::chrono::steady_clock::now();
        try {
          RuleInstance inst;
          if (s.arity_min.size() == 1) {
            const int lo = s.arity_min[0];
            const int span = std::max(opts.max_arity - lo + 1, 1);
            p.arities = {lo + i % span};
            inst = instantiate_rule(entry.id, p);
          } else {
            for (int attempt = 0;; ++attempt) {
              p.arities.clear();
              for (int lo : s.arity_min) {
                std::uniform_int_distribution<int> d(lo, std::max(lo, opts.max_arity));
                p.arities.push_back(d(rng));
              }
              inst = instantiate_rule(entry.id, p);
              const auto open = [](const Diagram& d) { return d.n_inputs() + d.n_outputs(); };
              const auto budget = static_cast<std::size_t>(opts.eval.wire_budget);
              if (std::max(open(inst.lhs), open(inst.rhs)) <= budget) break;
              if (attempt > 1000) throw ResourceLimitError("no arity draw fits the wire budget");
            }
          }
          rec.params = p;
          rec.match = validate_rule(inst, opts.tolerance, opts.eval);
        } catch (const std::exception& e) {
          rec.params = p;
          rec.error = e.what();
        }
        rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        report.records.push_back(std::move(rec));
      }
    }
  }
  return report;
}

nlohmann::json params_to_json(const RuleParams& p) {
  nlohmann::json angles = nlohmann::json::array();
  for (const auto& a : p.angles) angles.push_back(phase_to_json(a));
  return {{"angles", angles}, {"arities", p.arities}, {"color_swap", p.color_swap}};
}

nlohmann::json report_to_json(const ValidationReport& report, bool timings) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) {
    nlohmann::json j{{"rule", std::string(rule_name(r.id))},
                     {"params", params_to_json(r.params)},
                     {"passed", r.passed()},
                     {"residual", r.match.residual}};
    if (r.match.scalar) {
      j["scalar"] = {r.match.scalar->real(), r.match.scalar->imag()};
    } else {
      j["scalar"] = nullptr;
    }
    if (!r.error.empty()) j["error"] = r.error;
    if (timings) j["elapsed_ms"] = r.elapsed_ms;
    records.push_back(std::move(j));
  }
  return {{"total", report.records.size()},
          {"passed", report.passed()},
          {"failed", report.failed()},
          {"records", records}};
}

}  // namespace zxkit
