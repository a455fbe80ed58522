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

#include <doctest.h>

#include <random>
#include <set>

#include "test_util.hpp"
#include "zxkit/evaluate.hpp"
#include "zxkit/generators.hpp"
#include "zxkit/rules.hpp"

using namespace zxkit;

namespace {

const PhaseAngle kPi = PhaseAngle::exact(1);

bool holds(RuleId id, const RuleParams& p) {
  return validate_rule(instantiate_rule(id, p)).equal;
}

}  // namespace

TEST_CASE("catalog covers every rule once") {
  std::set<RuleId> seen;
  for (const auto& e : rule_catalog()) {
    CHECK(seen.insert(e.id).second);
    CHECK_FALSE(e.statement.empty());
    CHECK(rule_from_name(rule_name(e.id)) == e.id);
  }
  CHECK(seen.size() == 29);
  CHECK(all_rules().size() == 29);
  CHECK_FALSE(rule_from_name("S9").has_value());
  CHECK(catalog_markdown().find("| LEM6 |") != std::string::npos);
}

TEST_CASE("every rule holds at its default parameters") {
  for (RuleId id : all_rules()) {
    CAPTURE(rule_name(id));
    auto inst = instantiate_rule(id);
    auto m = validate_rule(inst);
    CHECK(m.equal);
    CHECK(m.residual <= 1e-9);
  }
}

TEST_CASE("every color-swappable rule holds swapped") {
  for (const auto& e : rule_catalog()) {
    if (!e.signature.color_swappable) continue;
    CAPTURE(rule_name(e.id));
    RuleParams p = default_params(e.id);
    p.color_swap = true;
    CHECK(holds(e.id, p));
  }
}

TEST_CASE("spider fusion example") {
  // Z(1,2,pi/4) fused into Z(2,1,pi/2) gives Z(2,2,3pi/4).
  auto inst = instantiate_rule(RuleId::S1, {{PhaseAngle::exact(1, 4), PhaseAngle::exact(1, 2)},
                                            {1, 2, 2, 1}});
  CHECK(inst.lhs.n_inputs() == 2);
  CHECK(inst.lhs.n_outputs() == 2);
  auto m = validate_rule(inst);
  REQUIRE(m.equal);
  CHECK(test::scalar_equal(evaluate(inst.rhs),
                           evaluate(z_spider(2, 2, PhaseAngle::exact(3, 4)))));
}

TEST_CASE("triangle inverse and idempotence are exact up to scalar") {
  for (RuleId id : {RuleId::T3, RuleId::A2, RuleId::B2, RuleId::P6}) {
    CAPTURE(rule_name(id));
    auto m = validate_rule(instantiate_rule(id));
    REQUIRE(m.equal);
    REQUIRE(m.scalar.has_value());
    CHECK(std::abs(*m.scalar) > 1e-6);
  }
}

TEST_CASE("n-ary lemmas across small arities") {
  for (RuleId id : {RuleId::L1, RuleId::L2, RuleId::L3, RuleId::L4, RuleId::P7}) {
    for (int n = 0; n <= 4; ++n) {
      CAPTURE(rule_name(id));
      CAPTURE(n);
      CHECK(holds(id, {{}, {n}}));
    }
  }
  for (int k = 1; k <= 3; ++k) {
    CHECK(holds(RuleId::LEM6, {{PhaseAngle::exact(3, 7)}, {k}}));
  }
}

TEST_CASE("pi-commutation for every kappa and arity") {
  std::mt19937_64 rng(11);
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (auto k : {PhaseAngle::exact(0), kPi}) {
        CHECK(holds(RuleId::B3, {{test::random_exact(rng), k}, {n, m}}));
      }
    }
  }
}

TEST_CASE("generic angles are accepted where the signature allows") {
  std::mt19937_64 rng(5);
  CHECK(holds(RuleId::S1, {{test::random_generic(rng), test::random_generic(rng)}, {2, 1, 1, 2}}));
  CHECK(holds(RuleId::LEM5, {{test::random_generic(rng)}, {}}));
  CHECK(holds(RuleId::EQ3, {{test::random_generic(rng)}, {}}));
}

TEST_CASE("plugged three-line decomposition reduces to the two-line one") {
  const PhaseAngle beta = PhaseAngle::exact(2, 9);
  auto plugged = instantiate_rule(RuleId::EQ3, {{beta, PhaseAngle::exact(0)}, {}});
  auto two = instantiate_rule(RuleId::EQ4, {{beta}, {}});
  // |0> on line 1 and <0| below it.
  Diagram cap0 = compose_par(x_spider(1, 0), identity(2));
  CHECK(test::scalar_equal(evaluate(compose_seq(plugged.lhs, cap0)), evaluate(two.lhs)));
  CHECK(test::scalar_equal(evaluate(compose_seq(plugged.rhs, cap0)), evaluate(two.rhs)));
  CHECK(validate_rule(plugged).equal);
  CHECK(holds(RuleId::EQ3, {{beta, kPi}, {}}));
}

TEST_CASE("negative controls fail") {
  const PhaseAngle delta = PhaseAngle::exact(1, 8);
  for (RuleId id : all_rules()) {
    CAPTURE(rule_name(id));
    auto bad = perturb_rhs(instantiate_rule(id), delta);
    CHECK_FALSE(validate_rule(bad).equal);
  }
}

TEST_CASE("malformed parameters are rejected") {
  CHECK_THROWS_AS(instantiate_rule(RuleId::B1, {{PhaseAngle::exact(1, 2)}, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(instantiate_rule(RuleId::B3, {{PhaseAngle::exact(1, 3), PhaseAngle::exact(1, 4)}, {1, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(instantiate_rule(RuleId::S1, {{kPi}, {1, 1, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(instantiate_rule(RuleId::S1, {{kPi, kPi}, {1, 0, 1, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(instantiate_rule(RuleId::T1, {{}, {}, true}), std::invalid_argument);
  CHECK_THROWS_AS(instantiate_rule(RuleId::P1, {{kPi}, {0}}), std::invalid_argument);
}

TEST_CASE("corpus is deterministic and passes") {
  CorpusOptions opts;
  opts.samples = 3;
  opts.seed = 42;
  auto a = validate_corpus(opts);
  auto b = validate_corpus(opts);
  CHECK(a.all_passed());
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());
  std::set<RuleId> ids;
  for (const auto& r : a.records) ids.insert(r.id);
  CHECK(ids.size() == 29);
  CHECK(report_to_json(a, true)["records"][0].contains("elapsed_ms"));
  CHECK_FALSE(report_to_json(a)["records"][0].contains("elapsed_ms"));

  opts.only = {RuleId::B1};
  // Two colorings times two kappas.
  CHECK(validate_corpus(opts).records.size() == 12);
  opts.samples = 0;
  CHECK_THROWS_AS(validate_corpus(opts), std::invalid_argument);
}
