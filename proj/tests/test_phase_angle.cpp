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

#include <numbers>
#include <numeric>

#include "doctest.h"
#include "test_util.hpp"
#include "zxkit/phase_angle.hpp"

using namespace zxkit;

TEST_CASE("exact angles are reduced and normalized") {
  auto a = PhaseAngle::exact(6, 8);
  CHECK(a.num() == 3);
  CHECK(a.den() == 4);
  CHECK(PhaseAngle::exact(-1, 4) == PhaseAngle::exact(7, 4));
  CHECK(PhaseAngle::exact(9, 4) == PhaseAngle::exact(1, 4));
  CHECK(PhaseAngle::exact(4, 2).is_zero());
  CHECK(PhaseAngle::exact(3, -4) == PhaseAngle::exact(5, 4));
  CHECK_THROWS_AS(PhaseAngle::exact(1, 0), std::invalid_argument);
}

TEST_CASE("normalization is idempotent and arithmetic stays exact") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto a = test::random_exact(rng);
    auto b = test::random_exact(rng);
    CHECK(PhaseAngle::exact(a.num(), a.den()) == a);
    CHECK(std::gcd(a.num(), a.den()) == (a.num() == 0 ? a.den() : 1));
    CHECK(a.num() >= 0);
    CHECK(a.num() < 2 * a.den());
    auto s = a + b;
    CHECK(s.is_exact());
    CHECK((s - b) == a);
    CHECK((a + (-a)).is_zero());
    CHECK(a.scaled(3) == a + a + a);
    CHECK(a.scaled(-2) == -(a + a));
  }
}

TEST_CASE("mixing generic and exact gives generic") {
  auto g = PhaseAngle::radians(0.25);
  auto e = PhaseAngle::exact(1, 2);
  auto s = g + e;
  CHECK_FALSE(s.is_exact());
  CHECK(s.to_radians() == doctest::Approx(0.25 + std::numbers::pi / 2));
  CHECK(PhaseAngle::radians(-0.5).to_radians() ==
        doctest::Approx(2 * std::numbers::pi - 0.5));
  CHECK_FALSE(g == PhaseAngle::exact(0));
}

TEST_CASE("unit values are exact at quarter turns") {
  CHECK(PhaseAngle::exact(0).unit() == Complex(1, 0));
  CHECK(PhaseAngle::exact(1, 2).unit() == Complex(0, 1));
  CHECK(PhaseAngle::exact(1).unit() == Complex(-1, 0));
  CHECK(PhaseAngle::exact(3, 2).unit() == Complex(0, -1));
  auto q = PhaseAngle::exact(1, 4).unit();
  CHECK(q.real() == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("parse and print") {
  CHECK(PhaseAngle::parse("1/4pi") == PhaseAngle::exact(1, 4));
  CHECK(PhaseAngle::parse("-1/2pi") == PhaseAngle::exact(3, 2));
  CHECK(PhaseAngle::parse("0") == PhaseAngle::exact(0));
  CHECK(PhaseAngle::parse("pi") == PhaseAngle::exact(1));
  CHECK(PhaseAngle::parse("-pi") == PhaseAngle::exact(1));
  CHECK(PhaseAngle::parse("3pi/4") == PhaseAngle::exact(3, 4));
  CHECK(PhaseAngle::parse("2pi").is_zero());
  CHECK_FALSE(PhaseAngle::parse("0.5").is_exact());
  CHECK_THROWS_AS(PhaseAngle::parse("x/4pi"), std::invalid_argument);
  CHECK_THROWS_AS(PhaseAngle::parse(""), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto a = test::random_exact(rng);
    CHECK(PhaseAngle::parse(a.to_string()) == a);
  }
  CHECK(PhaseAngle::exact(7, 4).to_string() == "7/4pi");
  CHECK(PhaseAngle::exact(1).to_string() == "pi");
}

TEST_CASE("T-count predicate") {
  CHECK(PhaseAngle::exact(1, 4).is_odd_quarter_pi());
  CHECK(PhaseAngle::exact(7, 4).is_odd_quarter_pi());
  CHECK_FALSE(PhaseAngle::exact(1, 2).is_odd_quarter_pi());
  CHECK_FALSE(PhaseAngle::exact(1, 8).is_odd_quarter_pi());
  CHECK_THROWS_AS(PhaseAngle::radians(0.1).is_odd_quarter_pi(),
                  std::invalid_argument);
}
