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

#include "doctest.h"
#include "test_util.hpp"
#include "zxkit/tensor.hpp"

using namespace zxkit;

TEST_CASE("tensor shape and construction") {
  Tensor t(2, 1);
  CHECK(t.size() == 8);
  CHECK(t.rows() == 4);
  CHECK(t.cols() == 2);
  CHECK(t.shape() == std::vector<std::size_t>{2, 2, 2});
  CHECK_THROWS_AS(Tensor(1, 1, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(Tensor(0, 0, {Complex(std::nan(""), 0)}),
                  std::invalid_argument);
}

TEST_CASE("matmul and kron") {
  auto x = test::matrix(1, 1, {0, 1, 1, 0});
  auto z = test::matrix(1, 1, {1, 0, 0, -1});
  auto xz = matmul(x, z);
  CHECK(max_abs_diff(xz, test::matrix(1, 1, {0, -1, 1, 0})) == 0.0);
  auto k = kron(x, Tensor::identity(1));
  CHECK(k.at(2, 0) == Complex(1));
  CHECK(k.at(3, 1) == Complex(1));
  CHECK(k.at(0, 0) == Complex(0));
  CHECK_THROWS_AS(matmul(Tensor(1, 2), Tensor(1, 1)), std::invalid_argument);
  CHECK(max_abs_diff(kron(Tensor::scalar(1.0), x), x) == 0.0);
}

TEST_CASE("equal_up_to_scalar") {
  auto t = test::matrix(1, 1, {1, Complex(0, 2), 3, 4});
  auto t2 = test::matrix(1, 1, {2, Complex(0, 4), 6, 8});

  SUBCASE("t vs 2t") {
    auto m = equal_up_to_scalar(t2, t);
    CHECK(m.equal);
    REQUIRE(m.scalar);
    CHECK(std::abs(*m.scalar - Complex(2.0)) < 1e-15);
  }
  SUBCASE("t vs zero") {
    auto m = equal_up_to_scalar(t, Tensor(1, 1));
    CHECK_FALSE(m.equal);
    CHECK_FALSE(m.scalar);
    CHECK_FALSE(equal_up_to_scalar(Tensor(1, 1), t).equal);
  }
  SUBCASE("zero vs zero") {
    auto m = equal_up_to_scalar(Tensor(1, 1), Tensor(1, 1));
    CHECK(m.equal);
    CHECK(*m.scalar == Complex(1.0));
  }
  SUBCASE("perturbed") {
    auto p = t2;
    p.at(1, 1) += 1e-3;
    CHECK_FALSE(equal_up_to_scalar(p, t).equal);
  }
  SUBCASE("shape mismatch") {
    CHECK_THROWS_AS(equal_up_to_scalar(Tensor(1, 0), Tensor(0, 1)),
                    std::invalid_argument);
  }
  SUBCASE("complex scalar") {
    auto rot = t;
    for (auto& z : rot.entries()) z *= std::polar(3.0, 1.1);
    auto m = equal_up_to_scalar(rot, t);
    CHECK(m.equal);
    CHECK(std::abs(*m.scalar - std::polar(3.0, 1.1)) < 1e-12);
  }
}
