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

#include "zxkit/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace zxkit {

Tensor::Tensor(std::size_t n_outputs, std::size_t n_inputs)
    : n_out_(n_outputs),
      n_in_(n_inputs),
      data_(std::size_t{1} << (n_outputs + n_inputs), Complex{0.0, 0.0}) {}

Tensor::Tensor(std::size_t n_outputs, std::size_t n_inputs,
               std::vector<Complex> entries)
    : n_out_(n_outputs), n_in_(n_inputs), data_(std::move(entries)) {
  if (data_.size() != (std::size_t{1} << (n_out_ + n_in_))) {
    throw std::invalid_argument("tensor needs 2^" +
                                std::to_string(n_out_ + n_in_) +
                                " entries, got " + std::to_string(data_.size()));
  }
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("tensor entries must be finite");
    }
  }
}

Tensor Tensor::identity(std::size_t wires) {
  Tensor t(wires, wires);
  for (std::size_t i = 0; i < t.rows(); ++i) t.at(i, i) = 1.0;
  return t;
}

Tensor Tensor::scalar(Complex value) { return Tensor(0, 0, {value}); }

Tensor Tensor::state(std::size_t wires, std::vector<Complex> amplitudes) {
  return Tensor(wires, 0, std::move(amplitudes));
}

std::vector<std::size_t> Tensor::shape() const {
  return std::vector<std::size_t>(n_out_ + n_in_, 2);
}

double Tensor::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

Tensor Tensor::transposed() const {
  Tensor t(n_in_, n_out_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Tensor matmul(const Tensor& after, const Tensor& before) {
  if (after.n_inputs() != before.n_outputs()) {
    throw std::invalid_argument("matmul: inner wire counts differ");
  }
  Tensor out(after.n_outputs(), before.n_inputs());
  for (std::size_t r = 0; r < after.rows(); ++r) {
    for (std::size_t k = 0; k < after.cols(); ++k) {
      const Complex a = after.at(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < before.cols(); ++c) {
        out.at(r, c) += a * before.at(k, c);
      }
    }
  }
  return out;
}

Tensor kron(const Tensor& left, const Tensor& right) {
  Tensor out(left.n_outputs() + right.n_outputs(),
             left.n_inputs() + right.n_inputs());
  for (std::size_t r1 = 0; r1 < left.rows(); ++r1) {
    for (std::size_t c1 = 0; c1 < left.cols(); ++c1) {
      const Complex a = left.at(r1, c1);
      for (std::size_t r2 = 0; r2 < right.rows(); ++r2) {
        for (std::size_t c2 = 0; c2 < right.cols(); ++c2) {
          out.at(r1 * right.rows() + r2, c1 * right.cols() + c2) =
              a * right.at(r2, c2);
        }
      }
    }
  }
  return out;
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
  if (a.n_outputs() != b.n_outputs() || a.n_inputs() != b.n_inputs()) {
    throw std::invalid_argument("tensor shapes differ");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return m;
}

ScalarMatch equal_up_to_scalar(const Tensor& a, const Tensor& b, double tol) {
  if (a.n_outputs() != b.n_outputs() || a.n_inputs() != b.n_inputs()) {
    throw std::invalid_argument(
        "equal_up_to_scalar: shapes differ (" + std::to_string(a.n_outputs()) +
        "x" + std::to_string(a.n_inputs()) + " vs " +
        std::to_string(b.n_outputs()) + "x" + std::to_string(b.n_inputs()) +
        ")");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  const double na = a.max_abs();
  const double nb = b.max_abs();
  ScalarMatch m;
  if (na == 0.0 && nb == 0.0) {
    m.equal = true;
    m.scalar = Complex{1.0, 0.0};
    return m;
  }
  if (na == 0.0 || nb == 0.0) {
    m.equal = false;
    m.residual = 1.0;
    return m;
  }

  std::size_t pivot = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    double v = std::abs(b.entries()[i]);
    if (v > best) {
      best = v;
      pivot = i;
    }
  }
  const Complex lambda = a.entries()[pivot] / b.entries()[pivot];
  double residual = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    residual = std::max(residual,
                        std::abs(a.entries()[i] - lambda * b.entries()[i]));
  }
  m.residual = residual / na;
  if (lambda != Complex{}) m.scalar = lambda;
  m.equal = m.scalar.has_value() && m.residual <= tol;
  return m;
}

}  // namespace zxkit
