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

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace zxkit {

using Complex = std::complex<double>;

/**
 * Dense qubit tensor viewed as a 2^outputs x 2^inputs matrix.
 *
 * Entries are row-major with output indices first. Within a row or column
 * index, the first wire is the most significant bit, so the tensor of a
 * parallel composition is the Kronecker product of the parts.
 */
class Tensor {
 public:
  Tensor() : Tensor(0, 0) {}
  Tensor(std::size_t n_outputs, std::size_t n_inputs);
  Tensor(std::size_t n_outputs, std::size_t n_inputs,
         std::vector<Complex> entries);

  static Tensor identity(std::size_t wires);
  static Tensor scalar(Complex value);
  /// Column vector, one output per wire.
  static Tensor state(std::size_t wires, std::vector<Complex> amplitudes);

  std::size_t n_outputs() const { return n_out_; }
  std::size_t n_inputs() const { return n_in_; }
  std::size_t rows() const { return std::size_t{1} << n_out_; }
  std::size_t cols() const { return std::size_t{1} << n_in_; }
  std::size_t size() const { return data_.size(); }
  /// One dimension of 2 per open wire, outputs first.
  std::vector<std::size_t> shape() const;

  Complex& at(std::size_t row, std::size_t col) { return data_[row * cols() + col]; }
  const Complex& at(std::size_t row, std::size_t col) const {
    return data_[row * cols() + col];
  }
  const std::vector<Complex>& entries() const { return data_; }
  std::vector<Complex>& entries() { return data_; }

  double max_abs() const;
  bool is_zero() const { return max_abs() == 0.0; }

  /// Matrix transpose: swaps the roles of inputs and outputs.
  Tensor transposed() const;

 private:
  std::size_t n_out_;
  std::size_t n_in_;
  std::vector<Complex> data_;
};

/// `after * before` as matrices. Throws std::invalid_argument on mismatch.
Tensor matmul(const Tensor& after, const Tensor& before);
Tensor kron(const Tensor& left, const Tensor& right);
/// Largest entrywise |a - b|; throws std::invalid_argument on shape mismatch.
double max_abs_diff(const Tensor& a, const Tensor& b);

struct ScalarMatch {
  bool equal = false;
  /// lambda with a ~= lambda * b; absent when no nonzero lambda exists.
  std::optional<Complex> scalar;
  /// Max-abs deviation |a - lambda b| after both tensors are normalized to
  /// unit max-abs entry.
  double residual = 0.0;
};

inline constexpr double kDefaultTolerance = 1e-9;

/**
 * Equality up to a nonzero scalar.
 *
 * lambda is aligned on the largest-magnitude entry of `b`. Zero equals zero
 * (lambda = 1); zero never equals a nonzero tensor.
 */
ScalarMatch equal_up_to_scalar(const Tensor& a, const Tensor& b,
                               double tol = kDefaultTolerance);

}  // namespace zxkit
