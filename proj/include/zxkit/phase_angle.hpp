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
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace zxkit {

/**
 * An angle in [0, 2pi).
 *
 * Exact angles are rational multiples of pi kept in lowest terms with the
 * numerator reduced modulo 2*den. Generic angles carry plain radians and are
 * only meant for randomized testing. Arithmetic between two exact angles
 * stays exact; anything touching a generic angle becomes generic.
 */
class PhaseAngle {
 public:
  /// Zero, exact.
  PhaseAngle() = default;

  /// (num/den)*pi. Throws std::invalid_argument when den == 0.
  static PhaseAngle exact(std::int64_t num, std::int64_t den = 1);
  static PhaseAngle radians(double rad);

  /**
   * Parses `0`, `pi`, `-pi`, `3pi`, `1/4pi`, `-1/2pi`, `3pi/4`, or a plain
   * decimal (radians, generic). Throws std::invalid_argument on anything else.
   */
  static PhaseAngle parse(std::string_view text);

  bool is_exact() const { return exact_; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_radians() const;

  /// e^{i*angle}; exact (no rounding) at multiples of pi/2.
  std::complex<double> unit() const;

  bool is_zero() const;

  /// Odd multiple of pi/4. Throws std::invalid_argument for generic angles.
  bool is_odd_quarter_pi() const;

  /// Multiplies by an integer; exact angles stay exact.
  PhaseAngle scaled(std::int64_t k) const;

  PhaseAngle operator-() const;
  PhaseAngle operator+(const PhaseAngle& other) const;
  PhaseAngle operator-(const PhaseAngle& other) const;
  PhaseAngle& operator+=(const PhaseAngle& other);

  /// Structural equality: exact vs exact compares num/den, generic vs
  /// generic compares radians, mixed forms are never equal.
  bool operator==(const PhaseAngle& other) const;

  /// Equality of the represented angle mod 2pi within `tol` radians.
  bool approx_equal(const PhaseAngle& other, double tol = 1e-12) const;

  /// Text form used by the file formats: `0`, `pi`, `1/4pi`, `7/4pi`;
  /// generic angles print as decimal radians.
  std::string to_string() const;

 private:
  bool exact_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double rad_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const PhaseAngle& a);

inline PhaseAngle operator""_pi(unsigned long long k) {
  return PhaseAngle::exact(static_cast<std::int64_t>(k), 1);
}

}  // namespace zxkit
