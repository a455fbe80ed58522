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

#include "zxkit/phase_angle.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace zxkit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_radians(double rad) {
  double r = std::fmod(rad, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("bad angle literal '" + std::string(whole) +
                                "'");
  }
  return v;
}

}  // namespace

PhaseAngle PhaseAngle::exact(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("angle denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  num /= g;
  den /= g;
  std::int64_t period = 2 * den;
  num %= period;
  if (num < 0) num += period;
  PhaseAngle a;
  a.exact_ = true;
  a.num_ = num;
  a.den_ = den;
  if (num == 0) a.den_ = 1;
  return a;
}

PhaseAngle PhaseAngle::radians(double rad) {
  if (!std::isfinite(rad)) throw std::invalid_argument("angle is not finite");
  PhaseAngle a;
  a.exact_ = false;
  a.num_ = 0;
  a.den_ = 1;
  a.rad_ = wrap_radians(rad);
  return a;
}

PhaseAngle PhaseAngle::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty angle literal");

  auto pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) {
    if (s.find_first_of(".eE") == std::string_view::npos) {
      return exact(parse_int(s, text), 1);
    }
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw std::invalid_argument("bad angle literal '" + std::string(text) +
                                  "'");
    }
    return radians(v);
  }

  std::string_view before = s.substr(0, pi_pos);
  std::string_view after = s.substr(pi_pos + 2);
  std::int64_t num = 1;
  std::int64_t den = 1;
  if (!after.empty()) {
    // 3pi/4
    if (after.front() != '/') {
      throw std::invalid_argument("bad angle literal '" + std::string(text) +
                                  "'");
    }
    den = parse_int(after.substr(1), text);
    if (before == "-") {
      num = -1;
    } else if (!before.empty()) {
      num = parse_int(before, text);
    }
    return exact(num, den);
  }
  // 1/4pi, -pi, 3pi
  if (before.empty() || before == "+") return exact(1, 1);
  if (before == "-") return exact(-1, 1);
  auto slash = before.find('/');
  if (slash == std::string_view::npos) return exact(parse_int(before, text), 1);
  num = parse_int(before.substr(0, slash), text);
  den = parse_int(before.substr(slash + 1), text);
  return exact(num, den);
}

double PhaseAngle::to_radians() const {
  if (!exact_) return rad_;
  return static_cast<double>(num_) * std::numbers::pi /
         static_cast<double>(den_);
}

std::complex<double> PhaseAngle::unit() const {
  if (exact_ && (2 % den_ == 0 || den_ == 2)) {
    // num/den in {0, 1/2, 1, 3/2}
    std::int64_t quarter = num_ * (2 / den_);
    switch (quarter % 4) {
      case 0:
        return {1.0, 0.0};
      case 1:
        return {0.0, 1.0};
      case 2:
        return {-1.0, 0.0};
      default:
        return {0.0, -1.0};
    }
  }
  return std::polar(1.0, to_radians());
}

bool PhaseAngle::is_zero() const { return exact_ ? num_ == 0 : rad_ == 0.0; }

bool PhaseAngle::is_odd_quarter_pi() const {
  if (!exact_) {
    throw std::invalid_argument("T-count requires exact angles, got " +
                                to_string());
  }
  return den_ == 4;
}

PhaseAngle PhaseAngle::scaled(std::int64_t k) const {
  if (!exact_) return radians(rad_ * static_cast<double>(k));
  __int128 period = 2 * static_cast<__int128>(den_);
  __int128 kk = static_cast<__int128>(k) % period;
  __int128 n = (static_cast<__int128>(num_) * kk) % period;
  return exact(static_cast<std::int64_t>(n), den_);
}

PhaseAngle PhaseAngle::operator-() const {
  if (!exact_) return radians(-rad_);
  return exact(-num_, den_);
}

PhaseAngle PhaseAngle::operator+(const PhaseAngle& other) const {
  if (!exact_ || !other.exact_) {
    return radians(to_radians() + other.to_radians());
  }
  std::int64_t l = std::lcm(den_, other.den_);
  __int128 n = static_cast<__int128>(num_) * (l / den_) +
               static_cast<__int128>(other.num_) * (l / other.den_);
  n %= 2 * static_cast<__int128>(l);
  return exact(static_cast<std::int64_t>(n), l);
}

PhaseAngle PhaseAngle::operator-(const PhaseAngle& other) const {
  return *this + (-other);
}

PhaseAngle& PhaseAngle::operator+=(const PhaseAngle& other) {
  *this = *this + other;
  return *this;
}

bool PhaseAngle::operator==(const PhaseAngle& other) const {
  if (exact_ != other.exact_) return false;
  if (exact_) return num_ == other.num_ && den_ == other.den_;
  return rad_ == other.rad_;
}

bool PhaseAngle::approx_equal(const PhaseAngle& other, double tol) const {
  double d = std::fabs(to_radians() - other.to_radians());
  d = std::fmod(d, kTwoPi);
  return std::min(d, kTwoPi - d) <= tol;
}

std::string PhaseAngle::to_string() const {
  if (!exact_) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), rad_);
    std::string s(buf, ptr);
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
  }
  if (num_ == 0) return "0";
  if (den_ == 1) return num_ == 1 ? "pi" : std::to_string(num_) + "pi";
  return std::to_string(num_) + "/" + std::to_string(den_) + "pi";
}

std::ostream& operator<<(std::ostream& os, const PhaseAngle& a) {
  return os << a.to_string();
}

}  // namespace zxkit
