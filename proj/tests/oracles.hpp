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

#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "zxkit/phase_poly.hpp"

namespace zxkit::test {

// Moebius inversion of the phase function x -> sum of the active terms'
// angles, evaluated pointwise. Phases are integer multiples of pi/D for a
// common D, so the result is exact.
inline MonomialMap moebius(int n, const std::vector<PhaseTerm>& terms) {
  std::int64_t D = 1;
  for (const auto& t : terms) D = std::lcm(D, t.angle.den());
  const std::size_t dim = std::size_t{1} << n;
  auto mask_of = [&](const std::vector<int>& s) {
    std::size_t m = 0;
    for (int w : s) m |= std::size_t{1} << (w - 1);
    return m;
  };
  std::vector<std::int64_t> f(dim, 0);
  for (std::size_t x = 0; x < dim; ++x) {
    for (const auto& t : terms) {
      const std::size_t m = mask_of(t.support);
      const std::int64_t a = t.angle.num() * (D / t.angle.den());
      const bool on = t.kind == TermKind::Gadget ? std::popcount(x & m) % 2 == 1
                                                 : (x & m) == m;
      if (on) f[x] += a;
    }
  }
  MonomialMap out(n);
  for (std::size_t T = 1; T < dim; ++T) {
    std::int64_t c = 0;
    for (std::size_t U = T;; U = (U - 1) & T) {
      const int sign = (std::popcount(T) - std::popcount(U)) % 2 ? -1 : 1;
      c += sign * f[U];
      if (U == 0) break;
    }
    std::vector<int> subset;
    for (int w = 1; w <= n; ++w) {
      if (T >> (w - 1) & 1) subset.push_back(w);
    }
    out.add(subset, PhaseAngle::exact(c, D));
  }
  return out;
}

}  // namespace zxkit::test
