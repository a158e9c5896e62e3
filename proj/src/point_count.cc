// Copyright 2026 The IDAK Authors
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

#include "idak/point_count.h"

#include <cassert>

namespace idak {

namespace {

uint64_t PowMod(uint64_t base, uint64_t exp, uint64_t mod) {
  uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

// Number of y in F_p with y^2 = x^3 + x.
uint64_t PointsAtX(uint64_t x, uint64_t p) {
  uint64_t rhs = (x * x % p * x + x) % p;
  if (rhs == 0) return 1;
  return PowMod(rhs, (p - 1) / 2, p) == 1 ? 2 : 0;
}

}  // namespace

uint64_t CountCurvePointsSerial(uint64_t p) {
  assert(p < (uint64_t{1} << 32));
  uint64_t count = 1;
  for (uint64_t x = 0; x < p; ++x) count += PointsAtX(x, p);
  return count;
}

uint64_t CountCurvePoints(uint64_t p) {
  assert(p < (uint64_t{1} << 32));
  uint64_t count = 1;
  const int64_t n = static_cast<int64_t>(p);
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (int64_t x = 0; x < n; ++x) {
    count += PointsAtX(static_cast<uint64_t>(x), p);
  }
  return count;
}

}  // namespace idak
