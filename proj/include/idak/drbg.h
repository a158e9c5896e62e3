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

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <span>

#include "idak/bytes.h"

namespace idak {

// Deterministic byte stream: block i = SHA-256(seed || be64(i)).
// Not thread-safe; give every concurrent task its own instance via Child().
class Drbg {
 public:
  using result_type = uint64_t;

  explicit Drbg(ByteView seed);
  explicit Drbg(std::string_view seed) : Drbg(ByteView(ToBytes(seed))) {}

  void Fill(std::span<uint8_t> out);
  Bytes Take(size_t n);
  uint64_t NextU64();
  // Uniform in [0, 1).
  double NextUnit();
  // Uniform in [0, bound) by rejection sampling; bound must be positive.
  mpz_class UniformBelow(const mpz_class& bound);

  // Independent stream keyed by (seed, index); does not consume this stream.
  Drbg Child(uint64_t index) const;
  // Independent stream seeded from the next 32 bytes of this stream.
  Drbg Fork();

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return NextU64(); }

 private:
  void Refill();

  Bytes seed_;
  uint64_t counter_ = 0;
  Bytes block_;
  size_t offset_ = 0;
};

}  // namespace idak
