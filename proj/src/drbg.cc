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

#include "idak/drbg.h"

#include <cassert>

namespace idak {

namespace {

Bytes Be64(uint64_t v) {
  Bytes out(8);
  for (int i = 7; i >= 0; --i) {
    out[i] = static_cast<uint8_t>(v);
    v >>= 8;
  }
  return out;
}

}  // namespace

Drbg::Drbg(ByteView seed) : seed_(seed.begin(), seed.end()) {}

void Drbg::Refill() {
  block_ = Sha256({seed_, Be64(counter_++)});
  offset_ = 0;
}

void Drbg::Fill(std::span<uint8_t> out) {
  for (auto& b : out) {
    if (offset_ == block_.size()) Refill();
    b = block_[offset_++];
  }
}

Bytes Drbg::Take(size_t n) {
  Bytes out(n);
  Fill(out);
  return out;
}

uint64_t Drbg::NextU64() {
  uint8_t buf[8];
  Fill(buf);
  uint64_t v = 0;
  for (uint8_t b : buf) v = v << 8 | b;
  return v;
}

double Drbg::NextUnit() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

mpz_class Drbg::UniformBelow(const mpz_class& bound) {
  assert(bound > 0);
  if (bound == 1) return 0;
  mpz_class top = bound - 1;
  size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
  size_t nbytes = (bits + 7) / 8;
  size_t excess = nbytes * 8 - bits;
  for (;;) {
    Bytes buf = Take(nbytes);
    buf[0] &= static_cast<uint8_t>(0xff >> excess);
    mpz_class v = FromBigEndian(buf);
    if (v < bound) return v;
  }
}

Drbg Drbg::Child(uint64_t index) const {
  static const Bytes kLabel = ToBytes("idak-drbg-child");
  return Drbg(Sha256({kLabel, seed_, Be64(index)}));
}

Drbg Drbg::Fork() { return Drbg(Take(32)); }

}  // namespace idak
