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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace idak {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

Bytes ToBytes(std::string_view s);

std::string HexEncode(ByteView data);
// Throws kDecode on odd length or non-hex characters.
Bytes HexDecode(std::string_view hex);

// Minimal big-endian magnitude (empty for zero).
Bytes ToBigEndian(const mpz_class& v);
// Fixed-width big-endian, left padded with zeros. Throws if v does not fit.
Bytes ToBigEndian(const mpz_class& v, size_t width);
mpz_class FromBigEndian(ByteView data);

size_t BitLength(const mpz_class& v);

void Append(Bytes& out, ByteView data);
void AppendU16(Bytes& out, uint16_t v);
void AppendU32(Bytes& out, uint32_t v);

// Forward-only reader over a byte buffer; every short read throws kDecode.
class ByteReader {
 public:
  explicit ByteReader(ByteView data) : data_(data) {}

  uint8_t U8();
  uint16_t U16();
  ByteView Take(size_t n);
  bool AtEnd() const { return pos_ == data_.size(); }
  size_t remaining() const { return data_.size() - pos_; }

 private:
  ByteView data_;
  size_t pos_ = 0;
};

// SHA-256 over the concatenation of the given parts.
Bytes Sha256(std::initializer_list<ByteView> parts);

}  // namespace idak
