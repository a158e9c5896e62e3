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

#include "idak/bytes.h"

#include <openssl/evp.h>

#include "idak/error.h"

namespace idak {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedElement: return "malformed-element";
    case ErrorCode::kParameterSearchFailed: return "parameter-search-failed";
    case ErrorCode::kInvalidParams: return "invalid-params";
    case ErrorCode::kHashFailure: return "hash-failure";
    case ErrorCode::kInvalidIdentity: return "invalid-identity";
    case ErrorCode::kInvalidFlow: return "invalid-flow";
    case ErrorCode::kRejectedPoint: return "rejected-point";
    case ErrorCode::kInvalidEphemeral: return "invalid-ephemeral";
    case ErrorCode::kDegenerateExponent: return "degenerate-exponent";
    case ErrorCode::kStaleOracle: return "stale-oracle";
    case ErrorCode::kNoKey: return "no-key";
    case ErrorCode::kNoSuchPrincipal: return "no-such-principal";
    case ErrorCode::kNoSuchOracle: return "no-such-oracle";
    case ErrorCode::kNotTestable: return "not-testable";
    case ErrorCode::kTestRefused: return "test-refused";
    case ErrorCode::kDecode: return "decode-error";
  }
  return "unknown";
}

Bytes ToBytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

std::string HexEncode(ByteView data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (uint8_t b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

namespace {

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Bytes HexDecode(std::string_view hex) {
  IDAK_ENFORCE(hex.size() % 2 == 0, ErrorCode::kDecode, "odd-length hex");
  Bytes out(hex.size() / 2);
  for (size_t i = 0; i < out.size(); ++i) {
    int hi = HexValue(hex[2 * i]);
    int lo = HexValue(hex[2 * i + 1]);
    IDAK_ENFORCE(hi >= 0 && lo >= 0, ErrorCode::kDecode, "non-hex character");
    out[i] = static_cast<uint8_t>(hi << 4 | lo);
  }
  return out;
}

Bytes ToBigEndian(const mpz_class& v) {
  if (v == 0) return {};
  size_t n = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
  Bytes out(n);
  size_t written = 0;
  mpz_export(out.data(), &written, 1, 1, 1, 0, v.get_mpz_t());
  out.resize(written);
  return out;
}

Bytes ToBigEndian(const mpz_class& v, size_t width) {
  Bytes mag = ToBigEndian(v);
  IDAK_ENFORCE(mag.size() <= width, ErrorCode::kDecode,
               "integer does not fit in " + std::to_string(width) + " bytes");
  Bytes out(width - mag.size(), 0);
  out.insert(out.end(), mag.begin(), mag.end());
  return out;
}

mpz_class FromBigEndian(ByteView data) {
  mpz_class v;
  if (!data.empty()) {
    mpz_import(v.get_mpz_t(), data.size(), 1, 1, 1, 0, data.data());
  }
  return v;
}

size_t BitLength(const mpz_class& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

void Append(Bytes& out, ByteView data) {
  out.insert(out.end(), data.begin(), data.end());
}

void AppendU16(Bytes& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v));
}

void AppendU32(Bytes& out, uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<uint8_t>(v >> shift));
  }
}

uint8_t ByteReader::U8() { return Take(1)[0]; }

uint16_t ByteReader::U16() {
  auto b = Take(2);
  return static_cast<uint16_t>(b[0] << 8 | b[1]);
}

ByteView ByteReader::Take(size_t n) {
  IDAK_ENFORCE(remaining() >= n, ErrorCode::kDecode, "truncated input");
  ByteView out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

Bytes Sha256(std::initializer_list<ByteView> parts) {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  for (ByteView part : parts) {
    EVP_DigestUpdate(ctx, part.data(), part.size());
  }
  Bytes out(32);
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, out.data(), &len);
  EVP_MD_CTX_free(ctx);
  return out;
}

}  // namespace idak
