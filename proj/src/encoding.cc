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

#include "idak/encoding.h"

#include "idak/error.h"

namespace idak {

Bytes EncodePoint(const GroupParams& params, const GElem& P) {
  if (P.is_identity()) return {kPointIdentityTag};
  size_t width = params.field_bytes();
  Bytes out{kPointAffineTag};
  Append(out, ToBigEndian(P.x(), width));
  Append(out, ToBigEndian(P.y(), width));
  return out;
}

GElem DecodePoint(const GroupParams& params, ByteReader& in) {
  uint8_t tag = in.U8();
  if (tag == kPointIdentityTag) return GElem::Identity();
  IDAK_ENFORCE(tag == kPointAffineTag, ErrorCode::kDecode,
               "unknown point tag");
  size_t width = params.field_bytes();
  mpz_class x = FromBigEndian(in.Take(width));
  mpz_class y = FromBigEndian(in.Take(width));
  GElem P(std::move(x), std::move(y));
  IDAK_ENFORCE(OnCurve(params, P), ErrorCode::kMalformedElement,
               "decoded point not on curve");
  return P;
}

GElem DecodePoint(const GroupParams& params, ByteView data) {
  ByteReader in(data);
  GElem P = DecodePoint(params, in);
  IDAK_ENFORCE(in.AtEnd(), ErrorCode::kDecode, "trailing bytes after point");
  return P;
}

Bytes EncodeGt(const GroupParams& params, const GtElem& z) {
  size_t width = params.field_bytes();
  Bytes out = ToBigEndian(z.value().a, width);
  Append(out, ToBigEndian(z.value().b, width));
  return out;
}

GtElem DecodeGt(const GroupParams& params, ByteView data) {
  size_t width = params.field_bytes();
  IDAK_ENFORCE(data.size() == 2 * width, ErrorCode::kDecode,
               "bad GT encoding length");
  GtElem z(Fp2{FromBigEndian(data.first(width)),
               FromBigEndian(data.subspan(width))});
  IDAK_ENFORCE(IsGtMember(params, z), ErrorCode::kMalformedElement,
               "GT element outside the order-q subgroup");
  return z;
}

namespace {

void AppendPrefixed(Bytes& out, const mpz_class& v) {
  Bytes mag = ToBigEndian(v);
  IDAK_ENFORCE(mag.size() <= 0xffff, ErrorCode::kDecode, "integer too large");
  AppendU16(out, static_cast<uint16_t>(mag.size()));
  Append(out, mag);
}

mpz_class ReadPrefixed(ByteReader& in) {
  uint16_t len = in.U16();
  return FromBigEndian(in.Take(len));
}

}  // namespace

Bytes EncodeParams(const GroupParams& params) {
  Bytes out{kParamsVersion};
  AppendPrefixed(out, params.p);
  AppendPrefixed(out, params.q);
  AppendPrefixed(out, params.h);
  return out;
}

GroupParams DecodeParams(ByteView data) {
  ByteReader in(data);
  IDAK_ENFORCE(in.U8() == kParamsVersion, ErrorCode::kDecode,
               "unsupported params version");
  GroupParams params;
  params.p = ReadPrefixed(in);
  params.q = ReadPrefixed(in);
  params.h = ReadPrefixed(in);
  IDAK_ENFORCE(in.AtEnd(), ErrorCode::kDecode, "trailing bytes after params");
  ValidateParams(params);
  return params;
}

}  // namespace idak
