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

#include "idak/bytes.h"
#include "idak/group.h"

namespace idak {

inline constexpr uint8_t kPointIdentityTag = 0x00;
inline constexpr uint8_t kPointAffineTag = 0x04;
inline constexpr uint8_t kParamsVersion = 0x01;

// 0x00 for O, else 0x04 || x || y, each coordinate field_bytes() wide.
Bytes EncodePoint(const GroupParams& params, const GElem& P);
// Rejects unknown tags (kDecode) and off-curve points (kMalformedElement).
GElem DecodePoint(const GroupParams& params, ByteReader& in);
GElem DecodePoint(const GroupParams& params, ByteView data);

// a || b, each field_bytes() wide.
Bytes EncodeGt(const GroupParams& params, const GtElem& z);
GtElem DecodeGt(const GroupParams& params, ByteView data);

// version || (u16 len || p) || (u16 len || q) || (u16 len || h).
Bytes EncodeParams(const GroupParams& params);
// Decodes and validates.
GroupParams DecodeParams(ByteView data);

}  // namespace idak
