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

#include <map>
#include <optional>
#include <string>

#include "idak/protocol.h"

namespace idak {

// One-line header followed by the hex payload:
//   idak-keystore kind=<kind> [key=value ...]
//   <hex>
struct KeyStoreEntry {
  std::string kind;
  std::map<std::string, std::string> meta;
  Bytes payload;

  friend bool operator==(const KeyStoreEntry&, const KeyStoreEntry&) = default;
};

std::string Armor(const KeyStoreEntry& entry);
// Throws kDecode on a missing header, bad hex or an unexpected kind.
KeyStoreEntry Dearmor(std::string_view text,
                      std::optional<std::string_view> expected_kind = {});

inline constexpr uint8_t kKeyFileVersion = 0x01;

Bytes EncodeMaster(const GroupParams& group, const MasterSecret& msk);
MasterSecret DecodeMaster(const GroupParams& group, ByteView data);

// version || u16 len || id || point(g_id) || point(d_id)
Bytes EncodeIdentityKey(const GroupParams& group, const IdentityKey& key);
// Also checks g_id == H(id).
IdentityKey DecodeIdentityKey(const GroupParams& group, ByteView data);

// Initiator state carried from `initiate` to `finalize`.
struct EphemeralState {
  Bytes own_id;
  Bytes peer_id;
  Scalar x;
  Precomputation pre;
};

Bytes EncodeEphemeral(const GroupParams& group, const EphemeralState& st);
EphemeralState DecodeEphemeral(const GroupParams& group, ByteView data);

inline constexpr uint8_t kFlowVersion = 0x01;
inline constexpr uint8_t kFlowRoleInitiator = 0x01;
inline constexpr uint8_t kFlowRoleResponder = 0x02;

// version 0x01 || role byte || u16 id length || id || point
//   || presence byte (0x00 | 0x01) || [extra point]
struct FlowWire {
  Role role = Role::kInitiator;
  Bytes sender_id;
  GElem r;
  std::optional<GElem> extra;
};

Bytes EncodeFlowWire(const GroupParams& group, const FlowWire& flow);
// Any structural problem is reported as kInvalidFlow.
FlowWire DecodeFlowWire(const GroupParams& group, ByteView data);

}  // namespace idak
