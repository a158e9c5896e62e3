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

#include "idak/keystore.h"

#include <sstream>

#include "idak/encoding.h"
#include "idak/error.h"

namespace idak {

namespace {

constexpr std::string_view kArmorMagic = "idak-keystore";

void AppendId(Bytes& out, ByteView id) {
  IDAK_ENFORCE(id.size() <= 0xffff, ErrorCode::kInvalidIdentity,
               "identity longer than 65535 bytes");
  AppendU16(out, static_cast<uint16_t>(id.size()));
  Append(out, id);
}

Bytes ReadId(ByteReader& in) {
  uint16_t len = in.U16();
  ByteView id = in.Take(len);
  return Bytes(id.begin(), id.end());
}

void AppendInt(Bytes& out, const mpz_class& v) {
  Bytes mag = ToBigEndian(v);
  AppendU16(out, static_cast<uint16_t>(mag.size()));
  Append(out, mag);
}

mpz_class ReadInt(ByteReader& in) {
  uint16_t len = in.U16();
  return FromBigEndian(in.Take(len));
}

void ExpectVersion(ByteReader& in, uint8_t version, const char* what) {
  IDAK_ENFORCE(in.U8() == version, ErrorCode::kDecode,
               std::string("unsupported ") + what + " version");
}

void ExpectEnd(const ByteReader& in) {
  IDAK_ENFORCE(in.AtEnd(), ErrorCode::kDecode, "trailing bytes");
}

}  // namespace

std::string Armor(const KeyStoreEntry& entry) {
  std::string out(kArmorMagic);
  out += " kind=" + entry.kind;
  for (const auto& [k, v] : entry.meta) out += " " + k + "=" + v;
  out += "\n" + HexEncode(entry.payload) + "\n";
  return out;
}

KeyStoreEntry Dearmor(std::string_view text,
                      std::optional<std::string_view> expected_kind) {
  std::istringstream in{std::string(text)};
  std::string header;
  std::string body;
  IDAK_ENFORCE(static_cast<bool>(std::getline(in, header)), ErrorCode::kDecode,
               "empty key file");
  std::getline(in, body);
  if (!body.empty() && body.back() == '\r') body.pop_back();

  std::istringstream fields(header);
  std::string magic;
  fields >> magic;
  IDAK_ENFORCE(magic == kArmorMagic, ErrorCode::kDecode, "missing header");
  KeyStoreEntry entry;
  std::string field;
  while (fields >> field) {
    auto eq = field.find('=');
    IDAK_ENFORCE(eq != std::string::npos, ErrorCode::kDecode,
                 "malformed header field");
    std::string key = field.substr(0, eq);
    std::string value = field.substr(eq + 1);
    if (key == "kind") {
      entry.kind = value;
    } else {
      entry.meta[key] = value;
    }
  }
  IDAK_ENFORCE(!entry.kind.empty(), ErrorCode::kDecode, "header without kind");
  if (expected_kind) {
    IDAK_ENFORCE(entry.kind == *expected_kind, ErrorCode::kDecode,
                 "expected kind " + std::string(*expected_kind) + ", found " +
                     entry.kind);
  }
  entry.payload = HexDecode(body);
  return entry;
}

Bytes EncodeMaster(const GroupParams&, const MasterSecret& msk) {
  Bytes out{kKeyFileVersion};
  AppendInt(out, msk.alpha.value());
  return out;
}

MasterSecret DecodeMaster(const GroupParams& group, ByteView data) {
  ByteReader in(data);
  ExpectVersion(in, kKeyFileVersion, "master");
  mpz_class alpha = ReadInt(in);
  ExpectEnd(in);
  IDAK_ENFORCE(alpha >= 1 && alpha < group.q, ErrorCode::kDecode,
               "master secret outside Z_q^*");
  return MasterSecret{Scalar(alpha, group)};
}

Bytes EncodeIdentityKey(const GroupParams& group, const IdentityKey& key) {
  Bytes out{kKeyFileVersion};
  AppendId(out, key.id);
  Append(out, EncodePoint(group, key.g_id));
  Append(out, EncodePoint(group, key.d_id));
  return out;
}

IdentityKey DecodeIdentityKey(const GroupParams& group, ByteView data) {
  ByteReader in(data);
  ExpectVersion(in, kKeyFileVersion, "identity key");
  IdentityKey key;
  key.id = ReadId(in);
  key.g_id = DecodePoint(group, in);
  key.d_id = DecodePoint(group, in);
  ExpectEnd(in);
  IDAK_ENFORCE(!key.id.empty(), ErrorCode::kDecode, "empty identity");
  IDAK_ENFORCE(key.g_id == HashToGroup(group, key.id), ErrorCode::kDecode,
               "public point does not match identity");
  IDAK_ENFORCE(!key.d_id.is_identity() && InSubgroup(group, key.d_id),
               ErrorCode::kDecode, "private point outside the subgroup");
  return key;
}

Bytes EncodeEphemeral(const GroupParams& group, const EphemeralState& st) {
  Bytes out{kKeyFileVersion};
  AppendId(out, st.own_id);
  AppendId(out, st.peer_id);
  AppendInt(out, st.x.value());
  Append(out, EncodePoint(group, st.pre.r));
  Append(out, EncodePoint(group, st.pre.d_x));
  return out;
}

EphemeralState DecodeEphemeral(const GroupParams& group, ByteView data) {
  ByteReader in(data);
  ExpectVersion(in, kKeyFileVersion, "ephemeral");
  EphemeralState st;
  st.own_id = ReadId(in);
  st.peer_id = ReadId(in);
  mpz_class x = ReadInt(in);
  IDAK_ENFORCE(x >= 1 && x < group.q, ErrorCode::kDecode,
               "ephemeral outside Z_q^*");
  st.x = Scalar(x, group);
  st.pre.r = DecodePoint(group, in);
  st.pre.d_x = DecodePoint(group, in);
  ExpectEnd(in);
  return st;
}

Bytes EncodeFlowWire(const GroupParams& group, const FlowWire& flow) {
  Bytes out{kFlowVersion, flow.role == Role::kInitiator ? kFlowRoleInitiator
                                                        : kFlowRoleResponder};
  AppendId(out, flow.sender_id);
  Append(out, EncodePoint(group, flow.r));
  if (flow.extra) {
    out.push_back(0x01);
    Append(out, EncodePoint(group, *flow.extra));
  } else {
    out.push_back(0x00);
  }
  return out;
}

FlowWire DecodeFlowWire(const GroupParams& group, ByteView data) {
  try {
    ByteReader in(data);
    IDAK_ENFORCE(in.U8() == kFlowVersion, ErrorCode::kInvalidFlow,
                 "unsupported flow version");
    FlowWire flow;
    uint8_t role = in.U8();
    IDAK_ENFORCE(role == kFlowRoleInitiator || role == kFlowRoleResponder,
                 ErrorCode::kInvalidFlow, "unknown role byte");
    flow.role = role == kFlowRoleInitiator ? Role::kInitiator
                                           : Role::kResponder;
    flow.sender_id = ReadId(in);
    flow.r = DecodePoint(group, in);
    uint8_t presence = in.U8();
    IDAK_ENFORCE(presence <= 1, ErrorCode::kInvalidFlow,
                 "bad presence byte");
    if (presence == 1) flow.extra = DecodePoint(group, in);
    IDAK_ENFORCE(in.AtEnd(), ErrorCode::kInvalidFlow, "trailing bytes");
    return flow;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidFlow) throw;
    throw Error(ErrorCode::kInvalidFlow, e.what());
  }
}

}  // namespace idak
