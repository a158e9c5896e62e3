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

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idak/bytes.h"
#include "idak/drbg.h"
#include "idak/group.h"

namespace idak {

// Half-length hash, XOR of the low halves of the x-coordinates, or a hash of
// the first argument only.
enum class PiVariant { kHashHalf, kXorHalf, kFirstOnly };

std::string_view PiVariantName(PiVariant v);
// Accepts "hash-half", "xor-half", "first-only". Throws std::invalid_argument.
PiVariant ParsePiVariant(std::string_view name);

inline constexpr std::string_view kGeneratorSeed = "IDAK system generator";
inline constexpr std::string_view kDefaultKdfTag = "IDAK-KDF-v1";
inline constexpr uint8_t kPiTag = 0x02;
inline constexpr uint8_t kPfsTag = 0x03;

struct SystemParams {
  GroupParams group;
  GElem g;
  PiVariant pi_variant = PiVariant::kHashHalf;
  Bytes kdf_tag;
};

// g is the cofactor-cleared hash of a fixed string.
SystemParams MakeSystemParams(GroupParams group,
                              PiVariant pi = PiVariant::kHashHalf);

struct MasterSecret {
  Scalar alpha;
};

struct IdentityKey {
  Bytes id;
  GElem g_id;
  GElem d_id;
};

struct FlowMessage {
  GElem r;
};

struct SharedSecret {
  GtElem sk;

  friend bool operator==(const SharedSecret&, const SharedSecret&) = default;
};

struct SessionKey {
  std::array<uint8_t, 32> key{};

  friend bool operator==(const SessionKey&, const SessionKey&) = default;
};

// Online operation tally. Exponentiations are counted in halves: an exponent
// that is a pi output (half length) costs 1 half, any other costs 2.
struct OpCounts {
  int pairings = 0;
  int exp_g_halves = 0;
  int mul_g = 0;
  int exp_gt = 0;

  double exp_g() const { return exp_g_halves / 2.0; }

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

struct DeriveStrategy {
  int choice = 2;  // 1: pairing only; 2: pairing then GT exponentiation
  bool precomputed = true;

  friend bool operator==(const DeriveStrategy&,
                         const DeriveStrategy&) = default;
};

// Column order of the cost table: c1/nopre, c2/nopre, c1/pre, c2/pre.
inline constexpr std::array<DeriveStrategy, 4> kAllStrategies = {{
    {1, false}, {2, false}, {1, true}, {2, true}}};

std::string StrategyName(const DeriveStrategy& s);
// Accepts "c1-pre", "c2-nopre", "c1pre", "c2xnopre", ...
DeriveStrategy ParseStrategy(std::string_view name);

// Cost table for Alice, indexed like kAllStrategies.
OpCounts ReferenceCost(const DeriveStrategy& s);

enum class Role { kInitiator, kResponder };

// Runs InstanceGenerate, derives g, and draws alpha from the seed stream.
std::pair<SystemParams, MasterSecret> Setup(
    int k_bits, ByteView seed, PiVariant pi = PiVariant::kHashHalf);

// Throws kInvalidIdentity for an empty id.
IdentityKey Extract(const SystemParams& params, const MasterSecret& msk,
                    ByteView id);
inline IdentityKey Extract(const SystemParams& params,
                           const MasterSecret& msk, std::string_view id) {
  return Extract(params, msk, ByteView(ToBytes(id)));
}

// (x1 xor x2) mod 2^floor(field_bits / 2), with 0 mapped to 1.
mpz_class XorHalf(const mpz_class& x1, const mpz_class& x2, size_t field_bits);

// Bit length of the HashHalf / FirstOnly output, ceil(ceil(log2 q) / 2).
size_t PiOutputBits(const GroupParams& group);

// pi(first, second) under params.pi_variant. Never returns 0.
// Throws kInvalidFlow for identity inputs.
Scalar PiValue(const SystemParams& params, const GElem& first,
               const GElem& second);

// Throws kInvalidFlow for O or off-curve points, kRejectedPoint for points
// outside the order-q subgroup.
void ValidateFlow(const SystemParams& params, const FlowMessage& msg);

struct Initiation {
  Scalar x;
  FlowMessage msg;
};

// x uniform in Z_q^*, R = g_id^x.
Initiation Initiate(const SystemParams& params, const IdentityKey& own,
                    Drbg& rng);

// Offline values for the precomputed strategies: g_id^x and d_id^x.
struct Precomputation {
  GElem r;
  GElem d_x;
};

Precomputation Precompute(const SystemParams& params, const IdentityKey& own,
                          const Scalar& x);

struct Derivation {
  SharedSecret secret;
  OpCounts counts;
};

// Shared secret e(g_A, g_B)^((x + s_A)(y + s_B) alpha). The initiator's flow is
// always the first pi argument for s_A. Without precomputation the own flow
// g_id^x is recomputed (and counted) as part of the online work. `pre` is
// only consulted by the precomputed choice-1 strategy; when absent it is
// computed outside the tally.
// Throws kInvalidFlow / kRejectedPoint for a bad peer flow,
// kInvalidEphemeral when x is out of range or does not produce own_msg, and
// kDegenerateExponent when x + s = 0 (mod q).
Derivation Derive(const SystemParams& params, const IdentityKey& own,
                  const Scalar& own_x, const FlowMessage& own_msg,
                  ByteView peer_id, const FlowMessage& peer_msg, Role role,
                  const DeriveStrategy& strategy,
                  const Precomputation* pre = nullptr);

struct Response {
  Scalar y;
  FlowMessage msg;
  GElem extra;  // g_peer^y; only meaningful for the PFS variant
};

// Responder step: validates the initiator flow and draws y, redrawing while
// y + s_B = 0 (mod q).
Response Respond(const SystemParams& params, const IdentityKey& own,
                 ByteView peer_id, const FlowMessage& peer_msg, Drbg& rng);

// As Respond, and additionally returns extra = g_peer^y with the same y.
Response PfsRespond(const SystemParams& params, const IdentityKey& own,
                    ByteView peer_id, const FlowMessage& peer_msg, Drbg& rng);

// Receiver check e(extra, g_B) == e(g_A, R_B).
bool VerifyPfsExtra(const SystemParams& params, ByteView initiator_id,
                    ByteView responder_id, const FlowMessage& responder_msg,
                    const GElem& extra);

// SHA-256(kdf_tag || enc(sk) || id_a || id_b || enc(r_a) || enc(r_b)).
SessionKey DeriveSessionKey(const SystemParams& params,
                            const SharedSecret& sk, ByteView id_a,
                            ByteView id_b, const GElem& r_a, const GElem& r_b);

// SHA-256(0x03 || enc(dh) || enc(sk)), dh = g_A^(xy).
SessionKey PfsSessionKey(const SystemParams& params, const SharedSecret& sk,
                         const GElem& dh);

// e(g_A^{s_A} R_A, g_B^{s_B} R_B)^alpha from the public transcript and alpha.
SharedSecret MasterCompromiseCompute(const SystemParams& params,
                                     const Scalar& alpha, ByteView id_a,
                                     ByteView id_b, const FlowMessage& r_a,
                                     const FlowMessage& r_b);

}  // namespace idak
