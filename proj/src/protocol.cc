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

#include "idak/protocol.h"

#include <stdexcept>

#include "idak/encoding.h"
#include "idak/error.h"
#include "idak/pairing.h"

namespace idak {

using field::Mod;

std::string_view PiVariantName(PiVariant v) {
  switch (v) {
    case PiVariant::kHashHalf: return "hash-half";
    case PiVariant::kXorHalf: return "xor-half";
    case PiVariant::kFirstOnly: return "first-only";
  }
  return "unknown";
}

PiVariant ParsePiVariant(std::string_view name) {
  if (name == "hash-half") return PiVariant::kHashHalf;
  if (name == "xor-half") return PiVariant::kXorHalf;
  if (name == "first-only") return PiVariant::kFirstOnly;
  throw std::invalid_argument("unknown pi variant: " + std::string(name));
}

std::string StrategyName(const DeriveStrategy& s) {
  return "c" + std::to_string(s.choice) + (s.precomputed ? "-pre" : "-nopre");
}

DeriveStrategy ParseStrategy(std::string_view name) {
  std::string s;
  for (char c : name) {
    if (c != '-' && c != '_' && c != 'x' && c != ',') s.push_back(c);
  }
  if (s == "c1nopre") return {1, false};
  if (s == "c2nopre") return {2, false};
  if (s == "c1pre") return {1, true};
  if (s == "c2pre") return {2, true};
  throw std::invalid_argument("unknown strategy: " + std::string(name));
}

OpCounts ReferenceCost(const DeriveStrategy& s) {
  // pairings, exponentiations in G (halves), multiplications in G,
  // exponentiations in G1.
  if (s.choice == 1 && !s.precomputed) return {1, 5, 1, 0};
  if (s.choice == 2 && !s.precomputed) return {1, 3, 1, 1};
  if (s.choice == 1 && s.precomputed) return {1, 2, 2, 0};
  return {1, 1, 1, 1};
}

SystemParams MakeSystemParams(GroupParams group, PiVariant pi) {
  SystemParams params;
  params.g = HashToGroup(group, kGeneratorSeed);
  params.group = std::move(group);
  params.pi_variant = pi;
  params.kdf_tag = ToBytes(kDefaultKdfTag);
  return params;
}

std::pair<SystemParams, MasterSecret> Setup(int k_bits, ByteView seed,
                                            PiVariant pi) {
  SystemParams params = MakeSystemParams(InstanceGenerate(k_bits, seed), pi);
  Drbg rng(Sha256({ToBytes("idak-master-secret"), seed}));
  MasterSecret msk{RandomScalar(params.group, rng)};
  return {std::move(params), std::move(msk)};
}

IdentityKey Extract(const SystemParams& params, const MasterSecret& msk,
                    ByteView id) {
  IDAK_ENFORCE(!id.empty(), ErrorCode::kInvalidIdentity, "empty identity");
  IdentityKey key;
  key.id.assign(id.begin(), id.end());
  key.g_id = HashToGroup(params.group, id);
  key.d_id = detail::Mul(params.group, key.g_id, msk.alpha.value());
  return key;
}

mpz_class XorHalf(const mpz_class& x1, const mpz_class& x2,
                  size_t field_bits) {
  mpz_class v = x1 ^ x2;
  mpz_class modulus = mpz_class(1) << (field_bits / 2);
  v = Mod(v, modulus);
  return v == 0 ? mpz_class(1) : v;
}

size_t PiOutputBits(const GroupParams& group) {
  // q is an odd prime, so ceil(log2 q) is its bit length.
  return (BitLength(group.q) + 1) / 2;
}

namespace {

mpz_class HashHalf(const SystemParams& params, std::initializer_list<ByteView> parts) {
  const uint8_t tag[] = {kPiTag};
  Bytes input(tag, tag + 1);
  for (ByteView part : parts) Append(input, part);
  mpz_class v = FromBigEndian(Sha256({input}));
  v = Mod(v, mpz_class(1) << PiOutputBits(params.group));
  return v == 0 ? mpz_class(1) : v;
}

// Tallies the online work of one derivation.
class CountingOps {
 public:
  explicit CountingOps(const GroupParams& group) : group_(group) {}

  GElem Exp(const GElem& P, const mpz_class& n, bool half_length) {
    counts_.exp_g_halves += half_length ? 1 : 2;
    return detail::Mul(group_, P, n);
  }
  GElem Mul(const GElem& P, const GElem& Q) {
    ++counts_.mul_g;
    return detail::Add(group_, P, Q);
  }
  GtElem Pair(const GElem& P, const GElem& Q) {
    ++counts_.pairings;
    return Pairing(group_, P, Q);
  }
  GtElem GtPow(const GtElem& z, const mpz_class& n) {
    ++counts_.exp_gt;
    return GtExp(group_, z, n);
  }

  const OpCounts& counts() const { return counts_; }

 private:
  const GroupParams& group_;
  OpCounts counts_;
};

bool InScalarRange(const GroupParams& group, const Scalar& x) {
  return x.value() >= 1 && x.value() < group.q;
}

}  // namespace

Scalar PiValue(const SystemParams& params, const GElem& first,
               const GElem& second) {
  IDAK_ENFORCE(!first.is_identity() && !second.is_identity(),
               ErrorCode::kInvalidFlow, "pi of the identity element");
  const GroupParams& group = params.group;
  switch (params.pi_variant) {
    case PiVariant::kHashHalf:
      return Scalar(HashHalf(params, {EncodePoint(group, first),
                                      EncodePoint(group, second)}),
                    group);
    case PiVariant::kXorHalf:
      return Scalar(XorHalf(first.x(), second.x(), BitLength(group.p)), group);
    case PiVariant::kFirstOnly:
      return Scalar(HashHalf(params, {EncodePoint(group, first)}), group);
  }
  throw std::logic_error("unreachable pi variant");
}

void ValidateFlow(const SystemParams& params, const FlowMessage& msg) {
  IDAK_ENFORCE(!msg.r.is_identity(), ErrorCode::kInvalidFlow,
               "flow carries the identity element");
  IDAK_ENFORCE(OnCurve(params.group, msg.r), ErrorCode::kInvalidFlow,
               "flow point not on curve");
  IDAK_ENFORCE(detail::Mul(params.group, msg.r, params.group.q).is_identity(),
               ErrorCode::kRejectedPoint,
               "flow point outside the order-q subgroup");
}

Initiation Initiate(const SystemParams& params, const IdentityKey& own,
                    Drbg& rng) {
  Scalar x = RandomScalar(params.group, rng);
  FlowMessage msg{detail::Mul(params.group, own.g_id, x.value())};
  return {std::move(x), std::move(msg)};
}

Precomputation Precompute(const SystemParams& params, const IdentityKey& own,
                          const Scalar& x) {
  return {detail::Mul(params.group, own.g_id, x.value()),
          detail::Mul(params.group, own.d_id, x.value())};
}

Derivation Derive(const SystemParams& params, const IdentityKey& own,
                  const Scalar& own_x, const FlowMessage& own_msg,
                  ByteView peer_id, const FlowMessage& peer_msg, Role role,
                  const DeriveStrategy& strategy, const Precomputation* pre) {
  const GroupParams& group = params.group;
  IDAK_ENFORCE(strategy.choice == 1 || strategy.choice == 2,
               ErrorCode::kInvalidEphemeral, "unknown strategy choice");
  ValidateFlow(params, peer_msg);
  IDAK_ENFORCE(InScalarRange(group, own_x), ErrorCode::kInvalidEphemeral,
               "ephemeral outside Z_q^*");
  IDAK_ENFORCE(!own_msg.r.is_identity(), ErrorCode::kInvalidEphemeral,
               "own flow is the identity element");

  CountingOps ops(group);
  GElem own_r = own_msg.r;
  if (!strategy.precomputed) {
    own_r = ops.Exp(own.g_id, own_x.value(), false);
    IDAK_ENFORCE(own_r == own_msg.r, ErrorCode::kInvalidEphemeral,
                 "ephemeral does not match own flow");
  }

  const bool initiator = role == Role::kInitiator;
  const GElem& r_a = initiator ? own_r : peer_msg.r;
  const GElem& r_b = initiator ? peer_msg.r : own_r;
  Scalar s_a = PiValue(params, r_a, r_b);
  Scalar s_b = PiValue(params, r_b, r_a);
  const Scalar& s_own = initiator ? s_a : s_b;
  const Scalar& s_peer = initiator ? s_b : s_a;

  mpz_class combined = Mod(own_x.value() + s_own.value(), group.q);
  IDAK_ENFORCE(combined != 0, ErrorCode::kDegenerateExponent,
               "x + s = 0 (mod q)");

  GElem g_peer = HashToGroup(group, peer_id);
  GElem peer_term =
      ops.Mul(ops.Exp(g_peer, s_peer.value(), true), peer_msg.r);

  GtElem sk;
  if (strategy.choice == 1) {
    GElem own_term;
    if (!strategy.precomputed) {
      own_term = ops.Exp(own.d_id, combined, false);
    } else {
      Precomputation local;
      if (pre == nullptr) {
        local = Precompute(params, own, own_x);
        pre = &local;
      }
      IDAK_ENFORCE(pre->r == own_msg.r, ErrorCode::kInvalidEphemeral,
                   "precomputation belongs to another ephemeral");
      own_term = ops.Mul(pre->d_x, ops.Exp(own.d_id, s_own.value(), true));
    }
    sk = initiator ? ops.Pair(own_term, peer_term)
                   : ops.Pair(peer_term, own_term);
  } else {
    GtElem base = initiator ? ops.Pair(peer_term, own.d_id)
                            : ops.Pair(own.d_id, peer_term);
    sk = ops.GtPow(base, combined);
  }
  return {SharedSecret{std::move(sk)}, ops.counts()};
}

namespace {

Response RespondImpl(const SystemParams& params, const IdentityKey& own,
                     ByteView peer_id, const FlowMessage& peer_msg, Drbg& rng,
                     bool with_extra) {
  ValidateFlow(params, peer_msg);
  const GroupParams& group = params.group;
  for (;;) {
    Scalar y = RandomScalar(group, rng);
    GElem r_b = detail::Mul(group, own.g_id, y.value());
    Scalar s_b = PiValue(params, r_b, peer_msg.r);
    if (Mod(y.value() + s_b.value(), group.q) == 0) continue;
    Response out{y, FlowMessage{std::move(r_b)}, GElem::Identity()};
    if (with_extra) {
      out.extra = detail::Mul(group, HashToGroup(group, peer_id), y.value());
    }
    return out;
  }
}

}  // namespace

Response Respond(const SystemParams& params, const IdentityKey& own,
                 ByteView peer_id, const FlowMessage& peer_msg, Drbg& rng) {
  return RespondImpl(params, own, peer_id, peer_msg, rng, false);
}

Response PfsRespond(const SystemParams& params, const IdentityKey& own,
                    ByteView peer_id, const FlowMessage& peer_msg, Drbg& rng) {
  return RespondImpl(params, own, peer_id, peer_msg, rng, true);
}

bool VerifyPfsExtra(const SystemParams& params, ByteView initiator_id,
                    ByteView responder_id, const FlowMessage& responder_msg,
                    const GElem& extra) {
  const GroupParams& group = params.group;
  if (extra.is_identity() || !InSubgroup(group, extra)) return false;
  if (responder_msg.r.is_identity() || !InSubgroup(group, responder_msg.r)) {
    return false;
  }
  GElem g_a = HashToGroup(group, initiator_id);
  GElem g_b = HashToGroup(group, responder_id);
  return Pairing(group, extra, g_b) == Pairing(group, g_a, responder_msg.r);
}

SessionKey DeriveSessionKey(const SystemParams& params,
                            const SharedSecret& sk, ByteView id_a,
                            ByteView id_b, const GElem& r_a,
                            const GElem& r_b) {
  const GroupParams& group = params.group;
  Bytes digest = Sha256({params.kdf_tag, EncodeGt(group, sk.sk), id_a, id_b,
                         EncodePoint(group, r_a), EncodePoint(group, r_b)});
  SessionKey key;
  std::copy(digest.begin(), digest.end(), key.key.begin());
  return key;
}

SessionKey PfsSessionKey(const SystemParams& params, const SharedSecret& sk,
                         const GElem& dh) {
  const uint8_t tag[] = {kPfsTag};
  Bytes digest = Sha256(
      {tag, EncodePoint(params.group, dh), EncodeGt(params.group, sk.sk)});
  SessionKey key;
  std::copy(digest.begin(), digest.end(), key.key.begin());
  return key;
}

SharedSecret MasterCompromiseCompute(const SystemParams& params,
                                     const Scalar& alpha, ByteView id_a,
                                     ByteView id_b, const FlowMessage& r_a,
                                     const FlowMessage& r_b) {
  ValidateFlow(params, r_a);
  ValidateFlow(params, r_b);
  const GroupParams& group = params.group;
  Scalar s_a = PiValue(params, r_a.r, r_b.r);
  Scalar s_b = PiValue(params, r_b.r, r_a.r);
  GElem left = detail::Add(
      group, detail::Mul(group, HashToGroup(group, id_a), s_a.value()), r_a.r);
  GElem right = detail::Add(
      group, detail::Mul(group, HashToGroup(group, id_b), s_b.value()), r_b.r);
  return SharedSecret{GtExp(group, Pairing(group, left, right), alpha.value())};
}

}  // namespace idak
