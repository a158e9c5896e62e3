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

#include "idak/session_model.h"

#include <stdexcept>

#include "idak/error.h"
#include "idak/pairing.h"

namespace idak {

std::string_view SecurityModeName(SecurityMode mode) {
  return mode == SecurityMode::kBR ? "br" : "wpfsbr";
}

SecurityMode ParseSecurityMode(std::string_view name) {
  if (name == "br") return SecurityMode::kBR;
  if (name == "wpfsbr") return SecurityMode::kWpfsBR;
  throw std::invalid_argument("unknown mode: " + std::string(name));
}

std::string ToString(const OracleRef& ref) {
  return "Pi(" + ref.i + "," + ref.j + "," + std::to_string(ref.s) + ")";
}

std::pair<GElem, GElem> SessionOracle::Conversation() const {
  const GElem& out = transcript.at(0).outgoing ? transcript.at(0).r
                                               : transcript.at(1).r;
  const GElem& in = transcript.at(0).outgoing ? transcript.at(1).r
                                              : transcript.at(0).r;
  if (role == Role::kInitiator) return {out, in};
  return {in, out};
}

World::World(SystemParams params, MasterSecret msk, SecurityMode mode,
             ByteView seed, DeriveStrategy strategy)
    : params_(std::move(params)),
      msk_(std::move(msk)),
      mode_(mode),
      strategy_(strategy),
      rng_(Sha256({ToBytes("idak-world"), seed})) {}

void World::AddPrincipal(const std::string& id) {
  principals_[id] = idak::Extract(params_, msk_, id);
}

bool World::HasPrincipal(const std::string& id) const {
  return principals_.contains(id);
}

OracleRef World::NewOracle(const std::string& i, const std::string& j) {
  IDAK_ENFORCE(HasPrincipal(i), ErrorCode::kNoSuchPrincipal, i);
  IDAK_ENFORCE(!j.empty(), ErrorCode::kInvalidIdentity, "empty peer id");
  uint64_t s = ++next_session_[{i, j}];
  OracleRef ref{i, j, s};
  oracles_[ref].ref = ref;
  return ref;
}

SessionOracle& World::MutableOracle(const OracleRef& ref) {
  auto it = oracles_.find(ref);
  IDAK_ENFORCE(it != oracles_.end(), ErrorCode::kNoSuchOracle, ToString(ref));
  return it->second;
}

const SessionOracle& World::oracle(const OracleRef& ref) const {
  auto it = oracles_.find(ref);
  IDAK_ENFORCE(it != oracles_.end(), ErrorCode::kNoSuchOracle, ToString(ref));
  return it->second;
}

SessionKey World::BindKey(const SessionOracle& o,
                          const SharedSecret& sk) const {
  auto [first, second] = o.Conversation();
  const std::string& initiator = o.role == Role::kInitiator ? o.ref.i : o.ref.j;
  const std::string& responder = o.role == Role::kInitiator ? o.ref.j : o.ref.i;
  return DeriveSessionKey(params_, sk, ToBytes(initiator), ToBytes(responder),
                          first, second);
}

std::optional<FlowMessage> World::Send(const OracleRef& ref,
                                       const std::optional<FlowMessage>& x) {
  Tick();
  SessionOracle& o = MutableOracle(ref);
  IDAK_ENFORCE(!o.completed && !o.aborted, ErrorCode::kStaleOracle,
               ToString(ref));
  const IdentityKey& own = principals_.at(ref.i);
  Bytes peer_id = ToBytes(ref.j);

  try {
    if (o.transcript.empty() && !x) {
      Initiation init = Initiate(params_, own, rng_);
      o.role = Role::kInitiator;
      o.ephemeral = init.x;
      o.transcript.push_back({true, init.msg.r});
      return init.msg;
    }
    if (o.transcript.empty()) {
      Response resp = Respond(params_, own, peer_id, *x, rng_);
      o.role = Role::kResponder;
      o.ephemeral = resp.y;
      o.transcript.push_back({false, x->r});
      o.transcript.push_back({true, resp.msg.r});
      Derivation d = Derive(params_, own, resp.y, resp.msg, peer_id, *x,
                            Role::kResponder, strategy_);
      o.key = BindKey(o, d.secret);
      o.completed = true;
      o.completed_at = clock_;
      return resp.msg;
    }
    // Initiator awaiting the responder flow; a second lambda is stale.
    IDAK_ENFORCE(x.has_value() && o.transcript.size() == 1,
                 ErrorCode::kStaleOracle, ToString(ref));
    FlowMessage own_msg{o.transcript[0].r};
    Derivation d = Derive(params_, own, *o.ephemeral, own_msg, peer_id, *x,
                          Role::kInitiator, strategy_);
    o.transcript.push_back({false, x->r});
    o.key = BindKey(o, d.secret);
    o.completed = true;
    o.completed_at = clock_;
    return std::nullopt;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kStaleOracle) o.aborted = true;
    throw;
  }
}

SessionKey World::Reveal(const OracleRef& ref) {
  Tick();
  SessionOracle& o = MutableOracle(ref);
  IDAK_ENFORCE(o.completed, ErrorCode::kNoKey, ToString(ref));
  o.revealed = true;
  return *o.key;
}

GElem World::Corrupt(const std::string& i) {
  uint64_t now = Tick();
  auto it = principals_.find(i);
  IDAK_ENFORCE(it != principals_.end(), ErrorCode::kNoSuchPrincipal, i);
  corrupted_.insert(i);
  corrupted_at_.try_emplace(i, now);
  return it->second.d_id;
}

GElem World::Extract(const std::string& id) {
  Tick();
  IdentityKey key = idak::Extract(params_, msk_, id);
  extracted_.insert(id);
  return key.d_id;
}

bool World::Matching(const OracleRef& a, const OracleRef& b) const {
  const SessionOracle& o1 = oracle(a);
  const SessionOracle& o2 = oracle(b);
  if (!o1.completed || !o2.completed) return false;
  if (o1.role == o2.role) return false;
  if (o1.ref.i != o2.ref.j || o1.ref.j != o2.ref.i) return false;
  return o1.Conversation() == o2.Conversation();
}

bool World::Fresh(const OracleRef& ref) const {
  const SessionOracle& o = oracle(ref);
  IDAK_ENFORCE(o.completed, ErrorCode::kNotTestable, ToString(ref));
  for (const std::string* id : {&ref.i, &ref.j}) {
    if (extracted_.contains(*id)) return false;
    auto it = corrupted_at_.find(*id);
    if (it == corrupted_at_.end()) continue;
    if (mode_ == SecurityMode::kBR || it->second < o.completed_at) {
      return false;
    }
  }
  if (o.revealed) return false;
  for (const auto& [other_ref, other] : oracles_) {
    if (other_ref == ref || !other.revealed) continue;
    if (Matching(ref, other_ref)) return false;
  }
  return true;
}

SessionKey World::Test(const OracleRef& ref, int coin, Drbg& rng) {
  IDAK_ENFORCE(Fresh(ref), ErrorCode::kTestRefused, ToString(ref));
  Tick();
  const SessionOracle& o = oracle(ref);
  if (coin == 1) return *o.key;
  const GroupParams& group = params_.group;
  GtElem base = Pairing(group, params_.g, params_.g);
  SharedSecret random{GtExp(group, base, rng.UniformBelow(group.q))};
  return BindKey(o, random);
}

}  // namespace idak
