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

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "idak/drbg.h"
#include "idak/protocol.h"

namespace idak {

// kBR: any Corrupt of either partner disqualifies Test. kWpfsBR: only a
// Corrupt issued before the session completed does.
enum class SecurityMode { kBR, kWpfsBR };

std::string_view SecurityModeName(SecurityMode mode);
SecurityMode ParseSecurityMode(std::string_view name);

// Names oracle Pi_{i,j}^s.
struct OracleRef {
  std::string i;
  std::string j;
  uint64_t s = 0;

  friend auto operator<=>(const OracleRef&, const OracleRef&) = default;
};

std::string ToString(const OracleRef& ref);

struct TranscriptEntry {
  bool outgoing = false;
  GElem r;
};

struct SessionOracle {
  OracleRef ref;
  std::optional<Role> role;
  std::vector<TranscriptEntry> transcript;
  std::optional<Scalar> ephemeral;
  std::optional<SessionKey> key;
  bool completed = false;
  bool revealed = false;
  bool aborted = false;
  uint64_t completed_at = 0;

  // Initiator flow, then responder flow. Only valid on completed oracles.
  std::pair<GElem, GElem> Conversation() const;
};

// Executable session-oracle environment. Single-owner mutable state; every
// query advances a logical clock.
class World {
 public:
  World(SystemParams params, MasterSecret msk, SecurityMode mode,
        ByteView seed, DeriveStrategy strategy = {2, true});

  // Registers a principal and issues its key through the environment's KGC.
  void AddPrincipal(const std::string& id);
  bool HasPrincipal(const std::string& id) const;

  // Creates Pi_{i,j}^s with the next unused s for (i, j).
  OracleRef NewOracle(const std::string& i, const std::string& j);

  // nullopt models the empty activation message lambda.
  // Throws kStaleOracle for completed/aborted oracles; a bad flow aborts the
  // oracle and rethrows kInvalidFlow / kRejectedPoint.
  std::optional<FlowMessage> Send(const OracleRef& ref,
                                  const std::optional<FlowMessage>& x);
  // Throws kNoKey on an incomplete oracle.
  SessionKey Reveal(const OracleRef& ref);
  // Throws kNoSuchPrincipal for unknown i.
  GElem Corrupt(const std::string& i);
  // Private key for an arbitrary identity string.
  GElem Extract(const std::string& id);

  bool Matching(const OracleRef& a, const OracleRef& b) const;
  // Throws kNotTestable on an incomplete oracle.
  bool Fresh(const OracleRef& ref) const;
  // coin = 1: the real key; coin = 0: KDF of a uniform GT element under the
  // same transcript binding. Throws kTestRefused unless Fresh.
  SessionKey Test(const OracleRef& ref, int coin, Drbg& rng);

  const SessionOracle& oracle(const OracleRef& ref) const;
  const std::map<OracleRef, SessionOracle>& oracles() const { return oracles_; }
  const std::set<std::string>& corrupted() const { return corrupted_; }
  const std::set<std::string>& extracted() const { return extracted_; }
  const SystemParams& params() const { return params_; }
  SecurityMode mode() const { return mode_; }
  uint64_t clock() const { return clock_; }

 private:
  SessionOracle& MutableOracle(const OracleRef& ref);
  uint64_t Tick() { return ++clock_; }
  SessionKey BindKey(const SessionOracle& o, const SharedSecret& sk) const;

  SystemParams params_;
  MasterSecret msk_;
  SecurityMode mode_;
  DeriveStrategy strategy_;
  Drbg rng_;
  uint64_t clock_ = 0;
  std::map<std::string, IdentityKey> principals_;
  std::map<OracleRef, SessionOracle> oracles_;
  std::map<std::pair<std::string, std::string>, uint64_t> next_session_;
  std::set<std::string> corrupted_;
  std::map<std::string, uint64_t> corrupted_at_;
  std::set<std::string> extracted_;
};

}  // namespace idak
