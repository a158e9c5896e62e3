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

#include <gtest/gtest.h>

#include "idak/error.h"
#include "idak/pairing.h"

namespace idak {
namespace {

class WorldTest : public ::testing::Test {
 protected:
  explicit WorldTest(SecurityMode mode = SecurityMode::kBR) {
    auto [params, msk] = idak::Setup(24, ToBytes("world-test"));
    world_ = std::make_unique<World>(params, msk, mode, ToBytes("w"));
    world_->AddPrincipal("alice");
    world_->AddPrincipal("bob");
    world_->AddPrincipal("carol");
  }

  // Relays an honest exchange and returns (initiator, responder).
  std::pair<OracleRef, OracleRef> HonestPair(const std::string& i = "alice",
                                             const std::string& j = "bob") {
    OracleRef a = world_->NewOracle(i, j);
    OracleRef b = world_->NewOracle(j, i);
    auto x = world_->Send(a, std::nullopt);
    auto y = world_->Send(b, x);
    world_->Send(a, y);
    return {a, b};
  }

  ErrorCode CodeOf(const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    ADD_FAILURE() << "expected an idak::Error";
    return ErrorCode::kDecode;
  }

  std::unique_ptr<World> world_;
};

class WpfsWorldTest : public WorldTest {
 protected:
  WpfsWorldTest() : WorldTest(SecurityMode::kWpfsBR) {}
};

TEST_F(WorldTest, HonestRelayCompletesWithEqualKeys) {
  for (int run = 0; run < 10; ++run) {
    auto [a, b] = HonestPair();
    const SessionOracle& oa = world_->oracle(a);
    const SessionOracle& ob = world_->oracle(b);
    ASSERT_TRUE(oa.completed && ob.completed);
    EXPECT_EQ(oa.role, Role::kInitiator);
    EXPECT_EQ(ob.role, Role::kResponder);
    EXPECT_EQ(*oa.key, *ob.key);
    EXPECT_TRUE(world_->Matching(a, b));
    EXPECT_TRUE(world_->Matching(b, a));
    EXPECT_EQ(oa.transcript.size(), 2u);
  }
}

TEST_F(WorldTest, SessionCountersAreUnique) {
  OracleRef r1 = world_->NewOracle("alice", "bob");
  OracleRef r2 = world_->NewOracle("alice", "bob");
  OracleRef r3 = world_->NewOracle("alice", "carol");
  EXPECT_EQ(r1.s, 1u);
  EXPECT_EQ(r2.s, 2u);
  EXPECT_EQ(r3.s, 1u);
  EXPECT_EQ(world_->oracles().size(), 3u);
  EXPECT_EQ(ToString(r2), "Pi(alice,bob,2)");
  EXPECT_EQ(CodeOf([&] { world_->NewOracle("mallory", "bob"); }),
            ErrorCode::kNoSuchPrincipal);
}

TEST_F(WorldTest, ActivationEmitsAFlow) {
  OracleRef a = world_->NewOracle("alice", "bob");
  auto x = world_->Send(a, std::nullopt);
  ASSERT_TRUE(x.has_value());
  EXPECT_FALSE(x->r.is_identity());
  EXPECT_FALSE(world_->oracle(a).completed);
  EXPECT_FALSE(world_->oracle(a).key.has_value());
  EXPECT_EQ(CodeOf([&] { world_->Send(a, std::nullopt); }),
            ErrorCode::kStaleOracle);
  EXPECT_FALSE(world_->oracle(a).aborted);
}

TEST_F(WorldTest, StaleAndMalformedSends) {
  auto [a, b] = HonestPair();
  FlowMessage any{world_->params().g};
  EXPECT_EQ(CodeOf([&] { world_->Send(a, any); }), ErrorCode::kStaleOracle);
  EXPECT_EQ(CodeOf([&] { world_->Send(b, any); }), ErrorCode::kStaleOracle);

  OracleRef c = world_->NewOracle("bob", "alice");
  EXPECT_EQ(CodeOf([&] { world_->Send(c, FlowMessage{GElem::Identity()}); }),
            ErrorCode::kInvalidFlow);
  EXPECT_TRUE(world_->oracle(c).aborted);
  EXPECT_FALSE(world_->oracle(c).completed);
  EXPECT_EQ(CodeOf([&] { world_->Send(c, any); }), ErrorCode::kStaleOracle);

  OracleRef d = world_->NewOracle("bob", "alice");
  EXPECT_EQ(CodeOf([&] { world_->Send(d, FlowMessage{GElem(0, 0)}); }),
            ErrorCode::kRejectedPoint);
  EXPECT_EQ(CodeOf([&] { world_->Send({"bob", "alice", 99}, any); }),
            ErrorCode::kNoSuchOracle);
}

TEST_F(WorldTest, ReplayToTwoRespondersGivesDifferentKeys) {
  OracleRef a = world_->NewOracle("alice", "bob");
  OracleRef b1 = world_->NewOracle("bob", "alice");
  OracleRef b2 = world_->NewOracle("bob", "alice");
  auto x = world_->Send(a, std::nullopt);
  auto y1 = world_->Send(b1, x);
  auto y2 = world_->Send(b2, x);
  ASSERT_TRUE(world_->oracle(b1).completed && world_->oracle(b2).completed);
  EXPECT_NE(y1->r, y2->r);
  EXPECT_NE(*world_->oracle(b1).key, *world_->oracle(b2).key);
}

TEST_F(WorldTest, RevealSemantics) {
  OracleRef pending = world_->NewOracle("alice", "bob");
  EXPECT_EQ(CodeOf([&] { world_->Reveal(pending); }), ErrorCode::kNoKey);
  auto [a, b] = HonestPair();
  SessionKey k1 = world_->Reveal(a);
  SessionKey k2 = world_->Reveal(a);
  EXPECT_EQ(k1, k2);
  EXPECT_EQ(k1, *world_->oracle(b).key);
  EXPECT_TRUE(world_->oracle(a).revealed);
  EXPECT_FALSE(world_->oracle(b).revealed);
}

TEST_F(WorldTest, CorruptAndExtract) {
  GElem corrupted = world_->Corrupt("alice");
  EXPECT_TRUE(world_->corrupted().contains("alice"));
  GElem extracted = world_->Extract("alice");
  EXPECT_EQ(corrupted, extracted);
  EXPECT_EQ(CodeOf([&] { world_->Corrupt("mallory"); }),
            ErrorCode::kNoSuchPrincipal);

  // Extract accepts arbitrary identity strings.
  GElem d = world_->Extract("newcomer");
  EXPECT_TRUE(world_->extracted().contains("newcomer"));
  const GroupParams& group = world_->params().group;
  GElem g_id = HashToGroup(group, "newcomer");
  // Both sides equal e(g_newcomer, g_alice)^alpha.
  EXPECT_EQ(Pairing(group, d, HashToGroup(group, "alice")),
            Pairing(group, g_id, corrupted));
}

TEST_F(WorldTest, ClockIsMonotone) {
  uint64_t before = world_->clock();
  HonestPair();
  EXPECT_EQ(world_->clock(), before + 3);
  world_->Extract("x");
  world_->Corrupt("carol");
  EXPECT_EQ(world_->clock(), before + 5);
}

TEST_F(WorldTest, ReroutedResponderMatches) {
  // X reaches Pi(bob, alice, 1); the adversary also delivers it to
  // Pi(bob, alice, 2) and relays that oracle's reply back to Alice.
  OracleRef a = world_->NewOracle("alice", "bob");
  OracleRef decoy = world_->NewOracle("bob", "alice");
  OracleRef real = world_->NewOracle("bob", "alice");
  auto x = world_->Send(a, std::nullopt);
  world_->Send(decoy, x);
  auto y2 = world_->Send(real, x);
  world_->Send(a, y2);
  EXPECT_TRUE(world_->Matching(a, real));
  EXPECT_FALSE(world_->Matching(a, decoy));
  EXPECT_EQ(*world_->oracle(a).key, *world_->oracle(real).key);
  EXPECT_NE(*world_->oracle(a).key, *world_->oracle(decoy).key);
}

TEST_F(WorldTest, ManInTheMiddleBreaksMatching) {
  OracleRef a = world_->NewOracle("alice", "bob");
  OracleRef b = world_->NewOracle("bob", "alice");
  auto x = world_->Send(a, std::nullopt);
  FlowMessage forged{ScalarExp(world_->params().group, x->r, 2)};
  auto y = world_->Send(b, forged);
  world_->Send(a, y);
  EXPECT_FALSE(world_->Matching(a, b));
  EXPECT_NE(*world_->oracle(a).key, *world_->oracle(b).key);
}

TEST_F(WorldTest, MatchingNeedsComplementaryRolesAndNames) {
  auto [a, b] = HonestPair();
  auto [c, d] = HonestPair("alice", "carol");
  EXPECT_FALSE(world_->Matching(a, a));
  EXPECT_FALSE(world_->Matching(a, d));
  EXPECT_FALSE(world_->Matching(b, c));
  OracleRef pending = world_->NewOracle("bob", "alice");
  EXPECT_FALSE(world_->Matching(a, pending));
}

TEST_F(WorldTest, UnknownKeyShareKeysDiffer) {
  // Alice believes she talks to Bob; the adversary delivers her flow to
  // Carol's oracle for peer "alice" and relays Carol's reply to Alice.
  OracleRef a = world_->NewOracle("alice", "bob");
  OracleRef c = world_->NewOracle("carol", "alice");
  auto x = world_->Send(a, std::nullopt);
  auto y = world_->Send(c, x);
  world_->Send(a, y);
  ASSERT_TRUE(world_->oracle(a).completed && world_->oracle(c).completed);
  EXPECT_FALSE(world_->Matching(a, c));
  EXPECT_NE(world_->Reveal(a), world_->Reveal(c));
}

TEST_F(WorldTest, FreshnessConditions) {
  {
    auto [a, b] = HonestPair();
    EXPECT_TRUE(world_->Fresh(a));
    EXPECT_TRUE(world_->Fresh(b));
    world_->Reveal(b);
    EXPECT_FALSE(world_->Fresh(a));  // matching oracle revealed
    EXPECT_FALSE(world_->Fresh(b));  // revealed itself
  }
  {
    auto [a, b] = HonestPair("alice", "carol");
    world_->Extract("carol");
    EXPECT_FALSE(world_->Fresh(a));
    EXPECT_FALSE(world_->Fresh(b));
  }
  {
    auto [a, b] = HonestPair("bob", "alice");
    world_->Corrupt("alice");
    EXPECT_FALSE(world_->Fresh(a));
    EXPECT_FALSE(world_->Fresh(b));
  }
  OracleRef pending = world_->NewOracle("bob", "carol");
  EXPECT_EQ(CodeOf([&] { world_->Fresh(pending); }), ErrorCode::kNotTestable);
}

TEST_F(WorldTest, RevealOfNonMatchingOracleKeepsFreshness) {
  OracleRef a = world_->NewOracle("alice", "bob");
  OracleRef decoy = world_->NewOracle("bob", "alice");
  OracleRef real = world_->NewOracle("bob", "alice");
  auto x = world_->Send(a, std::nullopt);
  world_->Send(decoy, x);
  world_->Send(a, world_->Send(real, x));
  world_->Reveal(decoy);
  EXPECT_TRUE(world_->Fresh(a));
  world_->Reveal(real);
  EXPECT_FALSE(world_->Fresh(a));
}

TEST_F(WorldTest, BrModeRefusesCorruptAfterComplete) {
  auto [a, b] = HonestPair();
  world_->Corrupt("alice");
  world_->Corrupt("bob");
  EXPECT_FALSE(world_->Fresh(a));
  Drbg rng("t");
  EXPECT_EQ(CodeOf([&] { world_->Test(a, 1, rng); }), ErrorCode::kTestRefused);
}

TEST_F(WpfsWorldTest, CorruptAfterCompleteStaysFresh) {
  auto [a, b] = HonestPair();
  world_->Corrupt("alice");
  world_->Corrupt("bob");
  EXPECT_TRUE(world_->Fresh(a));
  EXPECT_TRUE(world_->Fresh(b));
  Drbg rng("t");
  EXPECT_EQ(world_->Test(a, 1, rng), *world_->oracle(a).key);

  // A session completed after the corruption is not fresh.
  auto [c, d] = HonestPair();
  EXPECT_FALSE(world_->Fresh(c));
  EXPECT_FALSE(world_->Fresh(d));
}

TEST_F(WpfsWorldTest, CorruptBetweenFlowsDisqualifiesInitiator) {
  OracleRef a = world_->NewOracle("alice", "bob");
  OracleRef b = world_->NewOracle("bob", "alice");
  auto x = world_->Send(a, std::nullopt);
  auto y = world_->Send(b, x);
  world_->Corrupt("bob");
  world_->Send(a, y);
  EXPECT_TRUE(world_->Fresh(b));
  EXPECT_FALSE(world_->Fresh(a));
}

TEST_F(WorldTest, TestCoins) {
  auto [a, b] = HonestPair();
  Drbg rng1("coin-1");
  Drbg rng2("coin-2");
  SessionKey real = world_->Test(a, 1, rng1);
  EXPECT_EQ(real, *world_->oracle(a).key);
  EXPECT_FALSE(world_->oracle(a).revealed);
  SessionKey r1 = world_->Test(a, 0, rng1);
  SessionKey r2 = world_->Test(a, 0, rng2);
  EXPECT_NE(r1, r2);
  EXPECT_NE(r1, real);
  EXPECT_TRUE(world_->Fresh(a));
}

TEST_F(WorldTest, FreshnessIsMonotone) {
  // Random query sequences: once an oracle is not fresh it stays that way.
  Drbg rng("monotone");
  const std::string names[] = {"alice", "bob", "carol"};
  std::vector<OracleRef> completed;
  std::set<OracleRef> stale;
  for (int step = 0; step < 120; ++step) {
    uint64_t op = rng.NextU64() % 10;
    uint64_t pick = rng.NextU64() % 3;
    const std::string& i = names[pick];
    const std::string& j = names[(pick + 1 + rng.NextU64() % 2) % 3];
    if (op < 6) {
      auto [a, b] = HonestPair(i, j);
      completed.push_back(a);
      completed.push_back(b);
    } else if (op < 8 && !completed.empty()) {
      world_->Reveal(completed[rng.NextU64() % completed.size()]);
    } else if (op == 8) {
      world_->Extract(i);
    } else {
      world_->Corrupt(i);
    }
    for (const OracleRef& ref : completed) {
      bool fresh = world_->Fresh(ref);
      if (stale.contains(ref)) EXPECT_FALSE(fresh) << ToString(ref);
      if (!fresh) stale.insert(ref);
    }
  }
  EXPECT_FALSE(stale.empty());
}

TEST(SecurityModeTest, Names) {
  EXPECT_EQ(ParseSecurityMode("br"), SecurityMode::kBR);
  EXPECT_EQ(ParseSecurityMode(SecurityModeName(SecurityMode::kWpfsBR)),
            SecurityMode::kWpfsBR);
  EXPECT_THROW(ParseSecurityMode("pfs"), std::invalid_argument);
}

}  // namespace
}  // namespace idak
