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

#include "test_util.h"

#include "idak/error.h"

namespace idak::testing {

GroupParams Toy43() { return GroupParams{43, 11, 4}; }

SystemParams ToySystem(PiVariant pi) { return MakeSystemParams(Toy43(), pi); }

namespace {

// Textbook affine addition written out independently of the library.
GElem NaiveAdd(const GroupParams& params, const GElem& P, const GElem& Q) {
  if (P.is_identity()) return Q;
  if (Q.is_identity()) return P;
  const mpz_class& p = params.p;
  auto mod = [&](mpz_class v) {
    v %= p;
    if (v < 0) v += p;
    return v;
  };
  auto inv = [&](const mpz_class& v) {
    mpz_class r;
    mpz_invert(r.get_mpz_t(), mod(v).get_mpz_t(), p.get_mpz_t());
    return r;
  };
  mpz_class slope;
  if (P.x() == Q.x()) {
    if (mod(P.y() + Q.y()) == 0) return GElem::Identity();
    slope = mod((3 * P.x() * P.x() + 1) * inv(2 * P.y()));
  } else {
    slope = mod((Q.y() - P.y()) * inv(Q.x() - P.x()));
  }
  mpz_class x = mod(slope * slope - P.x() - Q.x());
  mpz_class y = mod(slope * (P.x() - x) - P.y());
  return GElem(x, y);
}

}  // namespace

GElem RepeatedAdd(const GroupParams& params, const GElem& P, uint64_t n) {
  GElem acc;
  for (uint64_t i = 0; i < n; ++i) acc = NaiveAdd(params, acc, P);
  return acc;
}

std::optional<uint64_t> BruteLog(const GroupParams& params, const GElem& base,
                                 const GElem& P) {
  GElem acc;
  uint64_t limit = params.q.get_ui();
  for (uint64_t k = 0; k < limit; ++k) {
    if (acc == P) return k;
    acc = NaiveAdd(params, acc, base);
  }
  return std::nullopt;
}

std::vector<GElem> EnumeratePoints(const GroupParams& params) {
  std::vector<GElem> out;
  uint64_t p = params.p.get_ui();
  for (uint64_t x = 0; x < p; ++x) {
    uint64_t rhs = (x * x % p * x + x) % p;
    for (uint64_t y = 0; y < p; ++y) {
      if (y * y % p == rhs) out.emplace_back(mpz_class(x), mpz_class(y));
    }
  }
  return out;
}

HonestSession RunSession(const SystemParams& params, const IdentityKey& alice,
                         const IdentityKey& bob, Drbg& rng,
                         const DeriveStrategy& alice_strategy,
                         const DeriveStrategy& bob_strategy) {
  for (;;) {
    HonestSession s;
    s.a = Initiate(params, alice, rng);
    s.b = Respond(params, bob, alice.id, s.a.msg, rng);
    try {
      s.alice = Derive(params, alice, s.a.x, s.a.msg, bob.id, s.b.msg,
                       Role::kInitiator, alice_strategy);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kDegenerateExponent) continue;
      throw;
    }
    s.bob = Derive(params, bob, s.b.y, s.b.msg, alice.id, s.a.msg,
                   Role::kResponder, bob_strategy);
    s.alice_key = DeriveSessionKey(params, s.alice.secret, alice.id, bob.id,
                                   s.a.msg.r, s.b.msg.r);
    s.bob_key = DeriveSessionKey(params, s.bob.secret, alice.id, bob.id,
                                 s.a.msg.r, s.b.msg.r);
    return s;
  }
}

}  // namespace idak::testing
