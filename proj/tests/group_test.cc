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

#include "idak/group.h"

#include <gtest/gtest.h>

#include <map>

#include "idak/error.h"
#include "idak/point_count.h"
#include "test_util.h"

namespace idak {
namespace {

using testing::Toy43;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an idak::Error";
  return ErrorCode::kDecode;
}

TEST(ParamsTest, CofactorSearchMatchesHandEnumeration) {
  // Frozen from an independent scan with a separate primality test.
  EXPECT_EQ(SearchCofactor(11), (GroupParams{43, 11, 4}));
  EXPECT_EQ(SearchCofactor(13), (GroupParams{103, 13, 8}));
  EXPECT_EQ(SearchCofactor(5), (GroupParams{19, 5, 4}));
  // q = 7: 13, 41 are 1 mod 4; 27, 55, 69 composite; 83 accepted.
  EXPECT_FALSE(IsProbablePrime(27));
  EXPECT_EQ(SearchCofactor(7), (GroupParams{83, 7, 12}));
}

TEST(ParamsTest, SearchBoundExhaustion) {
  EXPECT_EQ(CodeOf([] { SearchCofactor(7, 5); }),
            ErrorCode::kParameterSearchFailed);
}

TEST(ParamsTest, InstanceGenerateSmall) {
  Bytes seed = ToBytes("k4");
  GroupParams a = InstanceGenerate(4, seed);
  EXPECT_EQ(a.k_bits(), 4);
  EXPECT_TRUE(a.q == 11 || a.q == 13);
  EXPECT_EQ(a, InstanceGenerate(4, seed));
  EXPECT_NO_THROW(ValidateParams(a));

  GroupParams b = InstanceGenerate(3, ToBytes("k3"));
  EXPECT_TRUE(b == SearchCofactor(5) || b == SearchCofactor(7));
}

TEST(ParamsTest, InstanceGenerateAcrossSizes) {
  for (int k : {8, 16, 24, 32, 48, 64, 128}) {
    GroupParams params = InstanceGenerate(k, ToBytes("sizes"));
    EXPECT_EQ(params.k_bits(), k);
    EXPECT_NO_THROW(ValidateParams(params));
    EXPECT_EQ(params.p % 4, 3);
    EXPECT_NE(params.h % params.q, 0);
  }
}

TEST(ParamsTest, InstanceGenerateRejectsOutOfRange) {
  EXPECT_EQ(CodeOf([] { InstanceGenerate(2, ToBytes("x")); }),
            ErrorCode::kInvalidParams);
  EXPECT_EQ(CodeOf([] { InstanceGenerate(513, ToBytes("x")); }),
            ErrorCode::kInvalidParams);
}

TEST(ParamsTest, ValidateRejectsEachBrokenInvariant) {
  EXPECT_NO_THROW(ValidateParams(Toy43()));
  EXPECT_THROW(ValidateParams({43, 11, 8}), Error);   // p + 1 != h q
  EXPECT_THROW(ValidateParams({41, 7, 6}), Error);    // p = 1 mod 4
  EXPECT_THROW(ValidateParams({71, 3, 24}), Error);   // q | h
  EXPECT_THROW(ValidateParams({35, 3, 12}), Error);   // p composite
  EXPECT_THROW(ValidateParams({43, 4, 11}), Error);   // q composite
}

TEST(PointCountTest, ToyCurveHasPPlusOnePoints) {
  EXPECT_EQ(CountCurvePointsSerial(43), 44u);
  EXPECT_EQ(testing::EnumeratePoints(Toy43()).size() + 1, 44u);
}

TEST(PointCountTest, SerialAndParallelAgreeOnGeneratedParams) {
  int counted = 0;
  for (int k = 3; k <= 16; ++k) {
    GroupParams params = InstanceGenerate(k, ToBytes("count"));
    if (params.p >= (mpz_class(1) << 20)) continue;
    ++counted;
    uint64_t p = params.p.get_ui();
    EXPECT_EQ(CountCurvePointsSerial(p), p + 1) << "p=" << p;
    EXPECT_EQ(CountCurvePoints(p), p + 1) << "p=" << p;
  }
  EXPECT_GE(counted, 10);
}

class ToyGroupTest : public ::testing::Test {
 protected:
  GroupParams params_ = Toy43();
  GElem P_ = HashToGroup(params_, "point-P");
};

TEST_F(ToyGroupTest, PointAddLaws) {
  EXPECT_EQ(PointAdd(params_, GElem::Identity(), P_), P_);
  EXPECT_TRUE(PointAdd(params_, P_, Negate(params_, P_)).is_identity());
  EXPECT_EQ(PointAdd(params_, P_, P_), ScalarExp(params_, P_, 2));
}

TEST_F(ToyGroupTest, OffCurveInputIsMalformed) {
  GElem bad(mpz_class(1), mpz_class(1));
  ASSERT_FALSE(OnCurve(params_, bad));
  EXPECT_EQ(CodeOf([&] { PointAdd(params_, bad, P_); }),
            ErrorCode::kMalformedElement);
  EXPECT_EQ(CodeOf([&] { ScalarExp(params_, bad, 3); }),
            ErrorCode::kMalformedElement);
}

TEST_F(ToyGroupTest, ScalarExpMatchesRepeatedAddition) {
  for (uint64_t n = 0; n <= 30; ++n) {
    EXPECT_EQ(ScalarExp(params_, P_, mpz_class(n)),
              testing::RepeatedAdd(params_, P_, n))
        << "n=" << n;
  }
  EXPECT_TRUE(ScalarExp(params_, P_, 0).is_identity());
  EXPECT_TRUE(ScalarExp(params_, P_, params_.q).is_identity());
  EXPECT_EQ(ScalarExp(params_, P_, -3), Negate(params_, ScalarExp(params_, P_, 3)));
}

TEST_F(ToyGroupTest, SubgroupHasElevenElements) {
  std::map<std::string, int> seen;
  GElem acc;
  for (int i = 0; i < 11; ++i) {
    seen[acc.is_identity() ? "O" : acc.x().get_str() + "," + acc.y().get_str()]++;
    acc = PointAdd(params_, acc, P_);
  }
  EXPECT_TRUE(acc.is_identity());
  EXPECT_EQ(seen.size(), 11u);
  // Among the 43 affine points only 10 lie in the order-11 subgroup.
  int members = 0;
  for (const GElem& Q : testing::EnumeratePoints(params_)) {
    if (InSubgroup(params_, Q)) ++members;
  }
  EXPECT_EQ(members, 10);
}

TEST(ScalarExpProperty, HomomorphismOnDeskParams) {
  GroupParams params = InstanceGenerate(32, ToBytes("homomorphism"));
  GElem P = HashToGroup(params, "P");
  Drbg rng("homomorphism-rng");
  for (int i = 0; i < 50; ++i) {
    mpz_class a = rng.UniformBelow(params.q);
    mpz_class b = rng.UniformBelow(params.q);
    EXPECT_EQ(ScalarExp(params, P, a + b),
              PointAdd(params, ScalarExp(params, P, a), ScalarExp(params, P, b)));
  }
}

TEST(HashToGroupTest, DeterministicSubgroupMember) {
  GroupParams params = InstanceGenerate(32, ToBytes("h2g"));
  GElem a1 = HashToGroup(params, "alice@example.com");
  GElem a2 = HashToGroup(params, "alice@example.com");
  EXPECT_EQ(a1, a2);
  EXPECT_FALSE(a1.is_identity());
  EXPECT_TRUE(ScalarExp(params, a1, params.q).is_identity());
}

TEST(HashToGroupTest, ToyIdentitiesDiffer) {
  GroupParams params = Toy43();
  GElem alice = HashToGroup(params, "alice");
  GElem bob = HashToGroup(params, "bob");
  EXPECT_NE(alice, bob);
  EXPECT_TRUE(InSubgroup(params, alice));
  EXPECT_TRUE(InSubgroup(params, bob));
}

TEST(HashToGroupTest, EmptyIdentityRejected) {
  EXPECT_EQ(CodeOf([] { HashToGroup(Toy43(), ""); }),
            ErrorCode::kInvalidIdentity);
}

TEST(RandomScalarTest, RangeReplayAndFrequency) {
  GroupParams params = Toy43();
  Drbg rng("scalars");
  std::map<unsigned long, int> freq;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    Scalar s = RandomScalar(params, rng);
    ASSERT_GE(s.value(), 1);
    ASSERT_LT(s.value(), params.q);
    freq[s.value().get_ui()]++;
  }
  ASSERT_EQ(freq.size(), 10u);
  for (const auto& [v, count] : freq) {
    EXPECT_NEAR(count / double(draws), 0.1, 0.02) << "residue " << v;
  }
  Drbg r1("replay");
  Drbg r2("replay");
  EXPECT_EQ(RandomScalar(params, r1), RandomScalar(params, r2));
}

TEST(GtTest, ArithmeticLaws) {
  GroupParams params = Toy43();
  // Norm-1 element of order dividing p + 1, pushed into the order-q part.
  GtElem z = GtExp(params, GtElem(Fp2{3, 5}), mpz_class(42 * 4));
  ASSERT_FALSE(z.is_one());
  EXPECT_TRUE(IsGtMember(params, z));
  EXPECT_TRUE(GtExp(params, z, 0).is_one());
  EXPECT_TRUE(GtMul(params, z, GtInv(params, z)).is_one());
  EXPECT_TRUE(GtExp(params, z, params.q).is_one());
}

}  // namespace
}  // namespace idak
