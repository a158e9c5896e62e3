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

#include "idak/pairing.h"

#include <gtest/gtest.h>

#include "idak/protocol.h"
#include "test_util.h"

namespace idak {
namespace {

using testing::Toy43;

// Reference Tate pairing that keeps every vertical-line denominator and raises
// to (p^2 - 1)/q by plain square-and-multiply. Shares no code with Pairing().
struct C {
  mpz_class re, im;
};

class ReferenceTate {
 public:
  explicit ReferenceTate(const GroupParams& params) : params_(params) {}

  C Eval(const GElem& P, const GElem& Q) const {
    if (P.is_identity() || Q.is_identity()) return C{1, 0};
    // phi(Q) = (-xQ, i yQ)
    C qx{M(-Q.x()), 0};
    C qy{0, Q.y()};
    C f{1, 0};
    GElem T = P;
    size_t bits = mpz_sizeinbase(params_.q.get_mpz_t(), 2);
    for (size_t i = bits - 1; i-- > 0;) {
      GElem T2 = RefAdd(T, T);
      f = Mul(Mul(f, f), Div(Line(T, T, qx, qy), Vertical(T2, qx)));
      T = T2;
      if (mpz_tstbit(params_.q.get_mpz_t(), i)) {
        GElem TP = RefAdd(T, P);
        f = Mul(f, Div(Line(T, P, qx, qy), Vertical(TP, qx)));
        T = TP;
      }
    }
    mpz_class e = (params_.p * params_.p - 1) / params_.q;
    return Pow(f, e);
  }

 private:
  mpz_class M(const mpz_class& v) const {
    mpz_class r = v % params_.p;
    if (r < 0) r += params_.p;
    return r;
  }
  mpz_class InvP(const mpz_class& v) const {
    mpz_class r;
    mpz_invert(r.get_mpz_t(), M(v).get_mpz_t(), params_.p.get_mpz_t());
    return r;
  }
  C Mul(const C& a, const C& b) const {
    return C{M(a.re * b.re - a.im * b.im), M(a.re * b.im + a.im * b.re)};
  }
  C Div(const C& a, const C& b) const {
    mpz_class n = InvP(b.re * b.re + b.im * b.im);
    return Mul(a, C{M(b.re * n), M(-b.im * n)});
  }
  C Pow(C base, mpz_class e) const {
    C r{1, 0};
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = Mul(r, base);
      base = Mul(base, base);
      e >>= 1;
    }
    return r;
  }
  GElem RefAdd(const GElem& A, const GElem& B) const {
    if (A.is_identity()) return B;
    if (B.is_identity()) return A;
    if (A.x() == B.x() && M(A.y() + B.y()) == 0) return GElem::Identity();
    mpz_class s = A.x() == B.x()
                      ? M((3 * A.x() * A.x() + 1) * InvP(2 * A.y()))
                      : M((B.y() - A.y()) * InvP(B.x() - A.x()));
    mpz_class x = M(s * s - A.x() - B.x());
    return GElem(x, M(s * (A.x() - x) - A.y()));
  }
  // Line through A and B evaluated at (qx, qy).
  C Line(const GElem& A, const GElem& B, const C& qx, const C& qy) const {
    if (A.x() == B.x() && M(A.y() + B.y()) == 0) {
      return C{M(qx.re - A.x()), qx.im};
    }
    mpz_class s = A.x() == B.x()
                      ? M((3 * A.x() * A.x() + 1) * InvP(2 * A.y()))
                      : M((B.y() - A.y()) * InvP(B.x() - A.x()));
    return C{M(qy.re - A.y() - s * (qx.re - A.x())), M(qy.im - s * qx.im)};
  }
  C Vertical(const GElem& R, const C& qx) const {
    if (R.is_identity()) return C{1, 0};
    return C{M(qx.re - R.x()), qx.im};
  }

  GroupParams params_;
};

TEST(PairingTest, MatchesReferenceWithDenominators) {
  for (const GroupParams& params :
       {Toy43(), InstanceGenerate(16, ToBytes("ref16")),
        InstanceGenerate(40, ToBytes("ref40"))}) {
    ReferenceTate ref(params);
    GElem P = HashToGroup(params, "P");
    GElem Q = HashToGroup(params, "Q");
    GtElem e = Pairing(params, P, Q);
    C r = ref.Eval(P, Q);
    EXPECT_EQ(e.value().a, r.re);
    EXPECT_EQ(e.value().b, r.im);
  }
}

TEST(PairingTest, ToyBilinearityWithKnownLogs) {
  GroupParams params = Toy43();
  GElem g = HashToGroup(params, kGeneratorSeed);
  GtElem base = Pairing(params, g, g);
  EXPECT_FALSE(base.is_one());
  EXPECT_EQ(Pairing(params, ScalarExp(params, g, 2), ScalarExp(params, g, 3)),
            GtExp(params, base, 6));
  // Exhaustive over the 11-element subgroup.
  for (int a = 0; a < 11; ++a) {
    for (int b = 0; b < 11; ++b) {
      EXPECT_EQ(Pairing(params, ScalarExp(params, g, a), ScalarExp(params, g, b)),
                GtExp(params, base, (a * b) % 11));
    }
  }
}

TEST(PairingTest, BilinearityOnDeskParams) {
  GroupParams params = InstanceGenerate(32, ToBytes("bilinear"));
  GElem g = HashToGroup(params, kGeneratorSeed);
  GtElem base = Pairing(params, g, g);
  Drbg rng("bilinear-rng");
  for (int i = 0; i < 100; ++i) {
    mpz_class a = rng.UniformBelow(params.q);
    mpz_class b = rng.UniformBelow(params.q);
    EXPECT_EQ(Pairing(params, ScalarExp(params, g, a), ScalarExp(params, g, b)),
              GtExp(params, base, (a * b) % params.q));
  }
}

TEST(PairingTest, NonDegenerateAndInGt) {
  for (int k = 4; k <= 64; k += 4) {
    GroupParams params = InstanceGenerate(k, ToBytes("nondegenerate"));
    GElem g = HashToGroup(params, kGeneratorSeed);
    GtElem e = Pairing(params, g, g);
    EXPECT_FALSE(e.is_one()) << "k=" << k;
    EXPECT_TRUE(IsGtMember(params, e)) << "k=" << k;
  }
}

TEST(PairingTest, SymmetricOnSubgroupPairs) {
  GroupParams params = InstanceGenerate(24, ToBytes("symmetric"));
  for (int i = 0; i < 20; ++i) {
    GElem P = HashToGroup(params, "P" + std::to_string(i));
    GElem Q = HashToGroup(params, "Q" + std::to_string(i));
    EXPECT_EQ(Pairing(params, P, Q), Pairing(params, Q, P));
  }
}

TEST(PairingTest, IdentityInputGivesOne) {
  GroupParams params = Toy43();
  GElem P = HashToGroup(params, "P");
  EXPECT_TRUE(Pairing(params, GElem::Identity(), P).is_one());
  EXPECT_TRUE(Pairing(params, P, GElem::Identity()).is_one());
}

TEST(PairingTest, DistortionImageOnCurve) {
  GroupParams params = InstanceGenerate(20, ToBytes("distortion"));
  for (int i = 0; i < 10; ++i) {
    GElem P = HashToGroup(params, "D" + std::to_string(i));
    auto [x, y] = DistortionMap(params, P);
    EXPECT_TRUE(OnCurveFp2(params, x, y));
    // phi(P) is not an F_p point unless y = 0.
    EXPECT_NE(y.b, 0);
  }
}

}  // namespace
}  // namespace idak
