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

#include "idak/error.h"

namespace idak {

using field::Mod;

Scalar::Scalar(const mpz_class& v, const GroupParams& params)
    : value_(Mod(v, params.q)) {}

Scalar RandomScalar(const GroupParams& params, Drbg& rng) {
  return Scalar(rng.UniformBelow(params.q - 1) + 1, params);
}

bool OnCurve(const GroupParams& params, const GElem& P) {
  if (P.is_identity()) return true;
  const mpz_class& p = params.p;
  if (P.x() < 0 || P.x() >= p || P.y() < 0 || P.y() >= p) return false;
  mpz_class rhs = Mod(P.x() * P.x() * P.x() + P.x(), p);
  return Mod(P.y() * P.y(), p) == rhs;
}

bool InSubgroup(const GroupParams& params, const GElem& P) {
  return OnCurve(params, P) && detail::Mul(params, P, params.q).is_identity();
}

GElem Negate(const GroupParams& params, const GElem& P) {
  if (P.is_identity()) return P;
  return GElem(P.x(), Mod(-P.y(), params.p));
}

namespace detail {

GElem Add(const GroupParams& params, const GElem& P, const GElem& Q) {
  if (P.is_identity()) return Q;
  if (Q.is_identity()) return P;
  const mpz_class& p = params.p;
  mpz_class lambda;
  if (P.x() == Q.x()) {
    // Q = -P, including the 2-torsion case y = 0.
    if (Mod(P.y() + Q.y(), p) == 0) return GElem::Identity();
    // Tangent slope for y^2 = x^3 + x: (3x^2 + 1) / 2y.
    lambda = Mod((3 * P.x() * P.x() + 1) * field::Inv(2 * P.y(), p), p);
  } else {
    lambda = Mod((Q.y() - P.y()) * field::Inv(Q.x() - P.x(), p), p);
  }
  mpz_class x3 = Mod(lambda * lambda - P.x() - Q.x(), p);
  mpz_class y3 = Mod(lambda * (P.x() - x3) - P.y(), p);
  return GElem(std::move(x3), std::move(y3));
}

GElem Mul(const GroupParams& params, const GElem& P, const mpz_class& n) {
  if (n < 0) return Mul(params, Negate(params, P), -n);
  GElem acc;
  if (n == 0 || P.is_identity()) return acc;
  size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    acc = Add(params, acc, acc);
    if (mpz_tstbit(n.get_mpz_t(), i)) acc = Add(params, acc, P);
  }
  return acc;
}

}  // namespace detail

GElem PointAdd(const GroupParams& params, const GElem& P, const GElem& Q) {
  IDAK_ENFORCE(OnCurve(params, P) && OnCurve(params, Q),
               ErrorCode::kMalformedElement, "point not on curve");
  return detail::Add(params, P, Q);
}

GElem ScalarExp(const GroupParams& params, const GElem& P,
                const mpz_class& n) {
  IDAK_ENFORCE(OnCurve(params, P), ErrorCode::kMalformedElement,
               "point not on curve");
  return detail::Mul(params, P, n);
}

GtElem GtMul(const GroupParams& params, const GtElem& a, const GtElem& b) {
  return GtElem(field::Mul(params.p, a.value(), b.value()));
}

GtElem GtExp(const GroupParams& params, const GtElem& z, const mpz_class& n) {
  return GtElem(field::Pow(params.p, z.value(), n));
}

GtElem GtInv(const GroupParams& params, const GtElem& z) {
  return GtElem(field::Inv(params.p, z.value()));
}

bool IsGtMember(const GroupParams& params, const GtElem& z) {
  const Fp2& v = z.value();
  if (v.a < 0 || v.a >= params.p || v.b < 0 || v.b >= params.p) return false;
  if (v.a == 0 && v.b == 0) return false;
  return field::Pow(params.p, v, params.q) == field::One();
}

GElem HashToGroup(const GroupParams& params, ByteView id) {
  IDAK_ENFORCE(!id.empty(), ErrorCode::kInvalidIdentity, "empty identity");
  const uint8_t tag[] = {kHashToGroupTag};
  for (uint32_t counter = 0; counter < kHashToGroupMaxCounter; ++counter) {
    Bytes ctr;
    AppendU32(ctr, counter);
    mpz_class x = Mod(FromBigEndian(Sha256({tag, id, ctr})), params.p);
    auto y = field::Sqrt(x * x * x + x, params.p);
    if (!y) continue;
    GElem P = detail::Mul(params, GElem(x, *y), params.h);
    if (!P.is_identity()) return P;
  }
  throw Error(ErrorCode::kHashFailure, "try-and-increment counter exhausted");
}

}  // namespace idak
