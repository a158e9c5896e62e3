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

#include "idak/error.h"

namespace idak {

using field::Mod;

std::pair<Fp2, Fp2> DistortionMap(const GroupParams& params, const GElem& P) {
  return {Fp2{Mod(-P.x(), params.p), 0}, Fp2{0, P.y()}};
}

bool OnCurveFp2(const GroupParams& params, const Fp2& x, const Fp2& y) {
  const mpz_class& p = params.p;
  Fp2 rhs = field::Add(p, field::Mul(p, field::Sqr(p, x), x), x);
  return field::Sqr(p, y) == rhs;
}

namespace {

// Line through T with slope lambda, evaluated at phi(Q) = (-xQ, i*yQ):
//   yQ*i - yT - lambda*(-xQ - xT) = (lambda*(xQ + xT) - yT) + yQ*i.
// Vertical lines land in F_p and vanish under the final exponentiation, so
// they are never evaluated.
Fp2 LineAtDistorted(const mpz_class& p, const mpz_class& lambda,
                    const GElem& T, const GElem& Q) {
  return Fp2{Mod(lambda * (Q.x() + T.x()) - T.y(), p), Q.y()};
}

Fp2 MillerLoop(const GroupParams& params, const GElem& P, const GElem& Q) {
  const mpz_class& p = params.p;
  const mpz_class& q = params.q;
  Fp2 f = field::One();
  GElem T = P;
  size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2);
  for (size_t i = bits - 1; i-- > 0;) {
    // Doubling. T has odd order, so yT != 0.
    mpz_class lambda =
        Mod((3 * T.x() * T.x() + 1) * field::Inv(2 * T.y(), p), p);
    f = field::Mul(p, field::Sqr(p, f), LineAtDistorted(p, lambda, T, Q));
    mpz_class x3 = Mod(lambda * lambda - 2 * T.x(), p);
    mpz_class y3 = Mod(lambda * (T.x() - x3) - T.y(), p);
    T = GElem(std::move(x3), std::move(y3));

    if (mpz_tstbit(q.get_mpz_t(), i)) {
      if (T.x() == P.x()) {
        // T = -P: vertical line, reached only on the final step.
        T = GElem::Identity();
        continue;
      }
      lambda = Mod((P.y() - T.y()) * field::Inv(P.x() - T.x(), p), p);
      f = field::Mul(p, f, LineAtDistorted(p, lambda, T, Q));
      T = detail::Add(params, T, P);
    }
  }
  return f;
}

}  // namespace

GtElem Pairing(const GroupParams& params, const GElem& P, const GElem& Q) {
  IDAK_ENFORCE(OnCurve(params, P) && OnCurve(params, Q),
               ErrorCode::kMalformedElement, "pairing input not on curve");
  if (P.is_identity() || Q.is_identity()) return GtElem::One();
  const mpz_class& p = params.p;
  Fp2 f = MillerLoop(params, P, Q);
  // f^(p-1) = conj(f) / f because the Frobenius is conjugation for p = 3 mod 4.
  Fp2 unitary = field::Mul(p, field::Conj(p, f), field::Inv(p, f));
  return GtElem(field::Pow(p, unitary, params.h));
}

}  // namespace idak
