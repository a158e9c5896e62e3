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

#include "idak/field.h"

#include "idak/error.h"

namespace idak::field {

mpz_class Mod(const mpz_class& v, const mpz_class& p) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return r;
}

mpz_class Inv(const mpz_class& v, const mpz_class& p) {
  mpz_class r;
  int ok = mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  IDAK_ENFORCE(ok != 0, ErrorCode::kMalformedElement, "inverse of zero");
  return r;
}

mpz_class Pow(const mpz_class& base, const mpz_class& exp,
              const mpz_class& p) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
  return r;
}

std::optional<mpz_class> Sqrt(const mpz_class& v, const mpz_class& p) {
  mpz_class a = Mod(v, p);
  mpz_class e = (p + 1) / 4;
  mpz_class r = Pow(a, e, p);
  if (Mod(r * r, p) != a) return std::nullopt;
  return r;
}

Fp2 One() { return Fp2{1, 0}; }

Fp2 Mul(const mpz_class& p, const Fp2& x, const Fp2& y) {
  // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
  mpz_class ac = x.a * y.a;
  mpz_class bd = x.b * y.b;
  mpz_class cross = (x.a + x.b) * (y.a + y.b) - ac - bd;
  return Fp2{Mod(ac - bd, p), Mod(cross, p)};
}

Fp2 Sqr(const mpz_class& p, const Fp2& x) {
  // (a + bi)^2 = (a + b)(a - b) + 2ab i
  return Fp2{Mod((x.a + x.b) * (x.a - x.b), p), Mod(2 * x.a * x.b, p)};
}

Fp2 Add(const mpz_class& p, const Fp2& x, const Fp2& y) {
  return Fp2{Mod(x.a + y.a, p), Mod(x.b + y.b, p)};
}

Fp2 Sub(const mpz_class& p, const Fp2& x, const Fp2& y) {
  return Fp2{Mod(x.a - y.a, p), Mod(x.b - y.b, p)};
}

Fp2 Conj(const mpz_class& p, const Fp2& x) { return Fp2{x.a, Mod(-x.b, p)}; }

Fp2 Inv(const mpz_class& p, const Fp2& x) {
  mpz_class norm = Mod(x.a * x.a + x.b * x.b, p);
  mpz_class inv = Inv(norm, p);
  return Fp2{Mod(x.a * inv, p), Mod(-x.b * inv, p)};
}

Fp2 Pow(const mpz_class& p, const Fp2& x, const mpz_class& exp) {
  if (exp < 0) return Pow(p, Inv(p, x), -exp);
  Fp2 result = One();
  if (exp == 0) return result;
  size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = Sqr(p, result);
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = Mul(p, result, x);
  }
  return result;
}

}  // namespace idak::field
