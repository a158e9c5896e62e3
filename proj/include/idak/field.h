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

#include <gmpxx.h>

#include <optional>

namespace idak {

// Element a + b*i of F_p2 = F_p[i]/(i^2 + 1). Coefficients kept in [0, p).
struct Fp2 {
  mpz_class a;
  mpz_class b;

  friend bool operator==(const Fp2& l, const Fp2& r) {
    return l.a == r.a && l.b == r.b;
  }
};

namespace field {

mpz_class Mod(const mpz_class& v, const mpz_class& p);
mpz_class Inv(const mpz_class& v, const mpz_class& p);
mpz_class Pow(const mpz_class& base, const mpz_class& exp, const mpz_class& p);
// Square root for p = 3 (mod 4); nullopt for non-residues.
std::optional<mpz_class> Sqrt(const mpz_class& v, const mpz_class& p);

Fp2 One();
Fp2 Mul(const mpz_class& p, const Fp2& x, const Fp2& y);
Fp2 Sqr(const mpz_class& p, const Fp2& x);
Fp2 Add(const mpz_class& p, const Fp2& x, const Fp2& y);
Fp2 Sub(const mpz_class& p, const Fp2& x, const Fp2& y);
Fp2 Conj(const mpz_class& p, const Fp2& x);
// Throws kMalformedElement for zero.
Fp2 Inv(const mpz_class& p, const Fp2& x);
// Negative exponents invert first.
Fp2 Pow(const mpz_class& p, const Fp2& x, const mpz_class& exp);

}  // namespace field
}  // namespace idak
