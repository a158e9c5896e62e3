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

#include <cstdint>
#include <string_view>

#include "idak/bytes.h"
#include "idak/drbg.h"
#include "idak/field.h"

namespace idak {

// Supersingular curve y^2 = x^3 + x over F_p, p = 3 (mod 4), with
// #E(F_p) = p + 1 = h * q. G is the order-q subgroup, G1 the order-q
// subgroup of F_p2^*.
struct GroupParams {
  mpz_class p;
  mpz_class q;
  mpz_class h;

  int k_bits() const { return static_cast<int>(BitLength(q)); }
  // Width of one big-endian coordinate in the point encoding.
  size_t field_bytes() const { return (BitLength(p) + 7) / 8; }

  friend bool operator==(const GroupParams& l, const GroupParams& r) {
    return l.p == r.p && l.q == r.q && l.h == r.h;
  }
};

inline constexpr int kMillerRabinRounds = 50;
inline constexpr uint64_t kDefaultCofactorBound = uint64_t{1} << 20;
inline constexpr int kMinKBits = 3;
inline constexpr int kMaxKBits = 512;

bool IsProbablePrime(const mpz_class& n);

// Throws kInvalidParams unless every GroupParams invariant holds.
void ValidateParams(const GroupParams& params);

// Scans even cofactors h = 2, 4, ... (at most `bound` candidates) for the
// first h with p = h*q - 1 prime, p = 3 (mod 4) and q not dividing h.
// Throws kParameterSearchFailed when the bound is exhausted.
GroupParams SearchCofactor(const mpz_class& q,
                           uint64_t bound = kDefaultCofactorBound);

// Samples a k_bits-bit prime q from the seed stream, then SearchCofactor.
GroupParams InstanceGenerate(int k_bits, ByteView seed,
                             uint64_t bound = kDefaultCofactorBound);

// Exponent in Z_q. Construction reduces modulo q.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const mpz_class& v, const GroupParams& params);

  const mpz_class& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const Scalar& l, const Scalar& r) {
    return l.value_ == r.value_;
  }

 private:
  mpz_class value_;
};

// Uniform on {1, ..., q-1}.
Scalar RandomScalar(const GroupParams& params, Drbg& rng);

// Affine curve point or the identity O.
class GElem {
 public:
  GElem() = default;
  GElem(mpz_class x, mpz_class y)
      : identity_(false), x_(std::move(x)), y_(std::move(y)) {}

  static GElem Identity() { return GElem(); }

  bool is_identity() const { return identity_; }
  const mpz_class& x() const { return x_; }
  const mpz_class& y() const { return y_; }

  friend bool operator==(const GElem& l, const GElem& r) {
    if (l.identity_ || r.identity_) return l.identity_ == r.identity_;
    return l.x_ == r.x_ && l.y_ == r.y_;
  }

 private:
  bool identity_ = true;
  mpz_class x_;
  mpz_class y_;
};

bool OnCurve(const GroupParams& params, const GElem& P);
bool InSubgroup(const GroupParams& params, const GElem& P);

GElem Negate(const GroupParams& params, const GElem& P);
// Chord-tangent addition. Throws kMalformedElement for off-curve input.
GElem PointAdd(const GroupParams& params, const GElem& P, const GElem& Q);
// n-fold addition by double-and-add; negative n uses -P. No reduction of n.
GElem ScalarExp(const GroupParams& params, const GElem& P, const mpz_class& n);
inline GElem ScalarExp(const GroupParams& params, const GElem& P,
                       const Scalar& n) {
  return ScalarExp(params, P, n.value());
}

// Element of the order-q subgroup of F_p2^*.
class GtElem {
 public:
  GtElem() : value_(field::One()) {}
  explicit GtElem(Fp2 value) : value_(std::move(value)) {}

  static GtElem One() { return GtElem(); }

  const Fp2& value() const { return value_; }
  bool is_one() const { return value_ == field::One(); }

  friend bool operator==(const GtElem& l, const GtElem& r) {
    return l.value_ == r.value_;
  }

 private:
  Fp2 value_;
};

GtElem GtMul(const GroupParams& params, const GtElem& a, const GtElem& b);
GtElem GtExp(const GroupParams& params, const GtElem& z, const mpz_class& n);
inline GtElem GtExp(const GroupParams& params, const GtElem& z,
                    const Scalar& n) {
  return GtExp(params, z, n.value());
}
GtElem GtInv(const GroupParams& params, const GtElem& z);
// value != 0 and value^q = 1.
bool IsGtMember(const GroupParams& params, const GtElem& z);

inline constexpr uint8_t kHashToGroupTag = 0x01;
inline constexpr uint32_t kHashToGroupMaxCounter = 1u << 16;

// Try-and-increment onto the curve followed by cofactor clearing.
// Throws kInvalidIdentity for an empty id, kHashFailure if the counter is
// exhausted.
GElem HashToGroup(const GroupParams& params, ByteView id);
inline GElem HashToGroup(const GroupParams& params, std::string_view id) {
  return HashToGroup(params, ByteView(ToBytes(id)));
}

namespace detail {
// Unchecked group law on curve points; inputs must already be on the curve.
GElem Add(const GroupParams& params, const GElem& P, const GElem& Q);
GElem Mul(const GroupParams& params, const GElem& P, const mpz_class& n);
}  // namespace detail

}  // namespace idak
