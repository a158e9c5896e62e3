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

#include "idak/error.h"
#include "idak/group.h"

namespace idak {

bool IsProbablePrime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), kMillerRabinRounds) != 0;
}

void ValidateParams(const GroupParams& params) {
  IDAK_ENFORCE(params.q > 2 && IsProbablePrime(params.q),
               ErrorCode::kInvalidParams, "q is not an odd prime");
  IDAK_ENFORCE(params.p > 3 && IsProbablePrime(params.p),
               ErrorCode::kInvalidParams, "p is not prime");
  IDAK_ENFORCE(params.p % 4 == 3, ErrorCode::kInvalidParams,
               "p is not 3 mod 4");
  IDAK_ENFORCE(params.p + 1 == params.h * params.q, ErrorCode::kInvalidParams,
               "p + 1 != h * q");
  IDAK_ENFORCE(params.h % params.q != 0, ErrorCode::kInvalidParams,
               "q divides the cofactor");
}

GroupParams SearchCofactor(const mpz_class& q, uint64_t bound) {
  for (uint64_t i = 1; i <= bound; ++i) {
    mpz_class h = mpz_class(2) * static_cast<unsigned long>(i);
    if (h % q == 0) continue;
    mpz_class p = h * q - 1;
    if (p % 4 != 3) continue;
    if (!IsProbablePrime(p)) continue;
    return GroupParams{p, q, h};
  }
  throw Error(ErrorCode::kParameterSearchFailed,
              "no cofactor within " + std::to_string(bound) + " candidates");
}

GroupParams InstanceGenerate(int k_bits, ByteView seed, uint64_t bound) {
  IDAK_ENFORCE(k_bits >= kMinKBits && k_bits <= kMaxKBits,
               ErrorCode::kInvalidParams,
               "k_bits out of range: " + std::to_string(k_bits));
  Drbg rng(Sha256({ToBytes("idak-instance-generator"), seed}));
  mpz_class top = mpz_class(1) << (k_bits - 1);
  for (;;) {
    mpz_class q = rng.UniformBelow(top) | top | 1;
    if (!IsProbablePrime(q)) continue;
    GroupParams params = SearchCofactor(q, bound);
    ValidateParams(params);
    return params;
  }
}

}  // namespace idak
