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

#include <utility>

#include "idak/group.h"

namespace idak {

// phi(x, y) = (-x, i*y): maps G into a subgroup of E(F_p2) independent of G.
std::pair<Fp2, Fp2> DistortionMap(const GroupParams& params, const GElem& P);

// True iff (x, y) satisfies y^2 = x^3 + x over F_p2.
bool OnCurveFp2(const GroupParams& params, const Fp2& x, const Fp2& y);

// Modified Tate pairing e(P, Q) = f_{q,P}(phi(Q))^((p^2 - 1)/q).
// Symmetric and bilinear on G x G. Either argument equal to O gives 1.
// Throws kMalformedElement for off-curve input.
GtElem Pairing(const GroupParams& params, const GElem& P, const GElem& Q);

}  // namespace idak
