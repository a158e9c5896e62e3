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

#include <cstdint>

namespace idak {

// Brute-force #E(F_p) for y^2 = x^3 + x, including O. Requires p < 2^32.
// The serial version is the reference; the OpenMP version must agree.
uint64_t CountCurvePointsSerial(uint64_t p);
uint64_t CountCurvePoints(uint64_t p);

}  // namespace idak
