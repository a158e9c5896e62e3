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

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>

#include "idak/drbg.h"
#include "idak/group.h"

namespace idak {

// <g, g^x, g^y, g^z>.
struct CbdhInstance {
  GElem g;
  GElem X;
  GElem Y;
  GElem Z;

  friend bool operator==(const CbdhInstance&, const CbdhInstance&) = default;
};

// Exponents a, b, c in [0, q-1].
struct Blinding {
  mpz_class a;
  mpz_class b;
  mpz_class c;
};

// Any procedure answering a CBDH instance. Amplify calls it concurrently, so
// implementations must be safe to invoke from several threads; all
// randomness must come from the supplied per-round stream.
using CbdhOracle = std::function<GtElem(const CbdhInstance&, Drbg&)>;

CbdhInstance MakeInstance(const GroupParams& params, const GElem& g,
                          const mpz_class& x, const mpz_class& y,
                          const mpz_class& z);

// e(g, g)^(xyz) from known exponents.
GtElem BdhValue(const GroupParams& params, const GElem& g, const mpz_class& x,
                const mpz_class& y, const mpz_class& z);

// (g, X g^a, Y g^b, Z g^c).
CbdhInstance ApplyBlinding(const GroupParams& params, const CbdhInstance& inst,
                           const Blinding& blind);
std::pair<CbdhInstance, Blinding> Randomize(const GroupParams& params,
                                            const CbdhInstance& inst,
                                            Drbg& rng);

// Pairings of known elements whose powers make up the correction factor
//   C = e(X,Y)^c e(X,Z)^b e(Y,Z)^a e(X,g)^(bc) e(Y,g)^(ac) e(Z,g)^(ab)
//       e(g,g)^(abc).
// None of them depends on the blinding, so one basis serves every round.
struct CorrectionBasis {
  GtElem xy, xz, yz, xg, yg, zg, gg;
};

CorrectionBasis MakeCorrectionBasis(const GroupParams& params,
                                    const CbdhInstance& inst);

// w / C. Maps e(g,g)^((x+a)(y+b)(z+c)) to e(g,g)^(xyz).
GtElem Correct(const GroupParams& params, const GtElem& w,
               const CbdhInstance& inst, const Blinding& blind);
GtElem Correct(const GroupParams& params, const GtElem& w,
               const CorrectionBasis& basis, const Blinding& blind);

// Baby-step giant-step logarithms to a fixed base. Immutable after
// construction; only practical for small q.
class DiscreteLogTable {
 public:
  DiscreteLogTable(const GroupParams& params, const GElem& base);

  mpz_class Log(const GElem& P) const;

 private:
  GroupParams params_;
  GElem base_;
  uint64_t m_;
  GElem giant_;  // -m * base
  std::unordered_map<std::string, uint64_t> baby_;
};

// Answers correctly with probability delta and with a uniform GT element
// otherwise. Holds the exponents of its base instance; any other instance is
// solved through a discrete-log table for g.
class MockCbdhOracle {
 public:
  MockCbdhOracle(const GroupParams& params,
                 std::shared_ptr<const DiscreteLogTable> logs,
                 const CbdhInstance& base, mpz_class x, mpz_class y,
                 mpz_class z, double delta);

  GtElem operator()(const CbdhInstance& inst, Drbg& rng) const;

  GtElem TrueAnswer(const CbdhInstance& inst) const;

 private:
  GroupParams params_;
  std::shared_ptr<const DiscreteLogTable> logs_;
  CbdhInstance base_;
  mpz_class x_, y_, z_;
  double delta_;
};

// n rounds of randomize -> query -> correct, then a plurality vote over the
// corrected answers (ties go to the earliest). Round r draws from
// rng.Fork().Child(r), so both versions return the same value.
GtElem AmplifySerial(const GroupParams& params, const CbdhOracle& oracle,
                     const CbdhInstance& inst, int n, Drbg& rng);
GtElem Amplify(const GroupParams& params, const CbdhOracle& oracle,
               const CbdhInstance& inst, int n, Drbg& rng);

struct ReductionReport {
  double delta = 0;
  int n = 0;
  int trials = 0;
  int successes = 0;
  double success_rate = 0;
};

// Random instances over the generator g with a mock of reliability delta.
ReductionReport RunReductionExperiment(const GroupParams& params,
                                       const GElem& g, double delta, int n,
                                       int trials, Drbg& rng);

}  // namespace idak
