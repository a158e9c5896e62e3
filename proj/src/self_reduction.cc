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

#include "idak/self_reduction.h"

#include <map>
#include <stdexcept>
#include <vector>

#include "idak/encoding.h"
#include "idak/error.h"
#include "idak/pairing.h"

namespace idak {

using field::Mod;

CbdhInstance MakeInstance(const GroupParams& params, const GElem& g,
                          const mpz_class& x, const mpz_class& y,
                          const mpz_class& z) {
  return {g, ScalarExp(params, g, x), ScalarExp(params, g, y),
          ScalarExp(params, g, z)};
}

GtElem BdhValue(const GroupParams& params, const GElem& g, const mpz_class& x,
                const mpz_class& y, const mpz_class& z) {
  return GtExp(params, Pairing(params, g, g), Mod(x * y * z, params.q));
}

CbdhInstance ApplyBlinding(const GroupParams& params, const CbdhInstance& inst,
                           const Blinding& blind) {
  auto shift = [&](const GElem& P, const mpz_class& e) {
    return detail::Add(params, P, detail::Mul(params, inst.g, e));
  };
  return {inst.g, shift(inst.X, blind.a), shift(inst.Y, blind.b),
          shift(inst.Z, blind.c)};
}

std::pair<CbdhInstance, Blinding> Randomize(const GroupParams& params,
                                            const CbdhInstance& inst,
                                            Drbg& rng) {
  Blinding blind{rng.UniformBelow(params.q), rng.UniformBelow(params.q),
                 rng.UniformBelow(params.q)};
  return {ApplyBlinding(params, inst, blind), blind};
}

CorrectionBasis MakeCorrectionBasis(const GroupParams& params,
                                    const CbdhInstance& inst) {
  return {Pairing(params, inst.X, inst.Y), Pairing(params, inst.X, inst.Z),
          Pairing(params, inst.Y, inst.Z), Pairing(params, inst.X, inst.g),
          Pairing(params, inst.Y, inst.g), Pairing(params, inst.Z, inst.g),
          Pairing(params, inst.g, inst.g)};
}

GtElem Correct(const GroupParams& params, const GtElem& w,
               const CorrectionBasis& basis, const Blinding& blind) {
  const mpz_class& q = params.q;
  const mpz_class& a = blind.a;
  const mpz_class& b = blind.b;
  const mpz_class& c = blind.c;
  // xyc + xbz + ayz + xbc + ayc + abz + abc, one pairing per monomial.
  const std::pair<const GtElem*, mpz_class> terms[] = {
      {&basis.xy, c},
      {&basis.xz, b},
      {&basis.yz, a},
      {&basis.xg, Mod(b * c, q)},
      {&basis.yg, Mod(a * c, q)},
      {&basis.zg, Mod(a * b, q)},
      {&basis.gg, Mod(a * b * c, q)},
  };
  GtElem factor = GtElem::One();
  for (const auto& [base, e] : terms) {
    factor = GtMul(params, factor, GtExp(params, *base, e));
  }
  return GtMul(params, w, GtInv(params, factor));
}

GtElem Correct(const GroupParams& params, const GtElem& w,
               const CbdhInstance& inst, const Blinding& blind) {
  return Correct(params, w, MakeCorrectionBasis(params, inst), blind);
}

namespace {

std::string Key(const GroupParams& params, const GElem& P) {
  Bytes enc = EncodePoint(params, P);
  return std::string(enc.begin(), enc.end());
}

}  // namespace

DiscreteLogTable::DiscreteLogTable(const GroupParams& params,
                                   const GElem& base)
    : params_(params), base_(base) {
  IDAK_ENFORCE(BitLength(params.q) <= 40, ErrorCode::kInvalidParams,
               "discrete-log table limited to q < 2^40");
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), params.q.get_mpz_t());
  m_ = root.get_ui() + 1;
  GElem acc;
  baby_.reserve(m_);
  for (uint64_t j = 0; j < m_; ++j) {
    baby_.try_emplace(Key(params, acc), j);
    acc = detail::Add(params, acc, base);
  }
  giant_ = Negate(params, acc);  // acc = m * base
}

mpz_class DiscreteLogTable::Log(const GElem& P) const {
  GElem gamma = P;
  for (uint64_t i = 0; i <= m_; ++i) {
    auto it = baby_.find(Key(params_, gamma));
    if (it != baby_.end()) {
      mpz_class v = mpz_class(static_cast<unsigned long>(i)) *
                        static_cast<unsigned long>(m_) +
                    static_cast<unsigned long>(it->second);
      return Mod(v, params_.q);
    }
    gamma = detail::Add(params_, gamma, giant_);
  }
  throw Error(ErrorCode::kMalformedElement, "point outside <base>");
}

MockCbdhOracle::MockCbdhOracle(const GroupParams& params,
                               std::shared_ptr<const DiscreteLogTable> logs,
                               const CbdhInstance& base, mpz_class x,
                               mpz_class y, mpz_class z, double delta)
    : params_(params),
      logs_(std::move(logs)),
      base_(base),
      x_(std::move(x)),
      y_(std::move(y)),
      z_(std::move(z)),
      delta_(delta) {}

GtElem MockCbdhOracle::TrueAnswer(const CbdhInstance& inst) const {
  if (inst == base_) return BdhValue(params_, inst.g, x_, y_, z_);
  mpz_class z = logs_->Log(inst.Z);
  return GtExp(params_, Pairing(params_, inst.X, inst.Y), z);
}

GtElem MockCbdhOracle::operator()(const CbdhInstance& inst, Drbg& rng) const {
  if (rng.NextUnit() < delta_) return TrueAnswer(inst);
  GtElem gg = Pairing(params_, inst.g, inst.g);
  return GtExp(params_, gg, rng.UniformBelow(params_.q));
}

namespace {

GtElem RunRound(const GroupParams& params, const CbdhOracle& oracle,
                const CbdhInstance& inst, const CorrectionBasis& basis,
                Drbg round_rng) {
  auto [query, blind] = Randomize(params, inst, round_rng);
  GtElem w = oracle(query, round_rng);
  return Correct(params, w, basis, blind);
}

GtElem Plurality(const GroupParams& params, const std::vector<GtElem>& votes) {
  // encoding -> (count, first round)
  std::map<Bytes, std::pair<int, size_t>> tally;
  for (size_t r = 0; r < votes.size(); ++r) {
    auto [it, inserted] =
        tally.try_emplace(EncodeGt(params, votes[r]), 0, r);
    ++it->second.first;
  }
  int best_count = 0;
  size_t best_round = 0;
  for (const auto& [enc, entry] : tally) {
    auto [count, first] = entry;
    if (count > best_count || (count == best_count && first < best_round)) {
      best_count = count;
      best_round = first;
    }
  }
  return votes[best_round];
}

}  // namespace

GtElem AmplifySerial(const GroupParams& params, const CbdhOracle& oracle,
                     const CbdhInstance& inst, int n, Drbg& rng) {
  if (n < 1) throw std::invalid_argument("amplify needs n >= 1");
  Drbg base = rng.Fork();
  CorrectionBasis basis = MakeCorrectionBasis(params, inst);
  std::vector<GtElem> votes;
  votes.reserve(n);
  for (int r = 0; r < n; ++r) {
    votes.push_back(RunRound(params, oracle, inst, basis, base.Child(r)));
  }
  return Plurality(params, votes);
}

GtElem Amplify(const GroupParams& params, const CbdhOracle& oracle,
               const CbdhInstance& inst, int n, Drbg& rng) {
  if (n < 1) throw std::invalid_argument("amplify needs n >= 1");
  Drbg base = rng.Fork();
  CorrectionBasis basis = MakeCorrectionBasis(params, inst);
  std::vector<GtElem> votes(n);
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < n; ++r) {
    votes[r] = RunRound(params, oracle, inst, basis, base.Child(r));
  }
  return Plurality(params, votes);
}

ReductionReport RunReductionExperiment(const GroupParams& params,
                                       const GElem& g, double delta, int n,
                                       int trials, Drbg& rng) {
  auto logs = std::make_shared<const DiscreteLogTable>(params, g);
  ReductionReport report;
  report.delta = delta;
  report.n = n;
  report.trials = trials;
  for (int t = 0; t < trials; ++t) {
    mpz_class x = RandomScalar(params, rng).value();
    mpz_class y = RandomScalar(params, rng).value();
    mpz_class z = RandomScalar(params, rng).value();
    CbdhInstance inst = MakeInstance(params, g, x, y, z);
    MockCbdhOracle mock(params, logs, inst, x, y, z, delta);
    GtElem answer = Amplify(params, std::cref(mock), inst, n, rng);
    if (answer == BdhValue(params, g, x, y, z)) ++report.successes;
  }
  report.success_rate =
      trials > 0 ? static_cast<double>(report.successes) / trials : 0.0;
  return report;
}

}  // namespace idak
