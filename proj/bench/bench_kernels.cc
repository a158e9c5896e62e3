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

// Serial reference vs OpenMP kernels, plus per-strategy derive timings.

#include <benchmark/benchmark.h>

#include <memory>

#include "idak/point_count.h"
#include "idak/protocol.h"
#include "idak/self_reduction.h"

namespace idak {
namespace {

const GroupParams& CountParams() {
  static const GroupParams params = InstanceGenerate(18, ToBytes("bench-count"));
  return params;
}

void BM_CountPointsSerial(benchmark::State& state) {
  uint64_t p = CountParams().p.get_ui();
  for (auto _ : state) benchmark::DoNotOptimize(CountCurvePointsSerial(p));
  state.SetLabel("p=" + std::to_string(p));
}
BENCHMARK(BM_CountPointsSerial)->Unit(benchmark::kMillisecond);

void BM_CountPointsOpenMP(benchmark::State& state) {
  uint64_t p = CountParams().p.get_ui();
  for (auto _ : state) benchmark::DoNotOptimize(CountCurvePoints(p));
  state.SetLabel("p=" + std::to_string(p));
}
BENCHMARK(BM_CountPointsOpenMP)->Unit(benchmark::kMillisecond);

struct AmplifyFixture {
  GroupParams params;
  CbdhInstance inst;
  std::unique_ptr<MockCbdhOracle> mock;
  CbdhOracle oracle;

  AmplifyFixture() {
    params = InstanceGenerate(16, ToBytes("bench-amplify"));
    GElem g = HashToGroup(params, "generator");
    auto logs = std::make_shared<DiscreteLogTable>(params, g);
    inst = MakeInstance(params, g, 1234, 5678, 9012);
    mock = std::make_unique<MockCbdhOracle>(params, logs, inst, 1234, 5678,
                                            9012, 0.3);
    oracle = [m = mock.get()](const CbdhInstance& i, Drbg& r) {
      return (*m)(i, r);
    };
  }
};

AmplifyFixture& Amp() {
  static AmplifyFixture fixture;
  return fixture;
}

void BM_AmplifySerial(benchmark::State& state) {
  AmplifyFixture& f = Amp();
  Drbg rng("bench-amplify-serial");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        AmplifySerial(f.params, f.oracle, f.inst, state.range(0), rng));
  }
}
BENCHMARK(BM_AmplifySerial)->Arg(201)->Unit(benchmark::kMillisecond);

void BM_AmplifyOpenMP(benchmark::State& state) {
  AmplifyFixture& f = Amp();
  Drbg rng("bench-amplify-omp");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        Amplify(f.params, f.oracle, f.inst, state.range(0), rng));
  }
}
BENCHMARK(BM_AmplifyOpenMP)->Arg(201)->Unit(benchmark::kMillisecond);

void BM_Derive(benchmark::State& state) {
  static const auto setup = idak::Setup(64, ToBytes("bench-derive"));
  const auto& [params, msk] = setup;
  const DeriveStrategy& strategy = kAllStrategies[state.range(0)];
  IdentityKey alice = Extract(params, msk, "alice");
  IdentityKey bob = Extract(params, msk, "bob");
  Drbg rng("bench-derive");
  Initiation a = Initiate(params, alice, rng);
  Response b = Respond(params, bob, alice.id, a.msg, rng);
  Precomputation pre = Precompute(params, alice, a.x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Derive(params, alice, a.x, a.msg, bob.id, b.msg,
                                    Role::kInitiator, strategy, &pre));
  }
  state.SetLabel(StrategyName(strategy));
}
BENCHMARK(BM_Derive)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace idak

BENCHMARK_MAIN();
