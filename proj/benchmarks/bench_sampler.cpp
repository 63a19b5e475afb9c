// Copyright 2026 The vqbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "vqbench/ansatz.hpp"
#include "vqbench/fermion.hpp"
#include "vqbench/sampler.hpp"

namespace {

void BM_SampleExpectation(benchmark::State& state) {
  vqb::SplitMix64 rng(1);
  const std::int64_t shots = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(vqb::sample_expectation(0.3, shots, rng));
}
BENCHMARK(BM_SampleExpectation)->Arg(100)->Arg(10000)->Arg(100000);

void BM_NoisyCostHubbard(benchmark::State& state) {
  vqb::HubbardSpec spec;
  spec.rows = 2;
  spec.cols = 2;
  const auto part = vqb::build_hubbard(spec);
  const auto h = part.total();
  const auto circuit = vqb::build_vha(part, 2);
  const auto psi = vqb::prepare(circuit, std::vector<double>(circuit.n_params, 0.1));
  vqb::ShotLedger ledger(std::numeric_limits<std::int64_t>::max());
  vqb::RngStream stream{3, 0};
  for (auto _ : state) benchmark::DoNotOptimize(vqb::noisy_cost(psi, h, state.range(0), ledger, stream));
}
BENCHMARK(BM_NoisyCostHubbard)->Arg(100)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
