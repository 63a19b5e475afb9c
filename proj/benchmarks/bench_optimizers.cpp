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

#include "vqbench/cmaes.hpp"
#include "vqbench/spsa.hpp"

namespace {

double sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

void BM_CmaSphere(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<double> x0(n, 1.0);
  vqb::CmaConfig cfg;
  const auto schedule = vqb::one_stage(1000, 1000);
  for (auto _ : state) {
    vqb::ShotLedger ledger(schedule.total_shots());
    benchmark::DoNotOptimize(vqb::cma_minimize(vqb::plug_in(sphere), x0, cfg, schedule, ledger));
  }
}
BENCHMARK(BM_CmaSphere)->Arg(6)->Arg(16);

void BM_SpsaSphere(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<double> x0(n, 1.0);
  vqb::SpsaConfig cfg;
  const auto schedule = vqb::one_stage(1000, 1000);
  for (auto _ : state) {
    vqb::ShotLedger ledger(schedule.total_shots());
    benchmark::DoNotOptimize(vqb::spsa_minimize(vqb::plug_in(sphere), x0, cfg, schedule, ledger));
  }
}
BENCHMARK(BM_SpsaSphere)->Arg(6)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
