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

#include <random>

#include <benchmark/benchmark.h>

#include "vqbench/ansatz.hpp"
#include "vqbench/fermion.hpp"
#include "vqbench/statevector.hpp"

namespace {

vqb::PauliString random_string(int n, std::mt19937_64& rng) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return vqb::PauliString(n, rng() & mask, rng() & mask);
}

void BM_PauliExponential(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  vqb::StateVector s(n);
  const auto p = random_string(n, rng);
  for (auto _ : state) {
    s.apply_pauli_exponential(p, 0.1);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_PauliExponential)->DenseRange(8, 16, 4);

void BM_ExpectationSum(benchmark::State& state) {
  vqb::HubbardSpec spec;
  spec.rows = 2;
  spec.cols = static_cast<int>(state.range(0));
  const auto part = vqb::build_hubbard(spec);
  const auto h = part.total();
  const auto circuit = vqb::build_vha(part, 2);
  const std::vector<double> theta(circuit.n_params, 0.1);
  const auto psi = vqb::prepare(circuit, theta);
  for (auto _ : state) benchmark::DoNotOptimize(vqb::expectation_sum(psi, h));
}
BENCHMARK(BM_ExpectationSum)->Arg(2)->Arg(3);

void BM_PrepareVha(benchmark::State& state) {
  vqb::HubbardSpec spec;
  spec.rows = 2;
  spec.cols = static_cast<int>(state.range(0));
  const auto circuit = vqb::build_vha(vqb::build_hubbard(spec), 4);
  const std::vector<double> theta(circuit.n_params, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(vqb::prepare(circuit, theta));
}
BENCHMARK(BM_PrepareVha)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
