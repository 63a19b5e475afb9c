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

#include "vqbench/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

namespace vqb {

void AnsatzCircuit::validate() const {
  if (n_params < 1) throw std::invalid_argument("ansatz: circuit has no parameters");
  std::vector<bool> used(n_params, false);
  for (const auto& f : factors) {
    if (f.param < 0 || f.param >= n_params) {
      throw std::invalid_argument(fmt::format("ansatz: parameter index {} outside [0, {})", f.param, n_params));
    }
    used[f.param] = true;
    for (const auto& t : f.terms) {
      if (t.string.n_qubits() != n_qubits) throw SizeMismatch("ansatz: factor term size mismatch");
    }
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw std::invalid_argument("ansatz: unused parameter index");
  }
}

StateVector AnsatzCircuit::initial_state() const {
  if (initial.vector) return *initial.vector;
  return StateVector::basis_state(n_qubits, initial.occupied);
}

AnsatzCircuit build_ucc(const GeneratorFile& file) {
  if (file.generators.empty()) throw std::invalid_argument("build_ucc: generator list is empty");
  std::vector<Generator> gens = file.generators;
  for (const auto& g : gens) {
    if (g.amplitude == 0.0) throw std::invalid_argument(fmt::format("build_ucc: generator {} has zero amplitude", g.index));
    if (g.terms.empty()) throw std::invalid_argument(fmt::format("build_ucc: generator {} has no terms", g.index));
  }
  auto by_amplitude = [](const Generator& a, const Generator& b) { return std::abs(a.amplitude) > std::abs(b.amplitude); };
  if (!std::is_sorted(gens.begin(), gens.end(), by_amplitude)) {
    spdlog::warn("build_ucc: generators not in descending |amplitude| order; re-sorting");
    std::stable_sort(gens.begin(), gens.end(), by_amplitude);
  }

  AnsatzCircuit c;
  c.kind = "ucc";
  c.n_qubits = file.n_qubits;
  c.electrons = file.electrons;
  c.initial.occupied.resize(file.electrons);
  std::iota(c.initial.occupied.begin(), c.initial.occupied.end(), 0);
  for (const auto& g : gens) {
    AnsatzFactor f;
    f.terms = g.terms;
    std::sort(f.terms.begin(), f.terms.end(), [](const PauliTerm& a, const PauliTerm& b) { return a.string < b.string; });
    f.param = c.n_params++;
    f.label = fmt::format("generator {}", g.index);
    c.factors.push_back(std::move(f));
  }
  c.validate();
  return c;
}

Sector hubbard_sector(const HubbardSpec& spec) {
  const int n = spec.particles();
  return Sector{n, (n + 1) / 2, n / 2};
}

AnsatzCircuit build_vha(const HubbardPartition& partition, int layers) {
  if (layers < 1) throw std::invalid_argument("build_vha: layers must be >= 1");
  if (partition.parts.empty()) throw std::invalid_argument("build_vha: empty partition");
  static constexpr TermClass kOrder[] = {TermClass::kU, TermClass::kH1, TermClass::kV1, TermClass::kH2, TermClass::kV2};

  AnsatzCircuit c;
  c.kind = "vha";
  c.n_qubits = partition.spec.n_modes();
  c.electrons = partition.spec.particles();
  for (int layer = 0; layer < layers; ++layer) {
    for (TermClass cls : kOrder) {
      auto it = partition.parts.find(cls);
      if (it == partition.parts.end()) continue;
      AnsatzFactor f;
      // exp(i*theta*H_part); the identity offset is a global phase.
      f.terms = it->second.terms();
      f.param = c.n_params++;
      f.label = fmt::format("layer {} {}", layer, to_string(cls));
      c.factors.push_back(std::move(f));
    }
  }

  const Sector sector = hubbard_sector(partition.spec);
  // Degenerate free ground spaces are split by the full Hamiltonian, the
  // first-order perturbative choice.
  const PauliSum full = partition.total();
  ExactOptions opts;
  opts.split_degeneracy = &full;
  const ExactSolution free = exact_ground(partition.hopping(), sector, opts);
  c.initial.vector = free.ground_vector;
  c.initial.degeneracy = free.degeneracy;
  c.initial.sector = sector;
  if (free.degeneracy > 1) {
    spdlog::info("build_vha: non-interacting ground space of {} in sector {} is {}-fold degenerate",
                 partition.spec.label(), sector.describe(), free.degeneracy);
  }
  c.validate();
  return c;
}

StateVector prepare(const AnsatzCircuit& circuit, std::span<const double> params) {
  if (static_cast<int>(params.size()) != circuit.n_params) {
    throw std::invalid_argument(fmt::format("prepare: {} parameters given, circuit takes {}", params.size(), circuit.n_params));
  }
  StateVector s = circuit.initial_state();
  for (const auto& f : circuit.factors) {
    const double theta = params[f.param];
    if (theta == 0.0) continue;
    for (const auto& t : f.terms) s.apply_pauli_exponential(t.string, theta * t.coeff);
  }
  return s;
}

}  // namespace vqb
