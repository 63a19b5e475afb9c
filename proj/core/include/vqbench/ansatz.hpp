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

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vqbench/exact.hpp"
#include "vqbench/fermion.hpp"
#include "vqbench/hamiltonian_io.hpp"
#include "vqbench/statevector.hpp"

namespace vqb {

/// One parameterized exponential exp(theta * G) with G = sum_k i*g_k*P_k,
/// realized as the ordered product of exp(i*theta*g_k*P_k) (first term first).
struct AnsatzFactor {
  std::vector<PauliTerm> terms;
  int param = 0;
  std::string label;
};

/// Starting state of a circuit: either an occupation (basis state) or an
/// explicit vector.
struct InitialState {
  std::vector<int> occupied;
  std::optional<StateVector> vector;
  /// Dimension of the degenerate space the explicit vector was chosen from.
  int degeneracy = 1;
  std::optional<Sector> sector;
};

/// Parameterized circuit U(theta)|phi>. Factors are applied in listed order:
/// factors.front() acts first on the initial state.
struct AnsatzCircuit {
  int n_qubits = 0;
  int electrons = 0;
  int n_params = 0;
  InitialState initial;
  std::vector<AnsatzFactor> factors;
  std::string kind;

  /// Throws std::invalid_argument when parameter indices are out of range or unused.
  void validate() const;
  StateVector initial_state() const;
};

/// Trotterized UCC: one parameter per generator in descending |amplitude|
/// order, Hartree-Fock start on modes {0..k-1}. Rejects zero amplitudes and
/// empty generator lists.
AnsatzCircuit build_ucc(const GeneratorFile& generators);

/// Layered Hamiltonian ansatz. Per layer the classes U, h1, v1, h2, v2 are
/// applied in that order (absent classes skipped), one parameter each. The
/// start is the ground vector of the hopping Hamiltonian in the sector of
/// `hubbard_sector`.
AnsatzCircuit build_vha(const HubbardPartition& partition, int layers);

/// n_particles of the spec; up = ceil(n/2), down = floor(n/2).
Sector hubbard_sector(const HubbardSpec& spec);

/// |psi(theta)> for the circuit. Throws std::invalid_argument on length mismatch.
StateVector prepare(const AnsatzCircuit& circuit, std::span<const double> params);

}  // namespace vqb
