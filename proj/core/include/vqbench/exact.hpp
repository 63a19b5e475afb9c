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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vqbench/pauli.hpp"
#include "vqbench/statevector.hpp"

namespace vqb {

/// Particle-number and spin constraints on computational basis states. Modes
/// follow the project convention: even qubits are spin up, odd are spin down.
struct Sector {
  std::optional<int> n_particles;
  std::optional<int> n_up;
  std::optional<int> n_down;

  bool contains(std::uint64_t basis_index) const;
  std::string describe() const;
};

/// Basis indices of `sector` in increasing order.
std::vector<std::uint64_t> sector_basis(int n_qubits, const Sector& sector);

/// Raised when a restricted diagonalization is asked for a sector the
/// Hamiltonian does not conserve.
class SectorLeakError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Lowest eigenpair of a Hamiltonian.
struct ExactSolution {
  double e0 = 0.0;
  StateVector ground_vector;
  int degeneracy = 1;
  std::optional<Sector> sector;
  /// ||H v - e0 v||
  double residual = 0.0;
};

struct ExactOptions {
  /// Eigenvalues within this distance of e0 count as degenerate.
  double degeneracy_tol = 1e-8;
  /// Dense solve up to this many basis states, Lanczos above.
  std::size_t dense_limit = std::size_t{1} << 12;
  double lanczos_tol = 1e-10;
  /// When set, a degenerate ground space is first split by this operator:
  /// the vector returned is its lowest eigenvector inside the space. Only
  /// the leftover degeneracy falls back to the basis-index rule.
  const PauliSum* split_degeneracy = nullptr;
};

/// Lowest eigenpair of `h`, optionally restricted to `sector`.
///
/// Degenerate ground spaces are resolved deterministically: the returned
/// vector is the normalized projection of the lowest-index basis state with
/// non-zero weight in the ground space, phased so that amplitude is real and
/// positive. `degeneracy` counts the ground-space dimension (dense path only;
/// the Lanczos path reports 1).
ExactSolution exact_ground(const PauliSum& h, const std::optional<Sector>& sector = std::nullopt,
                           const ExactOptions& options = {});

/// H|psi> through the Pauli action, no matrix formed.
StateVector::Amplitude apply_hamiltonian_entry(const PauliSum& h, const StateVector& state, std::size_t row);
std::vector<StateVector::Amplitude> apply_hamiltonian(const PauliSum& h, std::span<const StateVector::Amplitude> psi);

}  // namespace vqb
