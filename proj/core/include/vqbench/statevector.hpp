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

#include <complex>
#include <span>
#include <vector>

#include "vqbench/pauli.hpp"

namespace vqb {

/// Dense amplitudes of an n-qubit pure state. Basis index bit q is qubit q.
class StateVector {
 public:
  static constexpr int kMaxQubits = 20;
  using Amplitude = std::complex<double>;

  StateVector() = default;
  /// |0...0> on `n_qubits`.
  explicit StateVector(int n_qubits);
  /// Takes ownership of `amps` (size must be 2^n_qubits); normalizes it.
  StateVector(int n_qubits, std::vector<Amplitude> amps);

  /// Computational basis state with the listed qubits set to |1>.
  static StateVector basis_state(int n_qubits, std::span<const int> occupied);

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;

  /// state <- exp(i * angle * p) state, exact.
  void apply_pauli_exponential(const PauliString& p, double angle);
  /// state <- p state.
  void apply_pauli(const PauliString& p);

  /// <psi|other>
  Amplitude inner(const StateVector& other) const;

 private:
  int n_qubits_ = 0;
  std::vector<Amplitude> amps_;
};

/// Free-function form of StateVector::basis_state.
StateVector basis_state(int n_qubits, std::span<const int> occupied);

/// Returns exp(i * angle * p) applied to a copy of `state`.
StateVector apply_pauli_exponential(StateVector state, const PauliString& p, double angle);

/// <psi|p|psi>, clamped to [-1, 1].
double expectation(const StateVector& state, const PauliString& p);

/// identity_coeff + sum_i c_i <P_i>: the noiseless cost.
double expectation_sum(const StateVector& state, const PauliSum& h);

/// |<a|b>|^2
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace vqb
