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

#include "vqbench/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/format.h>

namespace vqb {
namespace {

using cplx = std::complex<double>;

void check_size(const StateVector& s, const PauliString& p) {
  if (p.n_qubits() != s.n_qubits()) {
    throw SizeMismatch(fmt::format("pauli on {} qubits applied to {}-qubit state", p.n_qubits(), s.n_qubits()));
  }
}

// Phase of P|b> = phase(b) |b ^ x>: i^{#Y} (-1)^{|b & z|}.
struct PauliAction {
  std::uint64_t x;
  std::uint64_t z;
  cplx base;

  explicit PauliAction(const PauliString& p)
      : x(p.x_mask()), z(p.z_mask()), base(PauliPhase{p.y_count() & 3}.value()) {}

  cplx phase(std::uint64_t b) const { return (std::popcount(b & z) & 1) ? -base : base; }
};

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument(fmt::format("StateVector: n_qubits={} outside [1, {}]", n_qubits, kMaxQubits));
  }
  amps_.assign(std::size_t{1} << n_qubits, cplx{});
  amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<Amplitude> amps) : n_qubits_(n_qubits), amps_(std::move(amps)) {
  if (n_qubits < 1 || n_qubits > kMaxQubits || amps_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("StateVector: amplitude count does not match 2^n_qubits");
  }
  const double nrm = norm();
  if (!(nrm > 0.0) || !std::isfinite(nrm)) throw std::invalid_argument("StateVector: zero or non-finite norm");
  for (auto& a : amps_) a /= nrm;
}

StateVector StateVector::basis_state(int n_qubits, std::span<const int> occupied) {
  StateVector s(n_qubits);
  std::size_t index = 0;
  for (int q : occupied) {
    if (q < 0 || q >= n_qubits) {
      throw std::out_of_range(fmt::format("basis_state: qubit {} outside [0, {})", q, n_qubits));
    }
    index |= std::size_t{1} << q;
  }
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void StateVector::apply_pauli_exponential(const PauliString& p, double angle) {
  check_size(*this, p);
  const double c = std::cos(angle);
  const cplx is(0.0, std::sin(angle));
  const PauliAction act(p);
  const std::size_t dim = amps_.size();
  if (act.x == 0) {
    for (std::size_t b = 0; b < dim; ++b) amps_[b] *= c + is * act.phase(b);
    return;
  }
  // Each b pairs with b ^ x; visit the member whose highest flipped bit is clear.
  const std::uint64_t top = std::uint64_t{1} << (63 - std::countl_zero(act.x));
  for (std::size_t b = 0; b < dim; ++b) {
    if (b & top) continue;
    const std::size_t partner = b ^ act.x;
    const cplx a0 = amps_[b];
    const cplx a1 = amps_[partner];
    // (P psi)[b] = phase(partner) psi[partner]
    amps_[b] = c * a0 + is * act.phase(partner) * a1;
    amps_[partner] = c * a1 + is * act.phase(b) * a0;
  }
}

void StateVector::apply_pauli(const PauliString& p) {
  check_size(*this, p);
  const PauliAction act(p);
  std::vector<Amplitude> out(amps_.size());
  for (std::size_t b = 0; b < amps_.size(); ++b) out[b ^ act.x] = act.phase(b) * amps_[b];
  amps_ = std::move(out);
}

StateVector::Amplitude StateVector::inner(const StateVector& other) const {
  if (other.n_qubits_ != n_qubits_) throw SizeMismatch("inner: state sizes differ");
  cplx acc{};
  for (std::size_t b = 0; b < amps_.size(); ++b) acc += std::conj(amps_[b]) * other.amps_[b];
  return acc;
}

StateVector basis_state(int n_qubits, std::span<const int> occupied) {
  return StateVector::basis_state(n_qubits, occupied);
}

StateVector apply_pauli_exponential(StateVector state, const PauliString& p, double angle) {
  state.apply_pauli_exponential(p, angle);
  return state;
}

double expectation(const StateVector& state, const PauliString& p) {
  check_size(state, p);
  const PauliAction act(p);
  const auto amps = state.amplitudes();
  cplx acc{};
  for (std::size_t b = 0; b < amps.size(); ++b) acc += std::conj(amps[b ^ act.x]) * act.phase(b) * amps[b];
  return std::clamp(acc.real(), -1.0, 1.0);
}

double expectation_sum(const StateVector& state, const PauliSum& h) {
  if (h.n_qubits() != state.n_qubits()) throw SizeMismatch("expectation_sum: sizes differ");
  double acc = h.identity_coeff();
  for (const auto& t : h.terms()) acc += t.coeff * expectation(state, t.string);
  return acc;
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(a.inner(b)); }

}  // namespace vqb
