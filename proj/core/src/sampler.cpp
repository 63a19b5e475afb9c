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

#include "vqbench/sampler.hpp"

#include <fmt/format.h>

namespace vqb {

ShotLedger::ShotLedger(std::int64_t budget_per_pauli) : budget_(budget_per_pauli) {
  if (budget_per_pauli < 0) throw std::invalid_argument("ShotLedger: negative budget");
}

bool ShotLedger::try_debit(std::int64_t shots) {
  if (shots < 0) throw std::invalid_argument("ShotLedger: negative debit");
  if (shots > remaining()) return false;
  spent_ += shots;
  ++debits_;
  return true;
}

double sample_expectation(double exact, std::int64_t shots, SplitMix64& engine) {
  return sample_expectation<SplitMix64>(exact, shots, engine);
}

std::optional<NoisyValue> noisy_cost(const StateVector& state, const PauliSum& h, std::int64_t shots_per_pauli,
                                     ShotLedger& ledger, RngStream& stream) {
  if (shots_per_pauli < 1) throw std::invalid_argument("noisy_cost: shots must be >= 1");
  if (h.n_qubits() != state.n_qubits()) throw SizeMismatch("noisy_cost: Hamiltonian and state sizes differ");
  if (!ledger.try_debit(shots_per_pauli)) return std::nullopt;

  const std::uint64_t evaluation = stream.next_evaluation++;
  NoisyValue out{h.identity_coeff(), shots_per_pauli, 0.0};
  const double m = static_cast<double>(shots_per_pauli);
  std::uint64_t term_index = 0;
  for (const auto& t : h.terms()) {
    const double mu = expectation(state, t.string);
    SplitMix64 engine(derive_seed(stream.seed, {evaluation, term_index++}));
    out.value += t.coeff * sample_expectation(mu, shots_per_pauli, engine);
    out.variance_estimate += t.coeff * t.coeff * (1.0 - mu * mu) / m;
  }
  return out;
}

double variance_bound(const PauliSum& h, std::int64_t shots) {
  if (shots < 1) throw std::invalid_argument("variance_bound: shots must be >= 1");
  return h.squared_norm() / static_cast<double>(shots);
}

double state_variance(const StateVector& state, const PauliSum& h, std::int64_t shots) {
  if (shots < 1) throw std::invalid_argument("state_variance: shots must be >= 1");
  double acc = 0.0;
  for (const auto& t : h.terms()) {
    const double mu = expectation(state, t.string);
    acc += t.coeff * t.coeff * (1.0 - mu * mu);
  }
  return acc / static_cast<double>(shots);
}

}  // namespace vqb
