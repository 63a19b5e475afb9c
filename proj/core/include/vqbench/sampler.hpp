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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>

#include "vqbench/pauli.hpp"
#include "vqbench/rng.hpp"
#include "vqbench/statevector.hpp"

namespace vqb {

/// Running account of shots per Pauli spent by one optimization run.
/// An evaluation that would overdraw the budget is refused before sampling.
class ShotLedger {
 public:
  explicit ShotLedger(std::int64_t budget_per_pauli);

  /// Debits `shots` and returns true, or leaves the ledger untouched and
  /// returns false when the remaining budget is insufficient.
  [[nodiscard]] bool try_debit(std::int64_t shots);

  std::int64_t budget() const { return budget_; }
  std::int64_t spent() const { return spent_; }
  std::int64_t remaining() const { return budget_ - spent_; }
  std::int64_t debits() const { return debits_; }

 private:
  std::int64_t budget_;
  std::int64_t spent_ = 0;
  std::int64_t debits_ = 0;
};

/// One sampled cost value.
struct NoisyValue {
  double value = 0.0;
  std::int64_t shots_per_pauli = 0;
  /// sum_i c_i^2 (1 - <P_i>^2) / M at the sampled state.
  double variance_estimate = 0.0;
};

/// Source of sampling randomness for one run. Evaluation e, term t draws from
/// the sub-stream derive_seed(seed, {e, t}), so the draws do not depend on the
/// order in which terms are visited.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t next_evaluation = 0;
};

/// 1 - 2k/M with k ~ Binomial(M, (1 - exact)/2). Throws std::domain_error when
/// `exact` lies outside [-1, 1] by more than 1e-9.
template <class Engine>
double sample_expectation(double exact, std::int64_t shots, Engine& engine);

double sample_expectation(double exact, std::int64_t shots, SplitMix64& engine);

/// Sampled estimate of <H> at `state`: identity_coeff + sum_i c_i <P_i>~, each
/// Pauli sampled independently with `shots_per_pauli`. Debits the ledger by
/// shots_per_pauli; returns nullopt (and samples nothing) when refused.
std::optional<NoisyValue> noisy_cost(const StateVector& state, const PauliSum& h, std::int64_t shots_per_pauli,
                                     ShotLedger& ledger, RngStream& stream);

/// State-independent worst case sum_i c_i^2 / M.
double variance_bound(const PauliSum& h, std::int64_t shots);

/// sum_i c_i^2 (1 - <P_i>^2) / M at `state`.
double state_variance(const StateVector& state, const PauliSum& h, std::int64_t shots);

// ---------------------------------------------------------------------------

template <class Engine>
double sample_expectation(double exact, std::int64_t shots, Engine& engine) {
  if (shots < 1) throw std::invalid_argument("sample_expectation: shots must be >= 1");
  if (!(exact >= -1.0 - 1e-9 && exact <= 1.0 + 1e-9)) {
    throw std::domain_error("sample_expectation: exact expectation outside [-1, 1]");
  }
  const double p = (1.0 - std::clamp(exact, -1.0, 1.0)) / 2.0;
  std::int64_t k = 0;
  if (p >= 1.0) {
    k = shots;
  } else if (p > 0.0) {
    std::binomial_distribution<std::int64_t> binom(shots, p);
    k = binom(engine);
  }
  return 1.0 - 2.0 * static_cast<double>(k) / static_cast<double>(shots);
}

}  // namespace vqb
