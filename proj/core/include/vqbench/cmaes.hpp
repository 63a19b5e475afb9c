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
#include <span>
#include <string>

#include "vqbench/optimizer.hpp"

namespace vqb {

/// The five exposed CMA-ES knobs. Every other constant (recombination
/// weights, path learning rates) follows the reference defaults.
struct CmaConfig {
  double sigma0 = 0.15;
  /// lambda; ceil(4 + 3 ln m) when unset.
  std::optional<int> population;
  /// Fraction of the population recombined: mu = ceil(parent_fraction * lambda), at least 1.
  double parent_fraction = 0.5;
  /// Learning rate of the mean.
  double c_mean = 1.0;
  /// Multiplier on the step-size damping.
  double damp_factor = 1.0;
  std::uint64_t seed = 0;
  /// Covariance failures tolerated before the run stops.
  int max_restarts = 3;

  int population_for(int dimension) const;
  int parents_for(int dimension) const;
  void validate() const;
  std::string describe(int dimension) const;
};

/// ceil(4 + 3 ln m), natural logarithm.
int default_population(int dimension);

/// (mu/mu_w, lambda) CMA-ES on the noisy cost. Selection is rank based with
/// ties broken by sample index. A generation cut short by the schedule or the
/// ledger is recorded in the trace but does not update the distribution. The
/// favourite is the final mean.
OptResult cma_minimize(const NoisyEvaluator& cost, std::span<const double> x0, const CmaConfig& config,
                       const ShotSchedule& schedule, ShotLedger& ledger);

}  // namespace vqb
