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
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "vqbench/optimizer.hpp"

namespace vqb {

/// Gains a_k = a / (A + k + 1)^alpha and c_k = c / (k + 1)^gamma.
struct SpsaConfig {
  double a = 0.15;
  double alpha = 0.602;
  double c = 0.2;
  double gamma = 0.101;
  double stability_offset = 0.0;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument when outside a, c > 0, alpha in [0, 1],
  /// gamma in [0, 1/6], A >= 0.
  void validate() const;
  std::string describe() const;
};

/// Simultaneous-perturbation gradient estimate at `theta` with perturbation
/// size `ck` and one Rademacher direction drawn from `rng`.
std::vector<double> spsa_gradient(const std::function<double(std::span<const double>)>& f,
                                  std::span<const double> theta, double ck, std::mt19937_64& rng);

/// Two evaluations per iteration at the schedule's shots; stops when the
/// schedule or the ledger runs out. Gains continue across stage boundaries.
OptResult spsa_minimize(const NoisyEvaluator& cost, std::span<const double> x0, const SpsaConfig& config,
                        const ShotSchedule& schedule, ShotLedger& ledger);

}  // namespace vqb
