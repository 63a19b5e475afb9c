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
#include <stdexcept>

#include "vqbench/ansatz.hpp"
#include "vqbench/exact.hpp"
#include "vqbench/optimizer.hpp"
#include "vqbench/pauli.hpp"
#include "vqbench/statevector.hpp"

namespace vqb {

/// Raised when E0 equals the identity offset and the relative error has no scale.
class UndefinedMetricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// |(C - E0) / (E0 - c0)|.
double relative_error(double c_value, double e0, double c0);
/// (C - E0) / |E0 - c0|; negative below the true ground energy.
double signed_relative_error(double c_value, double e0, double c0);

/// Width of the band of cost values indistinguishable from the optimum.
struct NoiseFloor {
  double variance = 0.0;
  double quantile = 0.0;  // m(p)
  double width = 0.0;     // 2 m(p) sqrt(variance)
  double p = 0.0;
};

/// Var[C] of the sampled estimator at `state` with `shots` per Pauli, and m(p)
/// the standard normal upper quantile at p. Requires 0 < p <= 0.5.
NoiseFloor noise_floor(const PauliSum& h, const StateVector& state, std::int64_t shots, double p);

/// Best-ever against favourite for one run.
struct CandidateComparison {
  double noisy_best = 0.0;  // lowest measured value
  double c_best = 0.0;      // noiseless cost at the best-ever parameters
  double c_fav = 0.0;       // noiseless cost at the favourite parameters
  double de_noisy_best = 0.0;
  double de_best = 0.0;
  double de_fav = 0.0;
  double noise_floor_width = 0.0;
};

/// Signed errors use E0 from `exact` and c0 = identity coefficient of `h`. The
/// noise floor is taken at the exact ground vector with the shot count of the
/// best-ever evaluation (0 width when nothing was evaluated). A run with no
/// evaluations reports the noiseless cost of x0 as its noisy best.
CandidateComparison compare_candidates(const OptResult& run, const AnsatzCircuit& circuit, const PauliSum& h,
                                       const ExactSolution& exact, double p = 0.025);

}  // namespace vqb
