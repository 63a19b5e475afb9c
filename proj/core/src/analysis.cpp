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

#include "vqbench/analysis.hpp"

#include <cmath>

#include <fmt/format.h>

#include "vqbench/sampler.hpp"
#include "vqbench/stats.hpp"

namespace vqb {
namespace {

double scale(double e0, double c0) {
  const double d = std::abs(e0 - c0);
  if (!(d > 0.0)) throw UndefinedMetricError(fmt::format("relative error undefined: E0 = c0 = {}", e0));
  return d;
}

}  // namespace

double relative_error(double c_value, double e0, double c0) { return std::abs(c_value - e0) / scale(e0, c0); }

double signed_relative_error(double c_value, double e0, double c0) { return (c_value - e0) / scale(e0, c0); }

NoiseFloor noise_floor(const PauliSum& h, const StateVector& state, std::int64_t shots, double p) {
  if (!(p > 0.0 && p <= 0.5)) throw std::invalid_argument("noise_floor: p must lie in (0, 0.5]");
  NoiseFloor nf;
  nf.p = p;
  nf.variance = state_variance(state, h, shots);
  nf.quantile = p == 0.5 ? 0.0 : stats::normal_upper_quantile(p);
  nf.width = 2.0 * nf.quantile * std::sqrt(nf.variance);
  return nf;
}

CandidateComparison compare_candidates(const OptResult& run, const AnsatzCircuit& circuit, const PauliSum& h,
                                       const ExactSolution& exact, double p) {
  const auto cand = extract_candidates(run);
  const double c0 = h.identity_coeff();
  CandidateComparison out;
  out.c_best = expectation_sum(prepare(circuit, cand.best), h);
  out.c_fav = expectation_sum(prepare(circuit, cand.favourite), h);
  out.noisy_best = run.trace.empty() ? out.c_best : run.best_value;
  out.de_noisy_best = signed_relative_error(out.noisy_best, exact.e0, c0);
  out.de_best = signed_relative_error(out.c_best, exact.e0, c0);
  out.de_fav = signed_relative_error(out.c_fav, exact.e0, c0);
  if (run.best_evaluation >= 0) {
    const auto shots = run.trace.at(static_cast<std::size_t>(run.best_evaluation)).shots;
    out.noise_floor_width = noise_floor(h, exact.ground_vector, shots, p).width;
  }
  return out;
}

}  // namespace vqb
