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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vqbench/sampler.hpp"
#include "vqbench/schedule.hpp"

namespace vqb {

/// Noisy objective: returns the measured cost at `x` using `shots` per Pauli,
/// debiting `ledger`, or nullopt when the ledger refuses the evaluation.
using NoisyEvaluator =
    std::function<std::optional<double>(std::span<const double> x, std::int64_t shots, ShotLedger& ledger)>;

/// Wraps a deterministic function as a NoisyEvaluator that still honours the
/// ledger (debit, refuse when exhausted).
NoisyEvaluator plug_in(std::function<double(std::span<const double>)> f);

/// One evaluation as seen by the optimizer.
struct TraceEntry {
  std::int64_t evaluation = 0;
  int stage = 0;
  std::int64_t shots = 0;
  std::vector<double> params;
  double value = 0.0;
  std::int64_t cumulative_shots = 0;
};

struct OptResult {
  std::vector<double> x0;
  std::vector<double> best_params;
  /// Lowest measured value; +inf when nothing was evaluated.
  double best_value = std::numeric_limits<double>::infinity();
  /// CMA-ES: final distribution mean. SPSA: final iterate.
  std::vector<double> favourite_params;
  std::string favourite_kind;
  std::int64_t evaluations = 0;
  std::int64_t shots_spent = 0;
  std::int64_t best_evaluation = -1;
  /// CMA-ES covariance restarts.
  int restarts = 0;
  std::vector<TraceEntry> trace;
};

struct Candidates {
  std::vector<double> best;
  std::vector<double> favourite;
};

/// Best-ever and favourite parameters; both fall back to x0 when empty.
Candidates extract_candidates(const OptResult& result);

/// Steps an optimizer through a schedule: resolves shots per evaluation,
/// calls the evaluator, records the trace and the running best. Shared by
/// SPSA and CMA-ES.
class EvaluationDriver {
 public:
  EvaluationDriver(const NoisyEvaluator& cost, const ShotSchedule& schedule, ShotLedger& ledger, OptResult& result);

  /// nullopt once the schedule is exhausted or the ledger refuses.
  std::optional<double> evaluate(std::span<const double> x);
  bool exhausted() const { return exhausted_; }

 private:
  const NoisyEvaluator& cost_;
  const ShotSchedule& schedule_;
  ShotLedger& ledger_;
  OptResult& result_;
  bool exhausted_ = false;
};

}  // namespace vqb
