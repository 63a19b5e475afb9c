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

#include "vqbench/optimizer.hpp"

namespace vqb {

NoisyEvaluator plug_in(std::function<double(std::span<const double>)> f) {
  return [f = std::move(f)](std::span<const double> x, std::int64_t shots, ShotLedger& ledger) -> std::optional<double> {
    if (!ledger.try_debit(shots)) return std::nullopt;
    return f(x);
  };
}

Candidates extract_candidates(const OptResult& r) {
  Candidates c;
  c.best = r.best_params.empty() ? r.x0 : r.best_params;
  c.favourite = r.favourite_params.empty() ? r.x0 : r.favourite_params;
  return c;
}

EvaluationDriver::EvaluationDriver(const NoisyEvaluator& cost, const ShotSchedule& schedule, ShotLedger& ledger,
                                   OptResult& result)
    : cost_(cost), schedule_(schedule), ledger_(ledger), result_(result) {}

std::optional<double> EvaluationDriver::evaluate(std::span<const double> x) {
  if (exhausted_) return std::nullopt;
  const auto point = schedule_.at(result_.evaluations);
  if (!point) {
    exhausted_ = true;
    return std::nullopt;
  }
  const auto value = cost_(x, point->shots_per_pauli, ledger_);
  if (!value) {
    exhausted_ = true;
    return std::nullopt;
  }
  result_.shots_spent += point->shots_per_pauli;
  TraceEntry e{result_.evaluations, point->stage, point->shots_per_pauli,
               std::vector<double>(x.begin(), x.end()), *value, result_.shots_spent};
  if (*value < result_.best_value) {
    result_.best_value = *value;
    result_.best_params = e.params;
    result_.best_evaluation = e.evaluation;
  }
  result_.trace.push_back(std::move(e));
  ++result_.evaluations;
  return value;
}

}  // namespace vqb
