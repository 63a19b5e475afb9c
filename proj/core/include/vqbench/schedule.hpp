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

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vqb {

/// Raised when a budget cannot support the requested schedule.
class ScheduleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Stage {
  std::int64_t evaluations = 0;
  std::int64_t shots_per_pauli = 0;
};

/// Position of one evaluation inside a schedule.
struct StagePoint {
  int stage = 0;
  std::int64_t shots_per_pauli = 0;
};

/// Shots per evaluation over a run, stage by stage. Stage changes are driven by
/// the evaluation count only.
class ShotSchedule {
 public:
  enum class Kind { kOneStage, kThreeStage };

  ShotSchedule() = default;
  ShotSchedule(Kind kind, std::vector<Stage> stages, std::int64_t nominal_budget);

  Kind kind() const { return kind_; }
  const std::vector<Stage>& stages() const { return stages_; }
  /// Budget the schedule was derived from.
  std::int64_t nominal_budget() const { return nominal_budget_; }

  std::int64_t total_evaluations() const;
  /// sum of evaluations * shots over stages: the ledger capacity a run needs.
  std::int64_t total_shots() const;
  /// total_shots() - nominal_budget(); negative when a remainder is left unspent.
  std::int64_t overshoot() const { return total_shots() - nominal_budget_; }

  /// Stage and shots of evaluation `index`, nullopt past the end.
  std::optional<StagePoint> at(std::int64_t index) const;
  /// Shot count of every evaluation in order.
  std::vector<std::int64_t> expand() const;

  /// e.g. "three_stage budget=10000000 stages=7150x100,2145x1000,715x10000"
  std::string describe() const;

 private:
  Kind kind_ = Kind::kOneStage;
  std::vector<Stage> stages_;
  std::int64_t nominal_budget_ = 0;
};

std::string to_string(ShotSchedule::Kind kind);

/// `evaluations` calls at budget / evaluations shots each (integer division).
/// evaluations == 0 yields an empty schedule. Throws ScheduleError when
/// budget < evaluations.
ShotSchedule one_stage(std::int64_t budget, std::int64_t evaluations);

/// Evaluation counts in the ratio 10:3:1 with base b = ceil(budget / (10 s1 + 3 s2 + s3)).
/// Requires s1 < s2 < s3 and budget >= one unit; throws ScheduleError otherwise.
ShotSchedule three_stage(std::int64_t budget, const std::array<std::int64_t, 3>& stage_shots);

}  // namespace vqb
