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

#include "vqbench/schedule.hpp"

#include <fmt/format.h>
#include <spdlog/spdlog.h>

namespace vqb {

ShotSchedule::ShotSchedule(Kind kind, std::vector<Stage> stages, std::int64_t nominal_budget)
    : kind_(kind), stages_(std::move(stages)), nominal_budget_(nominal_budget) {
  std::int64_t prev = 0;
  for (const auto& s : stages_) {
    if (s.evaluations < 0 || s.shots_per_pauli < 1) throw ScheduleError("schedule: invalid stage");
    if (stages_.size() > 1 && s.shots_per_pauli <= prev) {
      throw ScheduleError("schedule: shots must increase strictly across stages");
    }
    prev = s.shots_per_pauli;
  }
}

std::int64_t ShotSchedule::total_evaluations() const {
  std::int64_t n = 0;
  for (const auto& s : stages_) n += s.evaluations;
  return n;
}

std::int64_t ShotSchedule::total_shots() const {
  std::int64_t n = 0;
  for (const auto& s : stages_) n += s.evaluations * s.shots_per_pauli;
  return n;
}

std::optional<StagePoint> ShotSchedule::at(std::int64_t index) const {
  if (index < 0) return std::nullopt;
  for (std::size_t i = 0; i < stages_.size(); ++i) {
    if (index < stages_[i].evaluations) return StagePoint{static_cast<int>(i), stages_[i].shots_per_pauli};
    index -= stages_[i].evaluations;
  }
  return std::nullopt;
}

std::vector<std::int64_t> ShotSchedule::expand() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(total_evaluations()));
  for (const auto& s : stages_) out.insert(out.end(), static_cast<std::size_t>(s.evaluations), s.shots_per_pauli);
  return out;
}

std::string ShotSchedule::describe() const {
  std::string stages;
  for (const auto& s : stages_) {
    if (!stages.empty()) stages += ',';
    stages += fmt::format("{}x{}", s.evaluations, s.shots_per_pauli);
  }
  return fmt::format("{} budget={} stages={}", to_string(kind_), nominal_budget_, stages.empty() ? "none" : stages);
}

std::string to_string(ShotSchedule::Kind kind) {
  return kind == ShotSchedule::Kind::kOneStage ? "one_stage" : "three_stage";
}

ShotSchedule one_stage(std::int64_t budget, std::int64_t evaluations) {
  if (budget < 0 || evaluations < 0) throw ScheduleError("one_stage: negative budget or evaluation count");
  if (evaluations == 0) return ShotSchedule(ShotSchedule::Kind::kOneStage, {}, budget);
  if (budget < evaluations) {
    throw ScheduleError(fmt::format("one_stage: budget {} cannot fund {} evaluations at >= 1 shot", budget, evaluations));
  }
  const std::int64_t shots = budget / evaluations;
  if (const std::int64_t rest = budget - shots * evaluations; rest > 0) {
    spdlog::info("one_stage: {} shots per Pauli of the budget left unspent", rest);
  }
  return ShotSchedule(ShotSchedule::Kind::kOneStage, {{evaluations, shots}}, budget);
}

ShotSchedule three_stage(std::int64_t budget, const std::array<std::int64_t, 3>& s) {
  if (!(0 < s[0] && s[0] < s[1] && s[1] < s[2])) {
    throw ScheduleError(fmt::format("three_stage: stage shots {},{},{} must increase strictly", s[0], s[1], s[2]));
  }
  const std::int64_t unit = 10 * s[0] + 3 * s[1] + s[2];
  if (budget < unit) throw ScheduleError(fmt::format("three_stage: budget {} below one unit ({})", budget, unit));
  const std::int64_t b = (budget + unit - 1) / unit;
  ShotSchedule out(ShotSchedule::Kind::kThreeStage, {{10 * b, s[0]}, {3 * b, s[1]}, {b, s[2]}}, budget);
  if (out.overshoot() > 0) spdlog::debug("three_stage: schedule overshoots the budget by {}", out.overshoot());
  return out;
}

}  // namespace vqb
