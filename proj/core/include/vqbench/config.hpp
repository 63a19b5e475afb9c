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
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vqbench/cmaes.hpp"
#include "vqbench/fermion.hpp"
#include "vqbench/racing.hpp"
#include "vqbench/schedule.hpp"
#include "vqbench/spsa.hpp"

namespace vqb {

/// Every problem found while reading a configuration, reported together.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// Settings of `vqbench tune`.
struct TuneSettings {
  int budget = 500;
  int initial_reps = 2;
  int first_candidates = 10;
  int new_candidates = 10;
  int elites = 5;
  /// Seeded runs per objective call; the score is their median.
  int runs = 2;
  /// Shots per Pauli of each objective run; budget_per_pauli / 10 when unset.
  std::optional<std::int64_t> run_budget;
  /// Candidate scored by the objective: "best" or "favourite".
  std::string candidate = "best";
  std::optional<std::uint64_t> seed;
  /// Per-dimension bound overrides, name -> (lower, upper).
  std::map<std::string, std::pair<double, double>> bounds;
};

/// One experiment: problem, ansatz, optimizer, schedule, repetitions.
///
/// Text form, one `key = value` per line, `#` starts a comment:
///
///   label = hub2x2-cma
///   hubbard = 2x2            # or: hamiltonian = path/to/h.txt
///   ansatz = vha             # or: ucc (needs generators = path)
///   layers = 2
///   optimizer = cma          # or: spsa
///   schedule = three_stage   # or: one_stage (needs evaluations)
///   stage_shots = 100,1000,10000
///   budget_per_pauli = 10000000
///   repetitions = 15
///   base_seed = 1
struct ExperimentConfig {
  std::string label;
  std::optional<HubbardSpec> hubbard;
  std::optional<std::filesystem::path> hamiltonian;
  std::string ansatz = "vha";
  int layers = 1;
  std::optional<std::filesystem::path> generators;

  std::string optimizer = "cma";
  SpsaConfig spsa;
  CmaConfig cma;

  ShotSchedule::Kind schedule = ShotSchedule::Kind::kThreeStage;
  std::int64_t evaluations = 0;
  std::array<std::int64_t, 3> stage_shots{100, 1000, 10000};
  std::int64_t budget_per_pauli = 10'000'000;

  int repetitions = 15;
  std::uint64_t base_seed = 0;
  double noise_floor_p = 0.025;

  TuneSettings tune;

  /// Builds the shot schedule; throws ScheduleError when infeasible.
  ShotSchedule make_schedule() const;
  ShotSchedule make_schedule(std::int64_t budget) const;
  /// "2x2" or the Hamiltonian file stem.
  std::string system_label() const;
  /// Search space of the configured optimizer after bound overrides.
  ParamSpace tune_space() const;
};

/// Parses and validates. Relative paths resolve against `base_dir`. Throws
/// ConfigError listing every problem found.
ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// Writes `config` in the text form parse_config reads.
void write_config(std::ostream& out, const ExperimentConfig& config);

/// Sets the optimizer hyperparameters named by `space` to `values`.
void apply_configuration(ExperimentConfig& config, const ParamSpace& space, const Configuration& values);

}  // namespace vqb
