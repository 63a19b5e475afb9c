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
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vqbench/analysis.hpp"
#include "vqbench/ansatz.hpp"
#include "vqbench/config.hpp"
#include "vqbench/exact.hpp"
#include "vqbench/optimizer.hpp"
#include "vqbench/racing.hpp"
#include "vqbench/schedule.hpp"

namespace vqb {

/// Everything a run needs that does not depend on the seed.
struct Problem {
  std::string system;
  PauliSum hamiltonian{1};
  std::optional<Sector> sector;
  AnsatzCircuit circuit;
  ExactSolution exact;
  /// Lowest eigenvalue over the whole space, when it differs from exact.e0.
  std::optional<double> unrestricted_e0;
  double c0 = 0.0;
};

Problem build_problem(const ExperimentConfig& config);

/// One completed repetition.
struct RunRecord {
  int run = 0;
  std::uint64_t seed = 0;
  OptResult result;
  CandidateComparison comparison;
};

/// Sampled energy of the ansatz state; evaluation e draws from sub-streams of
/// `sampler_seed` keyed by e.
NoisyEvaluator vqe_cost(const Problem& problem, std::uint64_t sampler_seed);

/// Seeds of the optimizer and the sampler inside one run.
std::uint64_t optimizer_seed(std::uint64_t run_seed);
std::uint64_t sampler_seed(std::uint64_t run_seed);

/// Optimizes once from zero parameters under `schedule`.
RunRecord execute_run(const Problem& problem, const ExperimentConfig& config, const ShotSchedule& schedule, int run,
                      std::uint64_t seed);

/// Runs 0..repetitions-1 with seeds base_seed + i on up to `workers` threads.
/// `on_done` is called from the calling thread in run order.
std::vector<RunRecord> execute_runs(const Problem& problem, const ExperimentConfig& config,
                                    const ShotSchedule& schedule, int workers,
                                    const std::function<void(const RunRecord&)>& on_done = {});

/// `vqbench run`: one trace per run plus summary.csv and candidates.csv in `out_dir`.
std::vector<RunRecord> cmd_run(const ExperimentConfig& config, const std::filesystem::path& out_dir, int workers);

/// Objective of `vqbench tune`: median relative error of the chosen candidate
/// over tune.runs seeded runs at the reduced budget.
TuneObjective tuning_objective(const Problem& problem, const ExperimentConfig& config);

/// `vqbench tune`: writes tuner_report.txt, elites.csv and elite_<k>.conf.
/// A custom objective replaces the VQE objective when given.
TunerReport cmd_tune(const ExperimentConfig& config, const std::filesystem::path& out_dir, int workers,
                     const TuneObjective& objective = {});

/// `vqbench exact`: E0, c0, degeneracy and sector as text.
std::string cmd_exact(const ExperimentConfig& config);

}  // namespace vqb
