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
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace vqb {

struct ParamDim {
  enum class Kind { kReal, kInteger };
  std::string name;
  Kind kind = Kind::kReal;
  double lower = 0.0;
  double upper = 1.0;
};

/// Box-bounded hyperparameter space.
struct ParamSpace {
  std::vector<ParamDim> dims;

  /// Throws std::invalid_argument unless lower < upper for every dimension
  /// and names are unique.
  void validate() const;
  std::size_t size() const { return dims.size(); }
  /// Index of `name`, or nullopt.
  std::optional<std::size_t> find(const std::string& name) const;

  /// a in [0.01, 2], alpha in [0, 1], c in [0.01, 2], gamma in [0, 1/6].
  static ParamSpace spsa_default();
  /// population in [30, 130] (integer), c_mean in [0, 1], mu in [0, 0.5],
  /// damp_factor in [0, 1], sigma0 in [0.25, 1.1].
  static ParamSpace cma_default();
};

using Configuration = std::vector<double>;

/// Uniform in the box when `around` is empty, otherwise a normal around it
/// with standard deviation spread * (upper - lower), truncated to the box by
/// resampling. Integer dimensions are rounded then clamped.
Configuration sample_config(const ParamSpace& space, const std::optional<Configuration>& around, double spread,
                            std::mt19937_64& rng);

/// Score of a configuration on one instance (lower is better). May throw.
using TuneObjective = std::function<double(const Configuration& config, std::uint64_t instance_seed)>;

struct TunerOptions {
  /// Total objective invocations.
  int budget = 500;
  /// Instances every configuration sees before the first test.
  int initial_reps = 2;
  int elite_count = 5;
  int first_candidates = 10;
  int new_per_generation = 10;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  /// Concurrent objective calls within one round.
  int workers = 1;
  /// Wall-clock guard in seconds; unset means no limit.
  std::optional<double> timeout_seconds;

  void validate() const;
};

struct Elimination {
  int config = 0;
  double p_value = 0.0;
};

struct RoundReport {
  int instances = 0;
  std::vector<int> alive;
  /// Present when a test was run.
  std::optional<double> f;
  std::optional<double> p_value;
  std::optional<double> critical;
  std::vector<Elimination> eliminated;
};

struct GenerationReport {
  int generation = 0;
  int budget = 0;
  int used = 0;
  std::vector<int> candidates;
  std::vector<RoundReport> rounds;
};

struct TunedConfig {
  int id = 0;
  Configuration values;
  double mean_score = 0.0;
  int instances = 0;
  std::optional<int> parent;
};

struct TunerReport {
  std::vector<TunedConfig> configs;  // every configuration ever raced, by id
  std::vector<GenerationReport> generations;
  /// Surviving elites sorted by mean score.
  std::vector<TunedConfig> elites;
  int evaluations_used = 0;
  int failures = 0;
};

/// Iterated racing. Each generation races the current elites and freshly
/// sampled candidates on shared instances; after `initial_reps` instances and
/// after every further instance, a one-way F-test at `alpha` is run, and when
/// significant every config whose one-sided t-test against the best has
/// p < alpha is dropped. Scores are cached per (config, instance), so elites
/// are only evaluated on instances they have not seen.
TunerReport race(const ParamSpace& space, const TuneObjective& objective, const TunerOptions& options);

/// Human-readable log of generations, rounds and eliminations.
void write_tuner_report(std::ostream& out, const ParamSpace& space, const TunerReport& report);

}  // namespace vqb
