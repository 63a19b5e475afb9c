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

// vqbench: run, tune and analyze noisy variational optimization benchmarks.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "vqbench/config.hpp"
#include "vqbench/experiment.hpp"
#include "vqbench/hamiltonian_io.hpp"
#include "vqbench/report.hpp"
#include "vqbench/schedule.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kConfigError = 2;
constexpr int kInfeasible = 3;

void print_schedule(const vqb::ShotSchedule& s) {
  std::cout << s.describe() << '\n';
  std::cout << "stage,evaluations,shots_per_pauli\n";
  for (std::size_t i = 0; i < s.stages().size(); ++i) {
    std::cout << i << ',' << s.stages()[i].evaluations << ',' << s.stages()[i].shots_per_pauli << '\n';
  }
  std::cout << fmt::format("total_evaluations = {}\ntotal_shots = {}\novershoot = {}\n", s.total_evaluations(),
                           s.total_shots(), s.overshoot());
}

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_default_logger(spdlog::stderr_color_mt("vqbench"));
  spdlog::set_pattern("[%l] %v");

  CLI::App app{"Noisy variational optimization benchmarks"};
  app.require_subcommand(1);
  bool verbose = false;
  bool quiet = false;
  app.add_flag("-v,--verbose", verbose, "Debug logging");
  app.add_flag("-q,--quiet", quiet, "Warnings and errors only");

  std::filesystem::path config_path;
  std::filesystem::path out_dir = "out";
  int workers = 1;
  std::optional<std::uint64_t> seed;

  auto* run = app.add_subcommand("run", "Run seeded repetitions and write traces and a summary");
  run->add_option("--config", config_path, "Experiment config")->required();
  run->add_option("--workers", workers, "Concurrent repetitions")->check(CLI::PositiveNumber);
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--seed", seed, "Override base_seed");

  auto* tune = app.add_subcommand("tune", "Race optimizer hyperparameters and write elite configs");
  tune->add_option("--config", config_path, "Experiment config")->required();
  tune->add_option("--workers", workers, "Concurrent objective calls")->check(CLI::PositiveNumber);
  tune->add_option("--out", out_dir, "Output directory");
  tune->add_option("--seed", seed, "Override tune.seed");

  std::vector<std::filesystem::path> inputs;
  auto* analyze = app.add_subcommand("analyze", "Per-group means and 95% intervals from trace files");
  analyze->add_option("inputs", inputs, "Trace files or directories")->required();
  analyze->add_option("--out", out_dir, "Output directory");

  std::optional<std::filesystem::path> ham_path;
  auto* exact = app.add_subcommand("exact", "Ground energy, offset, degeneracy and sector of a problem");
  auto* exact_cfg = exact->add_option("--config", config_path, "Experiment config");
  auto* exact_ham = exact->add_option("--hamiltonian", ham_path, "Hamiltonian file");
  exact_cfg->excludes(exact_ham);

  std::string kind;
  std::int64_t budget = 0;
  std::int64_t evaluations = 0;
  std::vector<std::int64_t> stage_shots{100, 1000, 10000};
  auto* sched = app.add_subcommand("schedule", "Print the shot schedule of a config or of explicit arguments");
  auto* sched_cfg = sched->add_option("--config", config_path, "Experiment config");
  sched->add_option("--kind", kind, "one_stage or three_stage")
      ->check(CLI::IsMember({"one_stage", "three_stage"}))
      ->excludes(sched_cfg);
  sched->add_option("--budget", budget, "Shots per Pauli")->excludes(sched_cfg);
  sched->add_option("--evaluations", evaluations, "Evaluations (one_stage)")->excludes(sched_cfg);
  sched->add_option("--stage-shots", stage_shots, "Shots of the three stages")->expected(3)->excludes(sched_cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }
  spdlog::set_level(verbose ? spdlog::level::debug : quiet ? spdlog::level::warn : spdlog::level::info);

  try {
    if (*run) {
      auto cfg = vqb::load_config(config_path);
      if (seed) cfg.base_seed = *seed;
      const auto records = vqb::cmd_run(cfg, out_dir, workers);
      std::cout << fmt::format("{} runs written to {}\n", records.size(), out_dir.string());
    } else if (*tune) {
      auto cfg = vqb::load_config(config_path);
      if (seed) cfg.tune.seed = *seed;
      const auto report = vqb::cmd_tune(cfg, out_dir, workers);
      std::cout << fmt::format("{} evaluations, {} elites written to {}\n", report.evaluations_used,
                               report.elites.size(), out_dir.string());
    } else if (*analyze) {
      for (const auto& p : vqb::cmd_analyze(inputs, out_dir)) std::cout << p.string() << '\n';
    } else if (*exact) {
      if (ham_path) {
        // A bare Hamiltonian: no ansatz, sector from its electron count.
        vqb::ExperimentConfig cfg;
        cfg.hamiltonian = *ham_path;
        cfg.ansatz = "none";
        std::cout << vqb::cmd_exact(cfg);
      } else if (!config_path.empty()) {
        std::cout << vqb::cmd_exact(vqb::load_config(config_path));
      } else {
        std::cerr << "exact: one of --config or --hamiltonian is required\n";
        return kConfigError;
      }
    } else if (*sched) {
      if (!config_path.empty()) {
        print_schedule(vqb::load_config(config_path).make_schedule());
      } else if (kind == "one_stage") {
        print_schedule(vqb::one_stage(budget, evaluations));
      } else if (kind == "three_stage") {
        print_schedule(vqb::three_stage(budget, {stage_shots[0], stage_shots[1], stage_shots[2]}));
      } else {
        std::cerr << "schedule: one of --config or --kind is required\n";
        return kConfigError;
      }
    }
  } catch (const vqb::ConfigError& e) {
    spdlog::error("{}", e.what());
    return kConfigError;
  } catch (const vqb::ScheduleError& e) {
    spdlog::error("schedule infeasible: {}", e.what());
    return kInfeasible;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kFailure;
  }
  return kOk;
}
