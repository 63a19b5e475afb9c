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

#include "vqbench/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <fstream>
#include <memory>
#include <mutex>
#include <thread>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "vqbench/cmaes.hpp"
#include "vqbench/hamiltonian_io.hpp"
#include "vqbench/report.hpp"
#include "vqbench/rng.hpp"
#include "vqbench/sampler.hpp"
#include "vqbench/spsa.hpp"
#include "vqbench/stats.hpp"

namespace vqb {

Problem build_problem(const ExperimentConfig& config) {
  Problem p;
  p.system = config.system_label();
  if (config.hubbard) {
    const HubbardPartition part = build_hubbard(*config.hubbard);
    p.hamiltonian = part.total();
    p.sector = hubbard_sector(*config.hubbard);
    if (config.ansatz == "vha") p.circuit = build_vha(part, config.layers);
  } else {
    const HamiltonianFile file = read_hamiltonian_file(*config.hamiltonian);
    p.hamiltonian = file.hamiltonian;
    if (file.electrons > 0) {
      p.sector = Sector{file.electrons, (file.electrons + 1) / 2, file.electrons / 2};
    }
  }
  if (config.ansatz == "ucc") {
    const GeneratorFile gens = read_generators_file(*config.generators);
    if (gens.n_qubits != p.hamiltonian.n_qubits()) {
      throw ConfigError({fmt::format("generators act on {} qubits, the Hamiltonian on {}", gens.n_qubits,
                                     p.hamiltonian.n_qubits())});
    }
    p.circuit = build_ucc(gens);
  }
  p.exact = exact_ground(p.hamiltonian, p.sector);
  p.c0 = p.hamiltonian.identity_coeff();
  if (p.sector) {
    const double full = exact_ground(p.hamiltonian).e0;
    if (std::abs(full - p.exact.e0) > 1e-9) p.unrestricted_e0 = full;
  }
  return p;
}

std::uint64_t optimizer_seed(std::uint64_t run_seed) { return derive_seed(run_seed, {stream_key("optimizer")}); }
std::uint64_t sampler_seed(std::uint64_t run_seed) { return derive_seed(run_seed, {stream_key("sampler")}); }

NoisyEvaluator vqe_cost(const Problem& problem, std::uint64_t seed) {
  auto stream = std::make_shared<RngStream>(RngStream{seed, 0});
  return [&problem, stream](std::span<const double> x, std::int64_t shots, ShotLedger& ledger) -> std::optional<double> {
    if (ledger.remaining() < shots) return std::nullopt;
    const StateVector state = prepare(problem.circuit, x);
    const auto v = noisy_cost(state, problem.hamiltonian, shots, ledger, *stream);
    if (!v) return std::nullopt;
    return v->value;
  };
}

RunRecord execute_run(const Problem& problem, const ExperimentConfig& config, const ShotSchedule& schedule, int run,
                      std::uint64_t seed) {
  RunRecord rec;
  rec.run = run;
  rec.seed = seed;
  ShotLedger ledger(schedule.total_shots());
  const NoisyEvaluator cost = vqe_cost(problem, sampler_seed(seed));
  const std::vector<double> x0(problem.circuit.n_params, 0.0);
  if (config.optimizer == "spsa") {
    SpsaConfig s = config.spsa;
    s.seed = optimizer_seed(seed);
    rec.result = spsa_minimize(cost, x0, s, schedule, ledger);
  } else {
    CmaConfig c = config.cma;
    c.seed = optimizer_seed(seed);
    rec.result = cma_minimize(cost, x0, c, schedule, ledger);
  }
  rec.comparison = compare_candidates(rec.result, problem.circuit, problem.hamiltonian, problem.exact,
                                      config.noise_floor_p);
  return rec;
}

std::vector<RunRecord> execute_runs(const Problem& problem, const ExperimentConfig& config,
                                    const ShotSchedule& schedule, int workers,
                                    const std::function<void(const RunRecord&)>& on_done) {
  const int n = config.repetitions;
  std::vector<std::optional<RunRecord>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<int> next{0};
  std::mutex m;
  std::condition_variable cv;

  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      std::optional<RunRecord> r;
      try {
        r = execute_run(problem, config, schedule, i, config.base_seed + static_cast<std::uint64_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
      {
        std::lock_guard lock(m);
        slots[i] = std::move(r);
        if (!slots[i]) slots[i].emplace();  // marks completion of a failed run
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  const int w = std::clamp(workers, 1, n);
  for (int i = 0; w > 1 && i < w; ++i) pool.emplace_back(worker);
  if (w == 1) worker();

  // Collector: hand finished runs out in order.
  std::vector<RunRecord> out;
  for (int i = 0; i < n; ++i) {
    std::unique_lock lock(m);
    cv.wait(lock, [&] { return slots[i].has_value(); });
    lock.unlock();
    if (errors[i]) {
      for (auto& t : pool) t.join();
      std::rethrow_exception(errors[i]);
    }
    if (on_done) on_done(*slots[i]);
    out.push_back(std::move(*slots[i]));
  }
  for (auto& t : pool) t.join();
  return out;
}

std::vector<RunRecord> cmd_run(const ExperimentConfig& config, const std::filesystem::path& out_dir, int workers) {
  const ShotSchedule schedule = config.make_schedule();
  const Problem problem = build_problem(config);
  std::filesystem::create_directories(out_dir);
  spdlog::info("run {}: {} repetitions, {}", config.label, config.repetitions, schedule.describe());
  if (schedule.overshoot() != 0) {
    spdlog::info("schedule spends {} shots per Pauli against a nominal budget of {} ({:+d})", schedule.total_shots(),
                 schedule.nominal_budget(), schedule.overshoot());
  }
  auto records = execute_runs(problem, config, schedule, workers, [&](const RunRecord& r) {
    std::ofstream f(out_dir / trace_file_name(r.run));
    write_trace(f, config, problem, schedule, r);
  });
  {
    std::ofstream f(out_dir / "summary.csv");
    write_summary(f, problem, records);
  }
  {
    std::ofstream f(out_dir / "candidates.csv");
    write_candidates(f, records);
  }
  return records;
}

TuneObjective tuning_objective(const Problem& problem, const ExperimentConfig& config) {
  const std::int64_t budget = config.tune.run_budget.value_or(config.budget_per_pauli / 10);
  const ShotSchedule schedule = config.make_schedule(budget);
  const ParamSpace space = config.tune_space();
  return [&problem, config, schedule, space](const Configuration& values, std::uint64_t instance) {
    ExperimentConfig c = config;
    apply_configuration(c, space, values);
    std::vector<double> errs;
    for (int r = 0; r < c.tune.runs; ++r) {
      const auto rec = execute_run(problem, c, schedule, r, derive_seed(instance, {static_cast<std::uint64_t>(r)}));
      const double cost = c.tune.candidate == "best" ? rec.comparison.c_best : rec.comparison.c_fav;
      errs.push_back(relative_error(cost, problem.exact.e0, problem.c0));
    }
    std::sort(errs.begin(), errs.end());
    const std::size_t h = errs.size() / 2;
    return errs.size() % 2 ? errs[h] : 0.5 * (errs[h - 1] + errs[h]);
  };
}

TunerReport cmd_tune(const ExperimentConfig& config, const std::filesystem::path& out_dir, int workers,
                     const TuneObjective& objective) {
  const ParamSpace space = config.tune_space();
  TunerOptions opt;
  opt.budget = config.tune.budget;
  opt.initial_reps = config.tune.initial_reps;
  opt.first_candidates = config.tune.first_candidates;
  opt.new_per_generation = config.tune.new_candidates;
  opt.elite_count = config.tune.elites;
  opt.seed = config.tune.seed.value_or(config.base_seed);
  opt.workers = workers;

  std::optional<Problem> problem;
  TuneObjective f = objective;
  if (!f) {
    // Fail on an infeasible reduced schedule before any work.
    (void)config.make_schedule(config.tune.run_budget.value_or(config.budget_per_pauli / 10));
    problem = build_problem(config);
    f = tuning_objective(*problem, config);
  }
  const TunerReport report = race(space, f, opt);

  std::filesystem::create_directories(out_dir);
  {
    std::ofstream out(out_dir / "tuner_report.txt");
    write_tuner_report(out, space, report);
  }
  {
    std::ofstream out(out_dir / "elites.csv");
    out << "rank,id,mean_score,instances";
    for (const auto& d : space.dims) out << ',' << d.name;
    out << '\n';
    for (std::size_t k = 0; k < report.elites.size(); ++k) {
      const auto& e = report.elites[k];
      out << fmt::format("{},{},{},{}", k, e.id, format_double(e.mean_score), e.instances);
      for (double v : e.values) out << ',' << format_double(v);
      out << '\n';
    }
  }
  for (std::size_t k = 0; k < report.elites.size(); ++k) {
    ExperimentConfig c = config;
    apply_configuration(c, space, report.elites[k].values);
    c.label = fmt::format("{}-elite{}", config.label, k);
    std::ofstream out(out_dir / fmt::format("elite_{}.conf", k));
    out << fmt::format("# tuned elite {} (mean score {})\n", k, format_double(report.elites[k].mean_score));
    write_config(out, c);
  }
  return report;
}

std::string cmd_exact(const ExperimentConfig& config) {
  const Problem p = build_problem(config);
  std::string out;
  out += fmt::format("system = {}\n", p.system);
  out += fmt::format("qubits = {}\n", p.hamiltonian.n_qubits());
  out += fmt::format("sector = {}\n", p.sector ? p.sector->describe() : "full");
  out += fmt::format("e0 = {}\n", format_double(p.exact.e0));
  out += fmt::format("c0 = {}\n", format_double(p.c0));
  out += fmt::format("degeneracy = {}\n", p.exact.degeneracy);
  out += fmt::format("residual = {}\n", format_double(p.exact.residual));
  if (p.unrestricted_e0) out += fmt::format("e0_unrestricted = {}\n", format_double(*p.unrestricted_e0));
  if (p.circuit.n_params > 0) out += fmt::format("ansatz = {} parameters = {}\n", p.circuit.kind, p.circuit.n_params);
  return out;
}

}  // namespace vqb
