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

#include "vqbench/report.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "vqbench/analysis.hpp"
#include "vqbench/hamiltonian_io.hpp"
#include "vqbench/stats.hpp"

namespace vqb {
namespace {

std::string join_params(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += format_double(v[i]);
  }
  return out;
}

std::vector<double> split_params(std::string_view s) {
  std::vector<double> out;
  while (!s.empty()) {
    const auto semi = s.find(';');
    out.push_back(parse_double(s.substr(0, semi), "params"));
    if (semi == std::string_view::npos) break;
    s.remove_prefix(semi + 1);
  }
  return out;
}

std::string optimizer_description(const ExperimentConfig& c, int n_params) {
  return c.optimizer == "spsa" ? c.spsa.describe() : c.cma.describe(std::max(n_params, 1));
}

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string{}; }

}  // namespace

std::string trace_file_name(int run) { return fmt::format("trace_{:03d}.csv", run); }

void write_trace(std::ostream& out, const ExperimentConfig& config, const Problem& problem,
                 const ShotSchedule& schedule, const RunRecord& rec) {
  auto head = [&](std::string_view key, const std::string& value) { out << "# " << key << " = " << value << '\n'; };
  head("label", config.label);
  head("system", problem.system);
  head("ansatz", fmt::format("{} parameters={}", problem.circuit.kind, problem.circuit.n_params));
  head("optimizer", config.optimizer);
  head("hyperparameters", optimizer_description(config, problem.circuit.n_params));
  head("schedule", to_string(schedule.kind()));
  head("stages", schedule.describe());
  head("budget_per_pauli", std::to_string(config.budget_per_pauli));
  head("overshoot", std::to_string(schedule.overshoot()));
  head("sector", problem.sector ? problem.sector->describe() : "full");
  head("initial_degeneracy", std::to_string(problem.circuit.initial.degeneracy));
  head("e0", format_double(problem.exact.e0));
  head("c0", format_double(problem.c0));
  head("run", std::to_string(rec.run));
  head("seed", std::to_string(rec.seed));
  out << "run,seed,evaluation,stage,shots,cumulative_shots,noisy_value,params\n";
  for (const auto& e : rec.result.trace) {
    out << rec.run << ',' << rec.seed << ',' << e.evaluation << ',' << e.stage << ',' << e.shots << ','
        << e.cumulative_shots << ',' << format_double(e.value) << ',' << join_params(e.params) << '\n';
  }
  const auto cand = extract_candidates(rec.result);
  const auto& c = rec.comparison;
  auto res = [&](std::string_view key, const std::string& value) {
    out << "# result " << key << " = " << value << '\n';
  };
  res("evaluations", std::to_string(rec.result.evaluations));
  res("shots_spent", std::to_string(rec.result.shots_spent));
  res("restarts", std::to_string(rec.result.restarts));
  res("best_evaluation", std::to_string(rec.result.best_evaluation));
  res("favourite_kind", rec.result.favourite_kind);
  res("noisy_best", format_double(c.noisy_best));
  res("c_best", format_double(c.c_best));
  res("c_fav", format_double(c.c_fav));
  res("de_noisy_best", format_double(c.de_noisy_best));
  res("de_best", format_double(c.de_best));
  res("de_fav", format_double(c.de_fav));
  res("noise_floor_width", format_double(c.noise_floor_width));
  res("best_params", join_params(cand.best));
  res("favourite_params", join_params(cand.favourite));
}

void write_summary(std::ostream& out, const Problem& problem, const std::vector<RunRecord>& records) {
  out << "run,seed,evaluations,shots_spent,noisy_best,c_best,c_fav,e0,c0,rel_err_best,rel_err_fav,best_params,"
         "favourite_params\n";
  for (const auto& r : records) {
    const auto cand = extract_candidates(r.result);
    const auto& c = r.comparison;
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.run, r.seed, r.result.evaluations,
                       r.result.shots_spent, format_double(c.noisy_best), format_double(c.c_best),
                       format_double(c.c_fav), format_double(problem.exact.e0), format_double(problem.c0),
                       format_double(relative_error(c.c_best, problem.exact.e0, problem.c0)),
                       format_double(relative_error(c.c_fav, problem.exact.e0, problem.c0)), join_params(cand.best),
                       join_params(cand.favourite));
  }
}

void write_candidates(std::ostream& out, const std::vector<RunRecord>& records) {
  out << "run,seed,noisy_best,c_best,c_fav,de_noisy_best,de_best,de_fav,noise_floor_width\n";
  for (const auto& r : records) {
    const auto& c = r.comparison;
    out << fmt::format("{},{},{},{},{},{},{},{},{}\n", r.run, r.seed, format_double(c.noisy_best),
                       format_double(c.c_best), format_double(c.c_fav), format_double(c.de_noisy_best),
                       format_double(c.de_best), format_double(c.de_fav), format_double(c.noise_floor_width));
  }
}

const std::string& TraceFile::get(const std::string& key) const {
  if (auto it = result.find(key); it != result.end()) return it->second;
  if (auto it = header.find(key); it != header.end()) return it->second;
  throw std::runtime_error(fmt::format("{}: missing '{}'", path.string(), key));
}

double TraceFile::number(const std::string& key) const { return parse_double(get(key), key); }

TraceFile read_trace(const std::filesystem::path& path, bool with_rows) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(fmt::format("cannot open trace file '{}'", path.string()));
  TraceFile t;
  t.path = path;
  std::string line;
  bool saw_columns = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string_view v(line);
      v.remove_prefix(1);
      bool is_result = false;
      if (v.starts_with(" result ")) {
        is_result = true;
        v.remove_prefix(8);
      }
      const auto eq = v.find(" = ");
      if (eq == std::string_view::npos) continue;
      std::string key(v.substr(0, eq));
      key.erase(0, key.find_first_not_of(' '));
      std::string value(v.substr(eq + 3));
      (is_result ? t.result : t.header)[key] = value;
      continue;
    }
    if (!saw_columns) {
      saw_columns = true;
      continue;
    }
    if (!with_rows) continue;
    std::vector<std::string_view> f;
    std::string_view v(line);
    for (int i = 0; i < 7; ++i) {
      const auto comma = v.find(',');
      if (comma == std::string_view::npos) throw std::runtime_error(fmt::format("{}: malformed row", path.string()));
      f.push_back(v.substr(0, comma));
      v.remove_prefix(comma + 1);
    }
    TraceRow r;
    r.evaluation = parse_integer(f[2], "evaluation");
    r.stage = static_cast<int>(parse_integer(f[3], "stage"));
    r.shots = parse_integer(f[4], "shots");
    r.cumulative_shots = parse_integer(f[5], "cumulative_shots");
    r.value = parse_double(f[6], "noisy_value");
    r.params = split_params(v);
    t.rows.push_back(std::move(r));
  }
  return t;
}

PanelRow summarize_group(std::string group, std::vector<double> points) {
  PanelRow row;
  row.group = std::move(group);
  row.points = std::move(points);
  const auto ci = stats::mean_confidence_interval(row.points, 0.95);
  row.mean = ci.mean;
  row.ci_low = ci.low;
  row.ci_high = ci.high;
  return row;
}

void write_panel(std::ostream& out, const std::vector<PanelRow>& rows) {
  out << "group,n,points,mean,ci_low,ci_high\n";
  for (const auto& r : rows) {
    out << fmt::format("{},{},{},{},{},{}\n", r.group, r.points.size(), join_params(r.points), format_double(r.mean),
                       opt(r.ci_low), opt(r.ci_high));
  }
}

std::vector<std::filesystem::path> cmd_analyze(const std::vector<std::filesystem::path>& inputs,
                                               const std::filesystem::path& out_dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& in : inputs) {
    if (std::filesystem::is_directory(in)) {
      std::vector<std::filesystem::path> found;
      for (const auto& e : std::filesystem::recursive_directory_iterator(in)) {
        const auto name = e.path().filename().string();
        if (e.is_regular_file() && name.starts_with("trace_") && name.ends_with(".csv")) found.push_back(e.path());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (std::filesystem::is_regular_file(in)) {
      files.push_back(in);
    } else {
      throw std::runtime_error(fmt::format("no such trace file or directory '{}'", in.string()));
    }
  }
  if (files.empty()) throw std::runtime_error("analyze: no trace files found");

  // system -> group -> values; std::map keeps the output order stable.
  std::map<std::string, std::map<std::string, std::vector<double>>> relerr, signed_err;
  for (const auto& path : files) {
    const TraceFile t = read_trace(path);
    if (!t.complete()) {
      spdlog::warn("analyze: {} has no result footer (interrupted run); skipped", path.string());
      continue;
    }
    const double e0 = t.number("e0");
    const double c0 = t.number("c0");
    const std::string base = fmt::format("{}|{}|{}|{}", t.get("label"), t.get("optimizer"), t.get("budget_per_pauli"),
                                         t.get("schedule"));
    auto& rel = relerr[t.get("system")];
    rel[base + "|best"].push_back(relative_error(t.number("c_best"), e0, c0));
    rel[base + "|favourite"].push_back(relative_error(t.number("c_fav"), e0, c0));
    auto& sig = signed_err[t.get("system")];
    sig[t.get("label") + "|noisy_best"].push_back(t.number("de_noisy_best"));
    sig[t.get("label") + "|noiseless_best"].push_back(t.number("de_best"));
    sig[t.get("label") + "|noiseless_favourite"].push_back(t.number("de_fav"));
  }

  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& stem, const std::map<std::string, std::vector<double>>& groups) {
    std::vector<PanelRow> rows;
    for (const auto& [g, v] : groups) rows.push_back(summarize_group(g, v));
    const auto p = out_dir / (stem + ".csv");
    std::ofstream out(p);
    write_panel(out, rows);
    written.push_back(p);
  };
  for (const auto& [system, groups] : relerr) emit("relative_error_" + system, groups);
  for (const auto& [system, groups] : signed_err) emit("best_vs_favourite_" + system, groups);
  return written;
}

}  // namespace vqb
