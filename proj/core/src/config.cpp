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

#include "vqbench/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <set>

#include <fmt/format.h>

#include "vqbench/hamiltonian_io.hpp"

namespace vqb {
namespace {

std::string join_lines(const std::vector<std::string>& problems) {
  std::string out = "invalid configuration:";
  for (const auto& p : problems) out += "\n  - " + p;
  return out;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  while (true) {
    const auto comma = s.find(',');
    out.emplace_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

// Reads key/value pairs and converts them, collecting every failure.
class Reader {
 public:
  Reader(std::istream& in, std::filesystem::path base) : base_(std::move(base)) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string_view v(line);
      if (auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
      v = trim(v);
      if (v.empty()) continue;
      const auto eq = v.find('=');
      if (eq == std::string_view::npos) {
        problems.push_back(fmt::format("line {}: expected 'key = value'", lineno));
        continue;
      }
      const std::string key(trim(v.substr(0, eq)));
      const std::string value(trim(v.substr(eq + 1)));
      if (key.empty()) {
        problems.push_back(fmt::format("line {}: empty key", lineno));
      } else if (!entries_.emplace(key, Entry{value, lineno}).second) {
        problems.push_back(fmt::format("line {}: duplicate key '{}'", lineno, key));
      }
    }
  }

  bool has(const std::string& key) const { return entries_.count(key) > 0; }

  std::optional<std::string> text(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    used_.insert(key);
    return it->second.value;
  }

  template <class T, class F>
  void read(const std::string& key, T& target, F convert) {
    auto v = text(key);
    if (!v) return;
    try {
      target = convert(*v);
    } catch (const std::exception& e) {
      problems.push_back(fmt::format("line {}: {}: {}", entries_.at(key).line, key, e.what()));
    }
  }

  void number(const std::string& key, double& target) {
    read(key, target, [&](const std::string& v) { return parse_double(v, key); });
  }
  template <class Int>
  void integer(const std::string& key, Int& target) {
    read(key, target, [&](const std::string& v) { return static_cast<Int>(parse_integer(v, key)); });
  }
  void path(const std::string& key, std::optional<std::filesystem::path>& target) {
    read(key, target, [&](const std::string& v) -> std::optional<std::filesystem::path> {
      std::filesystem::path p(v);
      return p.is_absolute() || base_.empty() ? p : base_ / p;
    });
  }

  void report_unused() {
    for (const auto& [key, e] : entries_) {
      if (!used_.count(key)) problems.push_back(fmt::format("line {}: unknown key '{}'", e.line, key));
    }
  }

  void check(bool ok, std::string message) {
    if (!ok) problems.push_back(std::move(message));
  }

  std::vector<std::string> problems;

 private:
  struct Entry {
    std::string value;
    int line;
  };
  std::filesystem::path base_;
  std::map<std::string, Entry> entries_;
  std::set<std::string> used_;
};

void validated(Reader& r, const std::string& what, const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    r.problems.push_back(fmt::format("{}: {}", what, e.what()));
  }
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error(join_lines(problems)), problems_(std::move(problems)) {}

ShotSchedule ExperimentConfig::make_schedule() const { return make_schedule(budget_per_pauli); }

ShotSchedule ExperimentConfig::make_schedule(std::int64_t budget) const {
  if (schedule == ShotSchedule::Kind::kOneStage) return one_stage(budget, evaluations);
  return three_stage(budget, stage_shots);
}

std::string ExperimentConfig::system_label() const {
  if (hubbard) return hubbard->label();
  if (hamiltonian) return hamiltonian->stem().string();
  return "unknown";
}

ParamSpace ExperimentConfig::tune_space() const {
  ParamSpace space = optimizer == "spsa" ? ParamSpace::spsa_default() : ParamSpace::cma_default();
  for (const auto& [name, b] : tune.bounds) {
    const auto i = space.find(name);
    if (!i) throw std::invalid_argument(fmt::format("no tunable parameter '{}' for {}", name, optimizer));
    space.dims[*i].lower = b.first;
    space.dims[*i].upper = b.second;
  }
  space.validate();
  return space;
}

ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir) {
  Reader r(in, base_dir);
  ExperimentConfig c;

  if (auto v = r.text("label")) c.label = *v;
  std::optional<std::string> lattice = r.text("hubbard");
  r.path("hamiltonian", c.hamiltonian);
  if (lattice) {
    HubbardSpec spec;
    r.read("hubbard", spec, [](const std::string& v) { return HubbardSpec::parse_lattice(v); });
    r.number("hubbard.t", spec.t);
    r.number("hubbard.u", spec.u);
    if (r.has("hubbard.particles")) {
      int n = 0;
      r.integer("hubbard.particles", n);
      spec.n_particles = n;
      r.check(n >= 1 && n <= spec.n_modes(), fmt::format("hubbard.particles must lie in [1, {}]", spec.n_modes()));
    }
    c.hubbard = spec;
  }
  r.check(lattice.has_value() != c.hamiltonian.has_value(), "exactly one of 'hubbard' or 'hamiltonian' is required");
  if (c.hamiltonian) {
    r.check(std::filesystem::is_regular_file(*c.hamiltonian),
            fmt::format("hamiltonian: no such file '{}'", c.hamiltonian->string()));
  }

  if (auto v = r.text("ansatz")) c.ansatz = *v;
  r.integer("layers", c.layers);
  r.path("generators", c.generators);
  if (c.ansatz == "vha") {
    r.check(c.hubbard.has_value(), "ansatz = vha needs a 'hubbard' problem");
    r.check(c.layers >= 1, "layers must be >= 1");
    r.check(!c.generators, "'generators' applies to ansatz = ucc only");
  } else if (c.ansatz == "ucc") {
    r.check(c.generators.has_value(), "ansatz = ucc needs 'generators'");
    if (c.generators) {
      r.check(std::filesystem::is_regular_file(*c.generators),
              fmt::format("generators: no such file '{}'", c.generators->string()));
    }
  } else {
    r.problems.push_back(fmt::format("ansatz must be 'vha' or 'ucc', got '{}'", c.ansatz));
  }

  if (auto v = r.text("optimizer")) c.optimizer = *v;
  r.check(c.optimizer == "spsa" || c.optimizer == "cma",
          fmt::format("optimizer must be 'spsa' or 'cma', got '{}'", c.optimizer));
  r.number("spsa.a", c.spsa.a);
  r.number("spsa.alpha", c.spsa.alpha);
  r.number("spsa.c", c.spsa.c);
  r.number("spsa.gamma", c.spsa.gamma);
  r.number("spsa.A", c.spsa.stability_offset);
  r.number("cma.sigma0", c.cma.sigma0);
  if (r.has("cma.population")) {
    int lambda = 0;
    r.integer("cma.population", lambda);
    c.cma.population = lambda;
  }
  r.number("cma.mu", c.cma.parent_fraction);
  r.number("cma.c_mean", c.cma.c_mean);
  r.number("cma.damp_factor", c.cma.damp_factor);
  validated(r, "spsa", [&] { c.spsa.validate(); });
  validated(r, "cma", [&] { c.cma.validate(); });

  if (auto v = r.text("schedule")) {
    if (*v == "one_stage") {
      c.schedule = ShotSchedule::Kind::kOneStage;
    } else if (*v == "three_stage") {
      c.schedule = ShotSchedule::Kind::kThreeStage;
    } else {
      r.problems.push_back(fmt::format("schedule must be 'one_stage' or 'three_stage', got '{}'", *v));
    }
  }
  r.integer("evaluations", c.evaluations);
  r.read("stage_shots", c.stage_shots, [](const std::string& v) {
    const auto parts = split_list(v);
    if (parts.size() != 3) throw std::invalid_argument("expected three comma-separated shot counts");
    std::array<std::int64_t, 3> out{};
    for (int i = 0; i < 3; ++i) out[i] = parse_integer(parts[i], "stage_shots");
    return out;
  });
  r.integer("budget_per_pauli", c.budget_per_pauli);
  r.check(c.budget_per_pauli >= 0, "budget_per_pauli must be >= 0");
  r.check(c.evaluations >= 0, "evaluations must be >= 0");
  if (c.schedule == ShotSchedule::Kind::kOneStage) {
    r.check(r.has("evaluations"), "schedule = one_stage needs 'evaluations'");
  }

  r.integer("repetitions", c.repetitions);
  r.check(c.repetitions >= 1, "repetitions must be >= 1");
  r.integer("base_seed", c.base_seed);
  r.number("noise_floor.p", c.noise_floor_p);
  r.check(c.noise_floor_p > 0.0 && c.noise_floor_p <= 0.5, "noise_floor.p must lie in (0, 0.5]");

  r.integer("tune.budget", c.tune.budget);
  r.integer("tune.initial_reps", c.tune.initial_reps);
  r.integer("tune.first_candidates", c.tune.first_candidates);
  r.integer("tune.new_candidates", c.tune.new_candidates);
  r.integer("tune.elites", c.tune.elites);
  r.integer("tune.runs", c.tune.runs);
  if (r.has("tune.run_budget")) {
    std::int64_t b = 0;
    r.integer("tune.run_budget", b);
    c.tune.run_budget = b;
  }
  if (r.has("tune.seed")) {
    std::uint64_t s = 0;
    r.integer("tune.seed", s);
    c.tune.seed = s;
  }
  if (auto v = r.text("tune.candidate")) c.tune.candidate = *v;
  r.check(c.tune.candidate == "best" || c.tune.candidate == "favourite",
          "tune.candidate must be 'best' or 'favourite'");
  r.check(c.tune.runs >= 1, "tune.runs must be >= 1");
  for (const auto& name : {"a", "alpha", "c", "gamma", "population", "c_mean", "mu", "damp_factor", "sigma0"}) {
    const std::string key = fmt::format("tune.range.{}", name);
    if (!r.has(key)) continue;
    r.read(key, c.tune.bounds[name], [&](const std::string& v) {
      const auto parts = split_list(v);
      if (parts.size() != 2) throw std::invalid_argument("expected 'lower, upper'");
      return std::pair{parse_double(parts[0], key), parse_double(parts[1], key)};
    });
  }
  if (c.optimizer == "spsa" || c.optimizer == "cma") validated(r, "tune.range", [&] { (void)c.tune_space(); });

  r.report_unused();
  if (!r.problems.empty()) throw ConfigError(std::move(r.problems));
  if (c.label.empty()) c.label = fmt::format("{}-{}-{}", c.system_label(), c.ansatz, c.optimizer);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({fmt::format("cannot open config file '{}'", path.string())});
  return parse_config(in, path.parent_path());
}

void write_config(std::ostream& out, const ExperimentConfig& c) {
  auto line = [&](std::string_view key, const std::string& value) { out << key << " = " << value << '\n'; };
  line("label", c.label);
  if (c.hubbard) {
    line("hubbard", c.hubbard->label());
    line("hubbard.t", format_double(c.hubbard->t));
    line("hubbard.u", format_double(c.hubbard->u));
    if (c.hubbard->n_particles) line("hubbard.particles", std::to_string(*c.hubbard->n_particles));
  }
  if (c.hamiltonian) line("hamiltonian", c.hamiltonian->string());
  line("ansatz", c.ansatz);
  if (c.ansatz == "vha") line("layers", std::to_string(c.layers));
  if (c.generators) line("generators", c.generators->string());
  line("optimizer", c.optimizer);
  if (c.optimizer == "spsa") {
    line("spsa.a", format_double(c.spsa.a));
    line("spsa.alpha", format_double(c.spsa.alpha));
    line("spsa.c", format_double(c.spsa.c));
    line("spsa.gamma", format_double(c.spsa.gamma));
    line("spsa.A", format_double(c.spsa.stability_offset));
  } else {
    line("cma.sigma0", format_double(c.cma.sigma0));
    if (c.cma.population) line("cma.population", std::to_string(*c.cma.population));
    line("cma.mu", format_double(c.cma.parent_fraction));
    line("cma.c_mean", format_double(c.cma.c_mean));
    line("cma.damp_factor", format_double(c.cma.damp_factor));
  }
  line("schedule", to_string(c.schedule));
  if (c.schedule == ShotSchedule::Kind::kOneStage) {
    line("evaluations", std::to_string(c.evaluations));
  } else {
    line("stage_shots", fmt::format("{},{},{}", c.stage_shots[0], c.stage_shots[1], c.stage_shots[2]));
  }
  line("budget_per_pauli", std::to_string(c.budget_per_pauli));
  line("repetitions", std::to_string(c.repetitions));
  line("base_seed", std::to_string(c.base_seed));
  line("noise_floor.p", format_double(c.noise_floor_p));
}

void apply_configuration(ExperimentConfig& c, const ParamSpace& space, const Configuration& values) {
  if (values.size() != space.size()) throw std::invalid_argument("apply_configuration: dimension mismatch");
  for (std::size_t i = 0; i < space.size(); ++i) {
    const std::string& n = space.dims[i].name;
    const double v = values[i];
    if (c.optimizer == "spsa") {
      if (n == "a") c.spsa.a = v;
      else if (n == "alpha") c.spsa.alpha = v;
      else if (n == "c") c.spsa.c = v;
      else if (n == "gamma") c.spsa.gamma = v;
      else throw std::invalid_argument(fmt::format("spsa has no parameter '{}'", n));
    } else {
      if (n == "population") c.cma.population = static_cast<int>(std::lround(v));
      else if (n == "c_mean") c.cma.c_mean = v;
      else if (n == "mu") c.cma.parent_fraction = v;
      else if (n == "damp_factor") c.cma.damp_factor = v;
      else if (n == "sigma0") c.cma.sigma0 = v;
      else throw std::invalid_argument(fmt::format("cma has no parameter '{}'", n));
    }
  }
}

}  // namespace vqb
