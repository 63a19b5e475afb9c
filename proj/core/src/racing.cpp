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

#include "vqbench/racing.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <spdlog/spdlog.h>

#include "vqbench/rng.hpp"
#include "vqbench/stats.hpp"

namespace vqb {

void ParamSpace::validate() const {
  std::set<std::string> names;
  for (const auto& d : dims) {
    if (!(d.lower < d.upper)) throw std::invalid_argument(fmt::format("param space: {} needs lower < upper", d.name));
    if (!names.insert(d.name).second) throw std::invalid_argument(fmt::format("param space: duplicate {}", d.name));
  }
}

std::optional<std::size_t> ParamSpace::find(const std::string& name) const {
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i].name == name) return i;
  }
  return std::nullopt;
}

ParamSpace ParamSpace::spsa_default() {
  using K = ParamDim::Kind;
  return {{{"a", K::kReal, 0.01, 2.0}, {"alpha", K::kReal, 0.0, 1.0}, {"c", K::kReal, 0.01, 2.0},
           {"gamma", K::kReal, 0.0, 1.0 / 6.0}}};
}

ParamSpace ParamSpace::cma_default() {
  using K = ParamDim::Kind;
  return {{{"population", K::kInteger, 30.0, 130.0},
           {"c_mean", K::kReal, 0.0, 1.0},
           {"mu", K::kReal, 0.0, 0.5},
           {"damp_factor", K::kReal, 0.0, 1.0},
           {"sigma0", K::kReal, 0.25, 1.1}}};
}

Configuration sample_config(const ParamSpace& space, const std::optional<Configuration>& around, double spread,
                            std::mt19937_64& rng) {
  if (around && around->size() != space.size()) throw std::invalid_argument("sample_config: dimension mismatch");
  Configuration out(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto& d = space.dims[i];
    double v = 0.0;
    if (!around) {
      v = std::uniform_real_distribution<double>(d.lower, d.upper)(rng);
    } else {
      const double sd = spread * (d.upper - d.lower);
      v = std::clamp((*around)[i], d.lower, d.upper);
      if (sd > 0.0) {
        std::normal_distribution<double> normal(v, sd);
        double draw = normal(rng);
        for (int tries = 0; (draw < d.lower || draw > d.upper) && tries < 1000; ++tries) draw = normal(rng);
        v = std::clamp(draw, d.lower, d.upper);
      }
    }
    if (d.kind == ParamDim::Kind::kInteger) {
      v = std::clamp(std::round(v), std::ceil(d.lower), std::floor(d.upper));
    }
    out[i] = v;
  }
  return out;
}

void TunerOptions::validate() const {
  if (budget < 1) throw std::invalid_argument("tuner: budget must be >= 1");
  if (initial_reps < 2) throw std::invalid_argument("tuner: initial_reps must be >= 2");
  if (elite_count < 1) throw std::invalid_argument("tuner: elite_count must be >= 1");
  if (first_candidates < 1) throw std::invalid_argument("tuner: first_candidates must be >= 1");
  if (new_per_generation < 1) throw std::invalid_argument("tuner: new_per_generation must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("tuner: alpha must lie in (0, 1)");
  if (workers < 1) throw std::invalid_argument("tuner: workers must be >= 1");
  if (budget < first_candidates * initial_reps) {
    throw std::invalid_argument(fmt::format("tuner: budget {} cannot cover {} candidates x {} repetitions", budget,
                                            first_candidates, initial_reps));
  }
}

namespace {

constexpr double kFailed = std::numeric_limits<double>::quiet_NaN();

class Racer {
 public:
  Racer(const ParamSpace& space, const TuneObjective& objective, const TunerOptions& options)
      : space_(space), objective_(objective), opt_(options), rng_(derive_seed(options.seed, {stream_key("sample")})),
        start_(std::chrono::steady_clock::now()) {}

  TunerReport run() {
    const bool single = space_.size() == 0;
    std::vector<int> alive;
    const int first = single ? 1 : opt_.first_candidates;
    for (int i = 0; i < first; ++i) alive.push_back(add_config(sample_config(space_, std::nullopt, 0.0, rng_), {}));

    const int planned = std::max(3, 2 + static_cast<int>(std::floor(std::log2(std::max<std::size_t>(space_.size(), 1)))));
    for (int gen = 0;; ++gen) {
      const int remaining = opt_.budget - report_.evaluations_used;
      // Past the planned count, each generation takes half of what is left.
      const int gen_budget = remaining / std::max(2, planned - gen);
      alive = race_generation(gen, alive, std::max(gen_budget, 0), single);
      if (single || stop_ || report_.evaluations_used >= opt_.budget) break;

      // Refill around the elites.
      const int left = opt_.budget - report_.evaluations_used;
      const int n_new = std::min(opt_.new_per_generation, left / opt_.initial_reps);
      if (n_new < 1) break;
      const double spread = std::pow(0.5, gen + 1);
      std::vector<double> weights(alive.size());
      for (std::size_t r = 0; r < alive.size(); ++r) weights[r] = static_cast<double>(alive.size() - r);
      std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
      std::vector<int> next = alive;
      for (int i = 0; i < n_new; ++i) {
        const int parent = alive[pick(rng_)];
        next.push_back(add_config(sample_config(space_, report_.configs[parent].values, spread, rng_), parent));
      }
      alive = std::move(next);
    }

    for (int id : alive) {
      TunedConfig c = report_.configs[id];
      c.mean_score = mean_score(id, instances_seen(id));
      c.instances = instances_seen(id);
      report_.elites.push_back(std::move(c));
    }
    std::stable_sort(report_.elites.begin(), report_.elites.end(),
                     [](const TunedConfig& a, const TunedConfig& b) { return a.mean_score < b.mean_score; });
    if (static_cast<int>(report_.elites.size()) > opt_.elite_count) report_.elites.resize(opt_.elite_count);
    for (const auto& e : report_.elites) report_.configs[e.id] = e;
    return std::move(report_);
  }

 private:
  int add_config(Configuration values, std::optional<int> parent) {
    TunedConfig c;
    c.id = static_cast<int>(report_.configs.size());
    c.values = std::move(values);
    c.parent = parent;
    report_.configs.push_back(std::move(c));
    scores_.emplace_back();
    return report_.configs.back().id;
  }

  std::uint64_t instance_seed(int instance) const {
    return derive_seed(opt_.seed, {stream_key("instance"), static_cast<std::uint64_t>(instance)});
  }

  int instances_seen(int id) const { return static_cast<int>(scores_[id].size()); }

  bool timed_out() const {
    if (!opt_.timeout_seconds) return false;
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    return elapsed.count() > *opt_.timeout_seconds;
  }

  // Evaluates every config in `ids` on `instance`; scores are appended in order.
  void evaluate(const std::vector<int>& ids, int instance) {
    std::vector<double> out(ids.size(), kFailed);
    const std::uint64_t seed = instance_seed(instance);
    auto work = [&](std::size_t k) {
      try {
        const double v = objective_(report_.configs[ids[k]].values, seed);
        out[k] = std::isfinite(v) ? v : kFailed;
      } catch (const std::exception& e) {
        spdlog::warn("tuner: config {} failed on instance {}: {}", ids[k], instance, e.what());
      }
    };
    const std::size_t workers = std::min<std::size_t>(opt_.workers, ids.size());
    if (workers <= 1) {
      for (std::size_t k = 0; k < ids.size(); ++k) work(k);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t k = w; k < ids.size(); k += workers) work(k);
        });
      }
      for (auto& t : pool) t.join();
    }
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (std::isnan(out[k])) ++report_.failures;
      scores_[ids[k]].push_back(out[k]);
    }
    report_.evaluations_used += static_cast<int>(ids.size());
  }

  // Score of `id` on `instance`, with failures replaced by the worst finite
  // score among `peers` on that instance plus one.
  double resolved(int id, int instance, const std::vector<int>& peers) const {
    const double v = scores_[id][instance];
    if (!std::isnan(v)) return v;
    double worst = -std::numeric_limits<double>::infinity();
    for (int p : peers) {
      const double s = scores_[p][instance];
      if (!std::isnan(s)) worst = std::max(worst, s);
    }
    return std::isfinite(worst) ? worst + 1.0 : 0.0;
  }

  double mean_score(int id, int n_instances) const {
    if (n_instances == 0) return std::numeric_limits<double>::infinity();
    std::vector<int> everyone;
    for (int other = 0; other < static_cast<int>(scores_.size()); ++other) {
      if (instances_seen(other) >= n_instances) everyone.push_back(other);
    }
    double s = 0.0;
    for (int j = 0; j < n_instances; ++j) s += resolved(id, j, everyone);
    return s / n_instances;
  }

  std::vector<int> race_generation(int gen, std::vector<int> alive, int gen_budget, bool single) {
    GenerationReport g;
    g.generation = gen;
    g.budget = gen_budget;
    g.candidates = alive;
    const int used_before = report_.evaluations_used;
    const int min_instances = opt_.initial_reps;

    for (int instance = 0;; ++instance) {
      std::vector<int> missing;
      for (int id : alive) {
        if (instances_seen(id) <= instance) missing.push_back(id);
      }
      const int cost = static_cast<int>(missing.size());
      const int used = report_.evaluations_used - used_before;
      const bool mandatory = instance < min_instances;
      // The first initial_reps instances are always completed when the total budget allows.
      if (report_.evaluations_used + cost > opt_.budget) {
        stop_ = true;
        break;
      }
      if (!mandatory && used + cost > gen_budget) break;
      if (timed_out()) {
        spdlog::warn("tuner: wall-clock limit reached");
        stop_ = true;
        break;
      }
      evaluate(missing, instance);

      RoundReport round;
      round.instances = instance + 1;
      round.alive = alive;
      if (instance + 1 >= min_instances && alive.size() > 1) {
        alive = test_and_eliminate(alive, instance + 1, round);
      }
      g.rounds.push_back(std::move(round));
      if (single && instance + 1 >= min_instances) break;
      if (instance + 1 >= min_instances && static_cast<int>(alive.size()) <= opt_.elite_count) break;
    }
    g.used = report_.evaluations_used - used_before;

    // Rank survivors on the instances they all share.
    int shared = std::numeric_limits<int>::max();
    for (int id : alive) shared = std::min(shared, instances_seen(id));
    std::vector<std::pair<double, int>> ranked;
    for (int id : alive) {
      double s = 0.0;
      for (int j = 0; j < shared; ++j) s += resolved(id, j, alive);
      ranked.emplace_back(shared > 0 ? s / shared : 0.0, id);
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<int> elites;
    for (const auto& [score, id] : ranked) {
      if (static_cast<int>(elites.size()) == opt_.elite_count) break;
      elites.push_back(id);
    }
    report_.generations.push_back(std::move(g));
    return elites;
  }

  std::vector<int> test_and_eliminate(const std::vector<int>& alive, int n_instances, RoundReport& round) {
    std::vector<std::vector<double>> groups;
    std::vector<double> means;
    for (int id : alive) {
      std::vector<double> g;
      for (int j = 0; j < n_instances; ++j) g.push_back(resolved(id, j, alive));
      means.push_back(stats::mean(g));
      groups.push_back(std::move(g));
    }
    const auto anova = stats::one_way_anova(groups, opt_.alpha);
    round.f = anova.f;
    round.p_value = anova.p_value;
    round.critical = anova.critical;
    if (!(anova.f > anova.critical)) return alive;

    const std::size_t best = static_cast<std::size_t>(std::min_element(means.begin(), means.end()) - means.begin());
    const double se = std::sqrt(2.0 * anova.ms_within / n_instances);
    std::vector<int> keep;
    for (std::size_t i = 0; i < alive.size(); ++i) {
      if (i == best) {
        keep.push_back(alive[i]);
        continue;
      }
      const double diff = means[i] - means[best];
      double p = 1.0;
      if (se > 0.0) {
        p = stats::student_t_upper_tail(diff / se, anova.df_within);
      } else if (diff > 0.0) {
        p = 0.0;
      }
      if (p < opt_.alpha) {
        round.eliminated.push_back({alive[i], p});
      } else {
        keep.push_back(alive[i]);
      }
    }
    return keep;
  }

  const ParamSpace& space_;
  const TuneObjective& objective_;
  const TunerOptions& opt_;
  std::mt19937_64 rng_;
  std::chrono::steady_clock::time_point start_;
  TunerReport report_;
  std::vector<std::vector<double>> scores_;  // per config, per instance; NaN = failed
  bool stop_ = false;
};

std::string format_config(const ParamSpace& space, const Configuration& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += fmt::format("{}={:.6g}", space.dims[i].name, c[i]);
  }
  return out.empty() ? "(no parameters)" : out;
}

}  // namespace

TunerReport race(const ParamSpace& space, const TuneObjective& objective, const TunerOptions& options) {
  space.validate();
  options.validate();
  return Racer(space, objective, options).run();
}

void write_tuner_report(std::ostream& out, const ParamSpace& space, const TunerReport& report) {
  out << fmt::format("# evaluations used: {}\n# failed evaluations: {}\n", report.evaluations_used, report.failures);
  for (const auto& g : report.generations) {
    out << fmt::format("generation {} budget={} used={} candidates={}\n", g.generation, g.budget, g.used,
                       fmt::join(g.candidates, ","));
    for (const auto& r : g.rounds) {
      out << fmt::format("  instances={} alive={}", r.instances, fmt::join(r.alive, ","));
      if (r.f) out << fmt::format(" F={:.6g} p={:.6g} critical={:.6g}", *r.f, *r.p_value, *r.critical);
      for (const auto& e : r.eliminated) out << fmt::format(" drop({} p={:.3g})", e.config, e.p_value);
      out << '\n';
    }
  }
  out << "elites\n";
  for (const auto& e : report.elites) {
    out << fmt::format("  id={} mean={:.6g} instances={} {}\n", e.id, e.mean_score, e.instances,
                       format_config(space, e.values));
  }
}

}  // namespace vqb
