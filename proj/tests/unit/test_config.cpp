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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "vqbench/config.hpp"

namespace {

vqb::ExperimentConfig parse(const std::string& text, const std::filesystem::path& base = {}) {
  std::istringstream in(text);
  return vqb::parse_config(in, base);
}

std::vector<std::string> problems(const std::string& text) {
  try {
    parse(text);
  } catch (const vqb::ConfigError& e) {
    return e.problems();
  }
  return {};
}

bool mentions(const std::vector<std::string>& ps, const std::string& needle) {
  return std::any_of(ps.begin(), ps.end(), [&](const std::string& p) { return p.find(needle) != std::string::npos; });
}

}  // namespace

TEST(Config, MinimalHubbardDefaults) {
  const auto c = parse("hubbard = 2x2\nlayers = 2\n");
  ASSERT_TRUE(c.hubbard);
  EXPECT_EQ(c.hubbard->rows, 2);
  EXPECT_EQ(c.hubbard->t, 1.0);
  EXPECT_EQ(c.hubbard->u, 2.0);
  EXPECT_EQ(c.optimizer, "cma");
  EXPECT_EQ(c.repetitions, 15);
  EXPECT_EQ(c.label, "2x2-vha-cma");
  EXPECT_EQ(c.make_schedule().total_evaluations(), 10010);
}

TEST(Config, FullTunedCmaRow) {
  const auto c = parse(R"(# tuned
label = tuned
hubbard = 2x2
layers = 2
optimizer = cma
cma.sigma0 = 0.8561
cma.population = 113
cma.mu = 0.2741
cma.c_mean = 0.6317
cma.damp_factor = 0.6771
schedule = one_stage
evaluations = 1000
budget_per_pauli = 100000
repetitions = 3
base_seed = 7
)");
  EXPECT_EQ(c.cma.population, 113);
  EXPECT_EQ(c.cma.parent_fraction, 0.2741);
  EXPECT_EQ(c.base_seed, 7u);
  const auto s = c.make_schedule();
  EXPECT_EQ(s.stages().at(0).shots_per_pauli, 100);
}

TEST(Config, WriteParseRoundTrip) {
  auto c = parse("hubbard = 1x6\nlayers = 5\noptimizer = spsa\nspsa.a = 1.556\nspsa.alpha = 0.809\n"
                 "spsa.c = 0.106\nspsa.gamma = 0.097\nbase_seed = 3\n");
  std::ostringstream out;
  vqb::write_config(out, c);
  const auto d = parse(out.str());
  std::ostringstream again;
  vqb::write_config(again, d);
  EXPECT_EQ(out.str(), again.str());
  EXPECT_EQ(d.spsa.a, 1.556);
  EXPECT_EQ(d.layers, 5);
}

TEST(Config, EveryProblemIsReported) {
  const auto ps = problems(R"(hubbard = 2by2
layers = 0
optimizer = nelder
cma.sigma0 = -1
schedule = two_stage
repetitions = 0
noise_floor.p = 0.7
mystery = 1
layers = 3
tune.candidate = worst
not a pair
)");
  EXPECT_TRUE(mentions(ps, "hubbard")) << ps.size();
  EXPECT_TRUE(mentions(ps, "optimizer must be"));
  EXPECT_TRUE(mentions(ps, "cma"));
  EXPECT_TRUE(mentions(ps, "schedule must be"));
  EXPECT_TRUE(mentions(ps, "repetitions must be"));
  EXPECT_TRUE(mentions(ps, "noise_floor.p"));
  EXPECT_TRUE(mentions(ps, "unknown key 'mystery'"));
  EXPECT_TRUE(mentions(ps, "duplicate key 'layers'"));
  EXPECT_TRUE(mentions(ps, "tune.candidate"));
  EXPECT_TRUE(mentions(ps, "line 11: expected 'key = value'"));
  EXPECT_GE(ps.size(), 10u);
}

TEST(Config, ProblemSelection) {
  EXPECT_TRUE(mentions(problems("layers = 2\n"), "exactly one of"));
  EXPECT_TRUE(mentions(problems("hubbard = 2x2\nhamiltonian = h.txt\n"), "exactly one of"));
  EXPECT_TRUE(mentions(problems("hamiltonian = /nonexistent/h.txt\nansatz = ucc\ngenerators = /nonexistent/g.txt\n"),
                       "no such file '/nonexistent/h.txt'"));
  EXPECT_TRUE(mentions(problems("hubbard = 2x2\nschedule = one_stage\n"), "needs 'evaluations'"));
  EXPECT_TRUE(mentions(problems("hubbard = 2x2\nspsa.gamma = 0.5\n"), "spsa"));
  EXPECT_TRUE(mentions(problems("hubbard = 2x2\ntune.range.zeta = 0,1\n"), "unknown key"));
  EXPECT_TRUE(mentions(problems("hubbard = 2x2\ntune.range.sigma0 = 1,0.5\n"), "tune.range"));
}

TEST(Config, PathsResolveAgainstConfigDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "vqbench_config_test";
  std::filesystem::create_directories(dir);
  { std::ofstream(dir / "h.txt") << "qubits 1\nelectrons 0\n1.0 Z\n"; }
  { std::ofstream(dir / "g.txt") << "qubits 1\nelectrons 0\n"; }
  { std::ofstream(dir / "run.conf") << "hamiltonian = h.txt\nansatz = ucc\ngenerators = g.txt\n"; }
  const auto c = vqb::load_config(dir / "run.conf");
  EXPECT_EQ(*c.hamiltonian, dir / "h.txt");
  EXPECT_EQ(c.system_label(), "h");
  std::filesystem::remove_all(dir);
  EXPECT_THROW(vqb::load_config(dir / "run.conf"), vqb::ConfigError);
}

TEST(Config, TuneSpaceAndApplyConfiguration) {
  auto c = parse("hubbard = 2x2\noptimizer = spsa\ntune.range.a = 0.5,1.5\n");
  const auto space = c.tune_space();
  EXPECT_EQ(space.dims[*space.find("a")].lower, 0.5);
  vqb::apply_configuration(c, space, {1.2, 0.7, 0.3, 0.1});
  EXPECT_EQ(c.spsa.a, 1.2);
  EXPECT_EQ(c.spsa.alpha, 0.7);
  EXPECT_EQ(c.spsa.c, 0.3);
  EXPECT_EQ(c.spsa.gamma, 0.1);
}
