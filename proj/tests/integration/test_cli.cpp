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

#include <fmt/format.h>
#include <gtest/gtest.h>

#include "support/workspace.hpp"
#include "vqbench/hamiltonian_io.hpp"
#include "vqbench/report.hpp"

using testing_support::run_command;
using testing_support::ScratchDir;
using testing_support::slurp;

namespace {

testing_support::CommandResult cli(const std::string& args, const ScratchDir& dir) {
  return run_command(VQBENCH_CLI, args, dir.path());
}

const char* kSmallRun = R"(label = small
hubbard = 1x2
layers = 1
optimizer = cma
schedule = one_stage
evaluations = 120
budget_per_pauli = 12000
repetitions = 3
base_seed = 5
)";

}  // namespace

TEST(Cli, ScheduleFromArguments) {
  ScratchDir dir("cli_schedule");
  const auto r = cli("schedule --kind three_stage --budget 10000000 --stage-shots 100 1000 10000", dir);
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("three_stage budget=10000000 stages=7150x100,2145x1000,715x10000"), std::string::npos);
  EXPECT_NE(r.out.find("total_evaluations = 10010"), std::string::npos);
  EXPECT_NE(r.out.find("overshoot = 10000"), std::string::npos);
}

TEST(Cli, ScheduleFromConfig) {
  ScratchDir dir("cli_schedule_config");
  const auto r = cli("schedule --config '" + std::string(VQBENCH_SOURCE_DIR) + "/configs/hubbard2x2_spsa_one_stage.conf'", dir);
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("0,10000,1000"), std::string::npos) << r.out;
}

TEST(Cli, InfeasibleScheduleExitsThree) {
  ScratchDir dir("cli_infeasible");
  EXPECT_EQ(cli("schedule --kind three_stage --budget 13999 --stage-shots 100 1000 10000", dir).exit_code, 3);
  EXPECT_EQ(cli("schedule --kind one_stage --budget 5 --evaluations 10", dir).exit_code, 3);
  const auto conf = dir.write("tiny.conf", "hubbard = 2x2\nbudget_per_pauli = 100\n");
  EXPECT_EQ(cli("run --config '" + conf.string() + "' --out '" + (dir / "out").string() + "'", dir).exit_code, 3);
}

TEST(Cli, ConfigErrorsExitTwo) {
  ScratchDir dir("cli_config");
  EXPECT_EQ(cli("--bogus", dir).exit_code, 2);
  EXPECT_EQ(cli("run", dir).exit_code, 2);
  EXPECT_EQ(cli("run --config '" + (dir / "absent.conf").string() + "'", dir).exit_code, 2);
  const auto conf = dir.write("bad.conf", "hubbard = 2x2\noptimizer = nelder\nmystery = 1\n");
  const auto r = cli("run --config '" + conf.string() + "'", dir);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("optimizer must be"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("unknown key 'mystery'"), std::string::npos) << r.err;
  EXPECT_EQ(cli("exact --config a --hamiltonian b", dir).exit_code, 2);
}

TEST(Cli, ExactSingleZ) {
  ScratchDir dir("cli_exact");
  vqb::PauliSum h(1);
  h.add_term(1.0, vqb::parse_pauli("Z", 1));
  vqb::write_hamiltonian_file(dir / "z.txt", h, 0);
  const auto r = cli("exact --hamiltonian '" + (dir / "z.txt").string() + "'", dir);
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("e0 = -1\n"), std::string::npos) << r.out;
}

TEST(Cli, ExactMissingFileNamesPath) {
  ScratchDir dir("cli_exact_missing");
  const auto missing = (dir / "nowhere.txt").string();
  const auto r = cli("exact --hamiltonian '" + missing + "'", dir);
  EXPECT_NE(r.exit_code, 0);
  EXPECT_NE(r.err.find(missing), std::string::npos) << r.err;
}

TEST(Cli, ExactHubbardFixture) {
  ScratchDir dir("cli_exact_hubbard");
  const auto conf = dir.write("h.conf", "hubbard = 2x2\nlayers = 2\n");
  const auto r = cli("exact --config '" + conf.string() + "'", dir);
  EXPECT_EQ(r.exit_code, 0) << r.err;
  const auto pos = r.out.find("e0 = ");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_NEAR(std::stod(r.out.substr(pos + 5)), -2.828427124746184, 1e-9);
  EXPECT_NE(r.out.find("c0 = 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("ansatz = vha parameters = 6"), std::string::npos);
}

TEST(Cli, RunIsByteIdenticalAcrossRepeatsAndWorkerCounts) {
  ScratchDir dir("cli_determinism");
  const auto conf = dir.write("small.conf", kSmallRun);
  for (const auto& [name, workers] : {std::pair{"a", 1}, std::pair{"b", 1}, std::pair{"c", 3}}) {
    const auto r = cli(fmt::format("run --config '{}' --workers {} --out '{}'", conf.string(), workers,
                                   (dir / name).string()),
                       dir);
    ASSERT_EQ(r.exit_code, 0) << r.err;
  }
  for (const std::string f : {"summary.csv", "candidates.csv", "trace_000.csv", "trace_001.csv", "trace_002.csv"}) {
    const auto a = slurp(dir / "a" / f);
    ASSERT_FALSE(a.empty()) << f;
    EXPECT_EQ(a, slurp(dir / "b" / f)) << f;
    EXPECT_EQ(a, slurp(dir / "c" / f)) << f;
  }
}

TEST(Cli, SeedOverrideChangesTraces) {
  ScratchDir dir("cli_seed");
  const auto conf = dir.write("small.conf", kSmallRun);
  ASSERT_EQ(cli("run --config '" + conf.string() + "' --out '" + (dir / "a").string() + "'", dir).exit_code, 0);
  ASSERT_EQ(cli("run --config '" + conf.string() + "' --seed 99 --out '" + (dir / "b").string() + "'", dir).exit_code, 0);
  EXPECT_NE(slurp(dir / "a" / "trace_000.csv"), slurp(dir / "b" / "trace_000.csv"));
  EXPECT_NE(slurp(dir / "b" / "trace_000.csv").find("# seed = 99\n"), std::string::npos);
}

TEST(Cli, AnalyzeWritesPanels) {
  ScratchDir dir("cli_analyze");
  const auto conf = dir.write("small.conf", kSmallRun);
  ASSERT_EQ(cli("run --config '" + conf.string() + "' --out '" + (dir / "run").string() + "'", dir).exit_code, 0);
  const auto r = cli("analyze '" + (dir / "run").string() + "' --out '" + (dir / "panels").string() + "'", dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto rel = slurp(dir / "panels" / "relative_error_1x2.csv");
  EXPECT_EQ(rel.substr(0, rel.find('\n')), "group,n,points,mean,ci_low,ci_high");
  EXPECT_NE(rel.find("small|cma|12000|one_stage|best,3,"), std::string::npos) << rel;
  EXPECT_NE(rel.find("small|cma|12000|one_stage|favourite,3,"), std::string::npos) << rel;
  const auto fig3 = slurp(dir / "panels" / "best_vs_favourite_1x2.csv");
  EXPECT_NE(fig3.find("small|noisy_best,3,"), std::string::npos) << fig3;
  EXPECT_NE(fig3.find("small|noiseless_best,3,"), std::string::npos);
  EXPECT_NE(fig3.find("small|noiseless_favourite,3,"), std::string::npos);
}

TEST(Cli, TuneWritesEliteConfigs) {
  ScratchDir dir("cli_tune");
  const auto conf = dir.write("tune.conf", R"(hubbard = 1x2
layers = 1
optimizer = spsa
schedule = one_stage
evaluations = 20
budget_per_pauli = 2000
tune.budget = 24
tune.first_candidates = 6
tune.new_candidates = 2
tune.elites = 2
tune.seed = 3
)");
  const auto r = cli("tune --config '" + conf.string() + "' --out '" + (dir / "t").string() + "'", dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(std::filesystem::exists(dir / "t" / "tuner_report.txt"));
  EXPECT_TRUE(std::filesystem::exists(dir / "t" / "elites.csv"));
  const auto rerun = cli("run --config '" + (dir / "t" / "elite_0.conf").string() + "' --out '" +
                             (dir / "elite_run").string() + "'",
                         dir);
  EXPECT_EQ(rerun.exit_code, 0) << rerun.err;
}
