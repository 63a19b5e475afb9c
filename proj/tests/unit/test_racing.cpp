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

#include <map>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "vqbench/racing.hpp"
#include "vqbench/rng.hpp"

namespace {

double instance_noise(std::uint64_t seed, double sigma) {
  std::mt19937_64 rng(seed);
  return std::normal_distribution<double>(0.0, sigma)(rng);
}

vqb::ParamSpace one_dim() { return vqb::ParamSpace{{{"a", vqb::ParamDim::Kind::kReal, 0.01, 2.0}}}; }

vqb::TunerReport synthetic_race(std::uint64_t seed) {
  vqb::TunerOptions opt;
  opt.seed = seed;
  auto objective = [](const vqb::Configuration& c, std::uint64_t s) {
    return (c[0] - 0.7) * (c[0] - 0.7) + instance_noise(s, 0.01);
  };
  return vqb::race(one_dim(), objective, opt);
}

double elite_mean(const vqb::TunerReport& r) {
  double s = 0.0;
  for (const auto& e : r.elites) s += e.values[0];
  return s / r.elites.size();
}

}  // namespace

TEST(ParamSpace, DefaultsMatchTuningRanges) {
  const auto spsa = vqb::ParamSpace::spsa_default();
  ASSERT_EQ(spsa.size(), 4u);
  const auto g = spsa.dims[*spsa.find("gamma")];
  EXPECT_EQ(g.lower, 0.0);
  EXPECT_EQ(g.upper, 1.0 / 6.0);
  const auto cma = vqb::ParamSpace::cma_default();
  const auto pop = cma.dims[*cma.find("population")];
  EXPECT_EQ(pop.kind, vqb::ParamDim::Kind::kInteger);
  EXPECT_EQ(pop.lower, 30);
  EXPECT_EQ(pop.upper, 130);
  EXPECT_FALSE(cma.find("missing"));
}

TEST(ParamSpace, Validation) {
  vqb::ParamSpace bad{{{"a", vqb::ParamDim::Kind::kReal, 1.0, 1.0}}};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  vqb::ParamSpace dup{{{"a", vqb::ParamDim::Kind::kReal, 0, 1}, {"a", vqb::ParamDim::Kind::kReal, 0, 1}}};
  EXPECT_THROW(dup.validate(), std::invalid_argument);
}

TEST(SampleConfig, UniformDrawsStayInBounds) {
  const auto space = vqb::ParamSpace::spsa_default();
  std::mt19937_64 rng(1);
  for (int k = 0; k < 10000; ++k) {
    const auto c = vqb::sample_config(space, std::nullopt, 0.0, rng);
    for (std::size_t i = 0; i < space.size(); ++i) {
      EXPECT_GE(c[i], space.dims[i].lower);
      EXPECT_LE(c[i], space.dims[i].upper);
    }
    EXPECT_LE(c[*space.find("gamma")], 1.0 / 6.0);
  }
}

TEST(SampleConfig, IntegerAroundEliteIsRoundedAndClamped) {
  const auto space = vqb::ParamSpace::cma_default();
  const std::size_t p = *space.find("population");
  vqb::Configuration elite(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) elite[i] = space.dims[i].upper;
  elite[p] = 113;
  std::mt19937_64 rng(2);
  for (int k = 0; k < 1000; ++k) {
    const auto c = vqb::sample_config(space, elite, 1e-4, rng);
    EXPECT_EQ(c[p], 113.0);
    for (std::size_t i = 0; i < space.size(); ++i) EXPECT_LE(c[i], space.dims[i].upper);
  }
  for (int k = 0; k < 1000; ++k) {
    const auto c = vqb::sample_config(space, elite, 1.0, rng);
    EXPECT_EQ(c[p], std::round(c[p]));
    EXPECT_GE(c[p], 30);
    EXPECT_LE(c[p], 130);
  }
}

TEST(TunerOptions, BudgetMustCoverFirstRace) {
  vqb::TunerOptions opt;
  opt.budget = 19;
  EXPECT_THROW(opt.validate(), std::invalid_argument);
  opt.budget = 20;
  EXPECT_NO_THROW(opt.validate());
  opt.initial_reps = 1;
  EXPECT_THROW(opt.validate(), std::invalid_argument);
}

TEST(Race, SingleConfigurationSpendsOnlyItsRepetitions) {
  int calls = 0;
  auto objective = [&](const vqb::Configuration& c, std::uint64_t) {
    EXPECT_TRUE(c.empty());
    ++calls;
    return 1.0;
  };
  const auto r = vqb::race(vqb::ParamSpace{}, objective, vqb::TunerOptions{});
  EXPECT_EQ(calls, 2);
  EXPECT_EQ(r.evaluations_used, 2);
  ASSERT_EQ(r.elites.size(), 1u);
  EXPECT_EQ(r.elites[0].mean_score, 1.0);
}

TEST(Race, SyntheticObjectiveRecoversOptimum) {
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto r = synthetic_race(seed);
    EXPECT_LE(r.evaluations_used, 500);
    ASSERT_FALSE(r.elites.empty());
    EXPECT_LT(std::abs(elite_mean(r) - 0.7), 0.1) << seed;
  }
}

TEST(Race, DeterministicPerSeed) {
  const auto a = synthetic_race(9), b = synthetic_race(9);
  ASSERT_EQ(a.configs.size(), b.configs.size());
  for (std::size_t i = 0; i < a.configs.size(); ++i) EXPECT_EQ(a.configs[i].values, b.configs[i].values);
  std::ostringstream sa, sb;
  vqb::write_tuner_report(sa, one_dim(), a);
  vqb::write_tuner_report(sb, one_dim(), b);
  EXPECT_EQ(sa.str(), sb.str());
}

TEST(Race, DominatedConfigurationFallsAfterTwoInstances) {
  const double sigma = 0.01;
  std::map<double, int> order;
  auto objective = [&](const vqb::Configuration& c, std::uint64_t s) {
    const int rank = order.emplace(c[0], static_cast<int>(order.size())).first->second;
    return 10.0 * sigma * rank + instance_noise(s, sigma);
  };
  vqb::TunerOptions opt;
  opt.first_candidates = 2;
  opt.elite_count = 1;
  opt.budget = 4;
  opt.seed = 4;
  const auto r = vqb::race(one_dim(), objective, opt);
  ASSERT_FALSE(r.generations.empty());
  const auto& rounds = r.generations[0].rounds;
  ASSERT_GE(rounds.size(), 2u);
  EXPECT_TRUE(rounds[0].eliminated.empty());
  EXPECT_EQ(rounds[1].instances, 2);
  ASSERT_EQ(rounds[1].eliminated.size(), 1u);
  const int loser = rounds[1].eliminated[0].config;
  EXPECT_EQ(order.at(r.configs[loser].values[0]), 1);
  EXPECT_LT(rounds[1].eliminated[0].p_value, 0.05);
  EXPECT_EQ(r.evaluations_used, 4);
}

TEST(Race, FailingObjectiveIsScoredWorst) {
  auto objective = [](const vqb::Configuration& c, std::uint64_t s) -> double {
    if (c[0] > 1.5) throw std::runtime_error("diverged");
    return (c[0] - 0.7) * (c[0] - 0.7) + instance_noise(s, 0.01);
  };
  vqb::TunerOptions opt;
  opt.budget = 200;
  opt.seed = 5;
  const auto r = vqb::race(one_dim(), objective, opt);
  EXPECT_GT(r.failures, 0);
  for (const auto& e : r.elites) EXPECT_LE(e.values[0], 1.5);
}

TEST(Race, BudgetIsNeverExceeded) {
  for (int budget : {20, 33, 77, 150}) {
    vqb::TunerOptions opt;
    opt.budget = budget;
    int calls = 0;
    auto objective = [&](const vqb::Configuration& c, std::uint64_t s) {
      ++calls;
      return c[0] + instance_noise(s, 0.1);
    };
    const auto r = vqb::race(one_dim(), objective, opt);
    EXPECT_LE(calls, budget);
    EXPECT_EQ(calls, r.evaluations_used);
  }
}
