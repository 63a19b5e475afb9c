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

#include <random>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "vqbench/analysis.hpp"
#include "vqbench/cmaes.hpp"
#include "vqbench/fermion.hpp"

using vqb::parse_pauli;

TEST(RelativeError, Arithmetic) {
  EXPECT_EQ(vqb::relative_error(-4.0, -4.0, 0.0), 0.0);
  EXPECT_NEAR(vqb::relative_error(-3.6, -4.0, 0.0), 0.1, 1e-15);
  EXPECT_NEAR(vqb::signed_relative_error(-4.4, -4.0, 0.0), -0.1, 1e-15);
  EXPECT_NEAR(vqb::relative_error(-4.4, -4.0, 0.0), 0.1, 1e-15);
  EXPECT_THROW(vqb::relative_error(1.0, 2.0, 2.0), vqb::UndefinedMetricError);
}

TEST(RelativeError, ScaleConsistent) {
  const double e0 = -2.8, c0 = 2.0, c = -2.5;
  for (double s : {0.5, 3.0, 17.0}) {
    // Scaling the traceless part by s maps E -> c0 + s (E - c0).
    const double se0 = c0 + s * (e0 - c0), sc = c0 + s * (c - c0);
    EXPECT_NEAR(vqb::relative_error(sc, se0, c0), vqb::relative_error(c, e0, c0), 1e-14);
  }
}

TEST(NoiseFloor, MedianGivesZeroWidth) {
  vqb::PauliSum h(1);
  h.add_term(1.0, parse_pauli("X", 1));
  const auto nf = vqb::noise_floor(h, vqb::StateVector(1), 100, 0.5);
  EXPECT_EQ(nf.quantile, 0.0);
  EXPECT_EQ(nf.width, 0.0);
  EXPECT_DOUBLE_EQ(nf.variance, 0.01);
}

TEST(NoiseFloor, EigenstateHasNoFloor) {
  vqb::PauliSum h(1);
  h.add_term(1.0, parse_pauli("Z", 1));
  for (double p : {0.01, 0.1, 0.3}) EXPECT_EQ(vqb::noise_floor(h, vqb::StateVector(1), 100, p).width, 0.0);
}

TEST(NoiseFloor, TwoSigmaQuantile) {
  vqb::PauliSum h(2);
  h.add_term(0.7, parse_pauli("XI", 2));
  h.add_term(-0.4, parse_pauli("ZY", 2));
  std::mt19937_64 rng(2);
  const auto s = oracle::random_state(2, rng);
  const auto nf = vqb::noise_floor(h, s, 1000, 0.0228);
  EXPECT_NEAR(nf.quantile, oracle::normal_upper_quantile(0.0228), 1e-9);
  EXPECT_NEAR(nf.quantile, 2.0, 0.001);
  EXPECT_NEAR(nf.width, 2.0 * nf.quantile * std::sqrt(nf.variance), 1e-15);
  // Variance from an independent evaluation of sum c_i^2 (1 - <P_i>^2) / M.
  const oracle::Vector v = oracle::to_vector(s);
  double var = 0.0;
  for (const auto& [c, p] : std::vector<std::pair<double, std::string>>{{0.7, "XI"}, {-0.4, "ZY"}}) {
    const double mu = v.dot(oracle::pauli(p) * v).real();
    var += c * c * (1 - mu * mu) / 1000.0;
  }
  EXPECT_NEAR(nf.variance, var, 1e-15);
}

TEST(NoiseFloor, ShrinksAsInverseRootShots) {
  vqb::PauliSum h(2);
  h.add_term(0.7, parse_pauli("XX", 2));
  h.add_term(0.2, parse_pauli("IY", 2));
  std::mt19937_64 rng(3);
  const auto s = oracle::random_state(2, rng);
  for (std::int64_t m : {100, 12345, 1000000}) {
    EXPECT_NEAR(vqb::noise_floor(h, s, m, 0.025).width / vqb::noise_floor(h, s, 4 * m, 0.025).width, 2.0, 1e-12);
  }
  EXPECT_THROW(vqb::noise_floor(h, s, 100, 0.0), std::invalid_argument);
  EXPECT_THROW(vqb::noise_floor(h, s, 100, 0.6), std::invalid_argument);
}

TEST(CompareCandidates, ExactEvaluatorAndVariationalBound) {
  vqb::HubbardSpec spec;
  spec.rows = 2;
  spec.cols = 2;
  const auto part = vqb::build_hubbard(spec);
  const auto h = part.total();
  const auto circuit = vqb::build_vha(part, 2);
  const auto exact = vqb::exact_ground(h, vqb::hubbard_sector(spec));
  const auto energy = [&](std::span<const double> x) { return vqb::expectation_sum(vqb::prepare(circuit, x), h); };
  const auto schedule = vqb::one_stage(300, 300);
  vqb::ShotLedger ledger(schedule.total_shots());
  vqb::CmaConfig cfg;
  cfg.seed = 3;
  const std::vector<double> x0(circuit.n_params, 0.0);
  const auto run = vqb::cma_minimize(vqb::plug_in(energy), x0, cfg, schedule, ledger);
  const auto cmp = vqb::compare_candidates(run, circuit, h, exact);
  EXPECT_NEAR(cmp.noisy_best, cmp.c_best, 1e-12);
  EXPECT_GE(cmp.c_best, exact.e0 - 1e-9);
  EXPECT_GE(cmp.c_fav, exact.e0 - 1e-9);
  EXPECT_NEAR(cmp.de_best, (cmp.c_best - exact.e0) / std::abs(exact.e0 - 2.0), 1e-12);
  EXPECT_GE(cmp.noise_floor_width, 0.0);
}

TEST(CompareCandidates, EmptyRunUsesStart) {
  vqb::HubbardSpec spec;
  spec.rows = 1;
  spec.cols = 2;
  const auto part = vqb::build_hubbard(spec);
  const auto circuit = vqb::build_vha(part, 1);
  const auto exact = vqb::exact_ground(part.total(), vqb::hubbard_sector(spec));
  vqb::OptResult empty;
  empty.x0.assign(circuit.n_params, 0.0);
  const auto cmp = vqb::compare_candidates(empty, circuit, part.total(), exact);
  EXPECT_EQ(cmp.noisy_best, cmp.c_best);
  EXPECT_EQ(cmp.c_best, cmp.c_fav);
  EXPECT_EQ(cmp.noise_floor_width, 0.0);
}
