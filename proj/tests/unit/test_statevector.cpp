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

#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "vqbench/exact.hpp"
#include "vqbench/fermion.hpp"
#include "vqbench/statevector.hpp"

using vqb::parse_pauli;
using vqb::StateVector;
using cplx = std::complex<double>;

TEST(BasisState, Vacuum) {
  const auto s = vqb::basis_state(2, {});
  EXPECT_EQ(s[0], cplx(1.0));
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(s[i], cplx(0.0));
}

TEST(BasisState, OccupiedQubitsSetBits) {
  const std::vector<int> one{0};
  EXPECT_EQ(vqb::basis_state(2, one)[1], cplx(1.0));
  const std::vector<int> hf{0, 1};
  EXPECT_EQ(vqb::basis_state(4, hf)[3], cplx(1.0));
  const std::vector<int> bad{4};
  EXPECT_THROW(vqb::basis_state(4, bad), std::out_of_range);
}

TEST(PauliExponential, ZeroAngleIsIdentity) {
  std::mt19937_64 rng(1);
  const auto s = oracle::random_state(3, rng);
  const auto t = vqb::apply_pauli_exponential(s, parse_pauli("XYZ", 3), 0.0);
  for (std::size_t i = 0; i < s.dimension(); ++i) EXPECT_EQ(s[i], t[i]);
}

TEST(PauliExponential, QuarterTurnOfX) {
  const auto s = vqb::apply_pauli_exponential(StateVector(1), parse_pauli("X", 1), std::numbers::pi / 2);
  EXPECT_NEAR(std::abs(s[0]), 0.0, 1e-15);
  EXPECT_NEAR(s[1].real(), 0.0, 1e-15);
  EXPECT_NEAR(s[1].imag(), 1.0, 1e-15);
}

TEST(PauliExponential, DiagonalPhase) {
  const double theta = 0.37;
  const auto s = vqb::apply_pauli_exponential(StateVector(1), parse_pauli("Z", 1), theta);
  EXPECT_NEAR(std::abs(s[0] - std::exp(cplx(0, theta))), 0.0, 1e-15);
}

TEST(PauliExponential, MatchesMatrixExponential) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto letters = oracle::random_letters(n, rng);
    const double theta = std::uniform_real_distribution<double>(-3, 3)(rng);
    const auto s = oracle::random_state(n, rng);
    const oracle::Matrix p = oracle::pauli(letters);
    // exp(i theta P) = cos(theta) I + i sin(theta) P since P^2 = I.
    const oracle::Matrix u =
        std::cos(theta) * oracle::Matrix::Identity(p.rows(), p.cols()) + cplx(0, std::sin(theta)) * p;
    const oracle::Vector expected = u * oracle::to_vector(s);
    const auto got = vqb::apply_pauli_exponential(s, parse_pauli(letters, n), theta);
    EXPECT_LT((oracle::to_vector(got) - expected).norm(), 1e-12) << letters;
  }
}

TEST(PauliExponential, NormPreservedAndInverse) {
  std::mt19937_64 rng(8);
  auto s = oracle::random_state(6, rng);
  const auto original = s;
  std::vector<std::pair<std::string, double>> ops;
  for (int k = 0; k < 200; ++k) {
    ops.emplace_back(oracle::random_letters(6, rng), std::uniform_real_distribution<double>(-2, 2)(rng));
    s.apply_pauli_exponential(parse_pauli(ops.back().first, 6), ops.back().second);
  }
  EXPECT_NEAR(s.norm(), 1.0, 1e-10);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) s.apply_pauli_exponential(parse_pauli(it->first, 6), -it->second);
  EXPECT_GT(vqb::fidelity(s, original), 1.0 - 1e-10);
  for (std::size_t i = 0; i < s.dimension(); ++i) EXPECT_NEAR(std::abs(s[i] - original[i]), 0.0, 1e-10);
}

TEST(Expectation, Basics) {
  EXPECT_DOUBLE_EQ(vqb::expectation(StateVector(1), parse_pauli("Z", 1)), 1.0);
  const auto plus = vqb::apply_pauli_exponential(StateVector(1), parse_pauli("Y", 1), std::numbers::pi / 4);
  EXPECT_NEAR(std::abs(vqb::expectation(plus, parse_pauli("X", 1))), 1.0, 1e-12);
}

TEST(Expectation, MatchesDenseOracle) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 100; ++k) {
    const auto s = oracle::random_state(3, rng);
    const auto letters = oracle::random_letters(3, rng);
    const oracle::Vector v = oracle::to_vector(s);
    const double expected = v.dot(oracle::pauli(letters) * v).real();
    EXPECT_NEAR(vqb::expectation(s, parse_pauli(letters, 3)), expected, 1e-10);
  }
}

TEST(ExpectationSum, IdentityOnlyAndArithmetic) {
  vqb::PauliSum empty(2);
  empty.add_identity(1.25);
  EXPECT_DOUBLE_EQ(vqb::expectation_sum(StateVector(2), empty), 1.25);

  vqb::PauliSum h(1);
  h.add_identity(0.25);
  h.add_term(0.5, parse_pauli("Z", 1));
  const std::vector<int> one{0};
  EXPECT_DOUBLE_EQ(vqb::expectation_sum(vqb::basis_state(1, one), h), -0.25);
}

TEST(ExpectationSum, HubbardGroundEnergyOnGroundVector) {
  vqb::HubbardSpec spec;
  spec.rows = 2;
  spec.cols = 2;
  const auto h = vqb::build_hubbard(spec).total();
  const auto ex = vqb::exact_ground(h, vqb::Sector{4, 2, 2});
  EXPECT_NEAR(vqb::expectation_sum(ex.ground_vector, h), ex.e0, 1e-9);
}

TEST(ExpectationSum, VariationalBound) {
  vqb::HubbardSpec spec;
  spec.rows = 1;
  spec.cols = 4;
  const auto h = vqb::build_hubbard(spec).total();
  const double e0 = vqb::exact_ground(h).e0;
  std::mt19937_64 rng(12);
  for (int k = 0; k < 50; ++k) EXPECT_GE(vqb::expectation_sum(oracle::random_state(8, rng), h), e0 - 1e-9);
}
