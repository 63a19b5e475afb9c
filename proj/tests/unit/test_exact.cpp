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

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "vqbench/exact.hpp"
#include "vqbench/fermion.hpp"

using vqb::parse_pauli;

namespace {

vqb::PauliSum single(const char* letters, int n, double c = 1.0) {
  vqb::PauliSum h(n);
  h.add_term(c, parse_pauli(letters, n));
  return h;
}

// Lowest eigenvalue of the 2x2 Hubbard model (t = 1, U = 2) with two up and
// two down electrons, from an independent brute-force diagonalization of the
// Fock-space Hamiltonian (numpy, no Pauli algebra involved).
constexpr double kHubbard2x2E0 = -2.828427124746184;

}  // namespace

TEST(ExactGround, SingleZ) {
  const auto ex = vqb::exact_ground(single("Z", 1));
  EXPECT_NEAR(ex.e0, -1.0, 1e-12);
  EXPECT_NEAR(std::abs(ex.ground_vector[1]), 1.0, 1e-12);
  EXPECT_EQ(ex.degeneracy, 1);
}

TEST(ExactGround, SingleX) { EXPECT_NEAR(vqb::exact_ground(single("X", 1)).e0, -1.0, 1e-12); }

TEST(ExactGround, Hubbard2x2HalfFilling) {
  vqb::HubbardSpec spec;
  spec.rows = 2;
  spec.cols = 2;
  const auto h = vqb::build_hubbard(spec).total();
  const auto ex = vqb::exact_ground(h, vqb::Sector{4, 2, 2});
  EXPECT_NEAR(ex.e0, kHubbard2x2E0, 1e-9);
  EXPECT_LT(ex.residual, 1e-9);
  EXPECT_DOUBLE_EQ(h.identity_coeff(), 2.0);
}

TEST(ExactGround, MatchesDenseEigenvaluesOnRandomHamiltonians) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 20; ++k) {
    vqb::PauliSum h(4);
    for (int t = 0; t < 12; ++t) {
      h.add_term(std::uniform_real_distribution<double>(-1, 1)(rng), parse_pauli(oracle::random_letters(4, rng), 4));
    }
    const auto ex = vqb::exact_ground(h);
    EXPECT_NEAR(ex.e0, oracle::eigenvalues(oracle::dense(h)).front(), 1e-10);
    EXPECT_LT(ex.residual, 1e-9);
  }
}

TEST(ExactGround, DegenerateSpaceIsDeterministicAndReported) {
  // X on qubit 0 leaves qubit 1 free: a 2-fold degenerate ground space.
  const auto ex = vqb::exact_ground(single("XI", 2));
  EXPECT_EQ(ex.degeneracy, 2);
  // Projecting |00> onto the space leaves a real positive amplitude on index 0.
  EXPECT_GT(ex.ground_vector[0].real(), 0.0);
  EXPECT_NEAR(ex.ground_vector[0].imag(), 0.0, 1e-12);
  const auto again = vqb::exact_ground(single("XI", 2));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(ex.ground_vector[i], again.ground_vector[i]);
}

TEST(ExactGround, LanczosAgreesWithDense) {
  vqb::HubbardSpec spec;
  spec.rows = 2;
  spec.cols = 3;
  const auto h = vqb::build_hubbard(spec).total();
  const vqb::Sector sector{6, 3, 3};
  vqb::ExactOptions dense;
  vqb::ExactOptions iterative;
  iterative.dense_limit = 16;
  const auto a = vqb::exact_ground(h, sector, dense);
  const auto b = vqb::exact_ground(h, sector, iterative);
  EXPECT_NEAR(a.e0, b.e0, 1e-9);
  EXPECT_LT(b.residual, 1e-8);
  EXPECT_GT(vqb::fidelity(a.ground_vector, b.ground_vector), 1.0 - 1e-8);
}

TEST(ExactGround, SectorLeakIsDetected) {
  // X0 does not conserve particle number.
  EXPECT_THROW(vqb::exact_ground(single("XI", 2), vqb::Sector{1, std::nullopt, std::nullopt}), vqb::SectorLeakError);
}

TEST(ExactGround, HoppingPairsStayInSector) {
  // XX + YY conserves number although each term alone does not.
  vqb::PauliSum h(2);
  h.add_term(0.5, parse_pauli("XX", 2));
  h.add_term(0.5, parse_pauli("YY", 2));
  const auto ex = vqb::exact_ground(h, vqb::Sector{1, std::nullopt, std::nullopt});
  EXPECT_NEAR(ex.e0, -1.0, 1e-12);
}

TEST(Sector, BasisEnumeration) {
  const auto basis = vqb::sector_basis(4, vqb::Sector{2, 1, 1});
  // one even (up) and one odd (down) qubit set
  EXPECT_EQ(basis, (std::vector<std::uint64_t>{0b0011, 0b0110, 0b1001, 0b1100}));
  EXPECT_EQ(vqb::Sector{}.describe(), "full");
}
