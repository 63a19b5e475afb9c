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

#pragma once

// Brute-force reference implementations used only by tests. Nothing here
// touches the bit-mask algebra of the library: Pauli matrices are built by
// Kronecker products from the letter text, fermion operators by counting
// occupied modes on Fock basis states.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vqbench/fermion.hpp"
#include "vqbench/pauli.hpp"
#include "vqbench/statevector.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline Matrix single(char letter) {
  Matrix m(2, 2);
  const cplx i(0.0, 1.0);
  switch (letter) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad letter");
  }
  return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

// Letter q acts on qubit q, and qubit q is bit q of the basis index, so the
// highest qubit is the leftmost Kronecker factor.
inline Matrix pauli(const std::string& letters) {
  Matrix m = Matrix::Identity(1, 1);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) m = kron(m, single(*it));
  return m;
}

inline Matrix dense(const vqb::PauliSum& h) {
  const Eigen::Index dim = Eigen::Index{1} << h.n_qubits();
  Matrix m = h.identity_coeff() * Matrix::Identity(dim, dim);
  for (const auto& t : h.terms()) m += t.coeff * pauli(t.string.str());
  return m;
}

// Annihilation operator of `mode` on `n_modes`, sign (-1)^(occupied modes below).
inline Matrix annihilate(int mode, int n_modes) {
  const Eigen::Index dim = Eigen::Index{1} << n_modes;
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    if (!((b >> mode) & 1)) continue;
    int below = 0;
    for (int k = 0; k < mode; ++k) below += (b >> k) & 1;
    m(b ^ (Eigen::Index{1} << mode), b) = (below % 2) ? -1.0 : 1.0;
  }
  return m;
}

inline Matrix dense(const vqb::FermionOp& op, int n_modes) {
  const Eigen::Index dim = Eigen::Index{1} << n_modes;
  Matrix total = Matrix::Zero(dim, dim);
  for (const auto& p : op.products) {
    Matrix m = Matrix::Identity(dim, dim);
    for (const auto& f : p.factors) {
      const Matrix a = annihilate(f.mode, n_modes);
      m = m * (f.dagger ? Matrix(a.adjoint()) : a);
    }
    total += p.coeff * m;
  }
  return total;
}

// Sum_k i*g_k*P_k of a generator.
inline Matrix dense_generator(const std::vector<vqb::PauliTerm>& terms) {
  const int n = terms.front().string.n_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& t : terms) m += cplx(0.0, t.coeff) * pauli(t.string.str());
  return m;
}

inline Matrix number_operator(int n_modes) {
  Matrix m = Matrix::Zero(Eigen::Index{1} << n_modes, Eigen::Index{1} << n_modes);
  for (int j = 0; j < n_modes; ++j) {
    const Matrix a = annihilate(j, n_modes);
    m += a.adjoint() * a;
  }
  return m;
}

inline std::vector<double> eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return v;
}

inline Vector to_vector(const vqb::StateVector& s) {
  Vector v(static_cast<Eigen::Index>(s.dimension()));
  for (std::size_t i = 0; i < s.dimension(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
  return v;
}

inline vqb::StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> amps(std::size_t{1} << n);
  for (auto& a : amps) a = {g(rng), g(rng)};
  return vqb::StateVector(n, std::move(amps));
}

inline std::string random_letters(int n, std::mt19937_64& rng) {
  static const char kLetters[] = "IXYZ";
  std::string s;
  for (int q = 0; q < n; ++q) s += kLetters[rng() % 4];
  return s;
}

// z with P(Z > z) = p, by bisection on the complementary error function.
inline double normal_upper_quantile(double p) {
  double lo = -40.0, hi = 40.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (0.5 * std::erfc(mid / std::sqrt(2.0)) > p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracle
