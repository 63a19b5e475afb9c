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

#include "vqbench/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <unordered_map>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <fmt/format.h>
#include <spdlog/spdlog.h>

namespace vqb {
namespace {

using cplx = std::complex<double>;

constexpr std::uint64_t kEvenMask = 0x5555555555555555ull;
constexpr std::uint64_t kOddMask = 0xAAAAAAAAAAAAAAAAull;

cplx pauli_phase(const PauliString& p, std::uint64_t b) {
  const cplx base = PauliPhase{p.y_count() & 3}.value();
  return (std::popcount(b & p.z_mask()) & 1) ? -base : base;
}

// Restricted Hamiltonian over `basis` as a sparse Hermitian matrix. Single
// terms may leave the sector (X X without Y Y does), so leakage is checked on
// the summed column.
Eigen::SparseMatrix<cplx> restricted_matrix(const PauliSum& h, const std::vector<std::uint64_t>& basis) {
  std::unordered_map<std::uint64_t, Eigen::Index> row_of;
  row_of.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) row_of.emplace(basis[i], static_cast<Eigen::Index>(i));
  const auto n = static_cast<Eigen::Index>(basis.size());
  const auto terms = h.terms();
  std::vector<Eigen::Triplet<cplx>> triplets;
  std::unordered_map<std::uint64_t, cplx> column;
  for (Eigen::Index j = 0; j < n; ++j) {
    const std::uint64_t b = basis[j];
    column.clear();
    column[b] += h.identity_coeff();
    for (const auto& t : terms) column[b ^ t.string.x_mask()] += t.coeff * pauli_phase(t.string, b);
    for (const auto& [target, value] : column) {
      auto it = row_of.find(target);
      if (it != row_of.end()) {
        triplets.emplace_back(it->second, j, value);
      } else if (std::abs(value) > 1e-10) {
        throw SectorLeakError(fmt::format("hamiltonian maps basis state {} outside the sector", b));
      }
    }
  }
  Eigen::SparseMatrix<cplx> m(n, n);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

std::vector<cplx> embed(int n_qubits, const std::vector<std::uint64_t>& basis, const Eigen::VectorXcd& v) {
  std::vector<cplx> full(std::size_t{1} << n_qubits);
  for (std::size_t i = 0; i < basis.size(); ++i) full[basis[i]] = v(static_cast<Eigen::Index>(i));
  return full;
}

// Projection of the lowest-index basis state with weight in span(cols).
Eigen::VectorXcd canonical_ground_vector(const Eigen::MatrixXcd& space) {
  const Eigen::Index dim = space.rows();
  for (Eigen::Index k = 0; k < dim; ++k) {
    // P e_k = sum_j v_j conj(v_j[k])
    Eigen::VectorXcd proj = space * space.row(k).adjoint();
    const double nrm = proj.norm();
    if (nrm > 1e-6) {
      proj /= nrm;
      const cplx a = proj(k);
      proj *= std::conj(a) / std::abs(a);
      return proj;
    }
  }
  return space.col(0);
}

// Lanczos with full reorthogonalization and restarts from the Ritz vector.
std::pair<double, Eigen::VectorXcd> lanczos_lowest(const Eigen::SparseMatrix<cplx>& h, double tol) {
  const Eigen::Index n = h.rows();
  auto apply = [&](const Eigen::VectorXcd& v) { return Eigen::VectorXcd(h * v); };
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXcd start(n);
  for (Eigen::Index i = 0; i < n; ++i) start(i) = cplx(u(rng), 0.0);
  start.normalize();
  const Eigen::Index krylov = std::min<Eigen::Index>(n, 120);
  double theta = 0.0;
  Eigen::VectorXcd ritz = start;
  for (int restart = 0; restart < 200; ++restart) {
    Eigen::MatrixXcd q(n, krylov);
    std::vector<double> alpha, beta;
    q.col(0) = ritz;
    Eigen::Index m = 0;
    for (; m < krylov; ++m) {
      Eigen::VectorXcd w = apply(q.col(m));
      alpha.push_back(q.col(m).dot(w).real());
      for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index j = 0; j <= m; ++j) w -= q.col(j) * q.col(j).dot(w);
      }
      const double b = w.norm();
      if (m + 1 == krylov || b < 1e-12) {
        ++m;
        break;
      }
      beta.push_back(b);
      q.col(m + 1) = w / b;
    }
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      tri(i, i) = alpha[i];
      if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
    theta = es.eigenvalues()(0);
    ritz = q.leftCols(m) * es.eigenvectors().col(0).cast<cplx>();
    ritz.normalize();
    const double resid = (apply(ritz) - theta * ritz).norm();
    if (resid < tol) break;
  }
  return {theta, ritz};
}

}  // namespace

bool Sector::contains(std::uint64_t b) const {
  const int up = std::popcount(b & kEvenMask);
  const int down = std::popcount(b & kOddMask);
  if (n_particles && up + down != *n_particles) return false;
  if (n_up && up != *n_up) return false;
  if (n_down && down != *n_down) return false;
  return true;
}

std::string Sector::describe() const {
  std::string out;
  auto add = [&](std::string_view key, const std::optional<int>& v) {
    if (!v) return;
    if (!out.empty()) out += ' ';
    out += fmt::format("{}={}", key, *v);
  };
  add("particles", n_particles);
  add("up", n_up);
  add("down", n_down);
  return out.empty() ? "full" : out;
}

std::vector<std::uint64_t> sector_basis(int n_qubits, const Sector& sector) {
  std::vector<std::uint64_t> out;
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (sector.contains(b)) out.push_back(b);
  }
  return out;
}

StateVector::Amplitude apply_hamiltonian_entry(const PauliSum& h, const StateVector& state, std::size_t row) {
  cplx acc = h.identity_coeff() * state[row];
  for (const auto& t : h.terms()) {
    const std::size_t col = row ^ t.string.x_mask();
    acc += t.coeff * pauli_phase(t.string, col) * state[col];
  }
  return acc;
}

std::vector<StateVector::Amplitude> apply_hamiltonian(const PauliSum& h, std::span<const StateVector::Amplitude> psi) {
  std::vector<cplx> out(psi.size());
  for (std::size_t b = 0; b < psi.size(); ++b) out[b] = h.identity_coeff() * psi[b];
  for (const auto& t : h.terms()) {
    for (std::size_t b = 0; b < psi.size(); ++b) {
      out[b ^ t.string.x_mask()] += t.coeff * pauli_phase(t.string, b) * psi[b];
    }
  }
  return out;
}

ExactSolution exact_ground(const PauliSum& h, const std::optional<Sector>& sector, const ExactOptions& options) {
  const int n = h.n_qubits();
  if (n > StateVector::kMaxQubits) throw std::invalid_argument("exact_ground: too many qubits");
  const auto basis = sector_basis(n, sector.value_or(Sector{}));
  if (basis.empty()) throw std::invalid_argument(fmt::format("exact_ground: sector {} is empty", sector->describe()));

  ExactSolution out;
  out.sector = sector;
  Eigen::VectorXcd v;
  if (basis.size() <= options.dense_limit) {
    const Eigen::MatrixXcd m = Eigen::MatrixXcd(restricted_matrix(h, basis));
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10) throw std::domain_error("exact_ground: non-Hermitian input");
    Eigen::MatrixXcd vectors;
    Eigen::VectorXd values;
    if (m.imag().cwiseAbs().maxCoeff() == 0.0) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.real());
      values = es.eigenvalues();
      vectors = es.eigenvectors().cast<cplx>();
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
      values = es.eigenvalues();
      vectors = es.eigenvectors();
    }
    out.e0 = values(0);
    Eigen::Index deg = 1;
    while (deg < values.size() && values(deg) - out.e0 < options.degeneracy_tol) ++deg;
    out.degeneracy = static_cast<int>(deg);
    Eigen::MatrixXcd space = vectors.leftCols(deg);
    if (deg > 1 && options.split_degeneracy) {
      const Eigen::MatrixXcd s = Eigen::MatrixXcd(restricted_matrix(*options.split_degeneracy, basis));
      const Eigen::MatrixXcd reduced = space.adjoint() * s * space;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (reduced + reduced.adjoint()));
      Eigen::Index low = 1;
      while (low < deg && es.eigenvalues()(low) - es.eigenvalues()(0) < options.degeneracy_tol) ++low;
      space = space * es.eigenvectors().leftCols(low);
    }
    v = canonical_ground_vector(space);
  } else {
    spdlog::debug("exact_ground: Lanczos on {} basis states", basis.size());
    auto [e, vec] = lanczos_lowest(restricted_matrix(h, basis), options.lanczos_tol);
    out.e0 = e;
    v = vec;
    const Eigen::Index k = [&] {
      Eigen::Index best = 0;
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-6) return i;
        if (std::abs(v(i)) > std::abs(v(best))) best = i;
      }
      return best;
    }();
    v *= std::conj(v(k)) / std::abs(v(k));
  }
  out.ground_vector = StateVector(n, embed(n, basis, v));
  const auto hv = apply_hamiltonian(h, out.ground_vector.amplitudes());
  double r2 = 0.0;
  for (std::size_t b = 0; b < hv.size(); ++b) r2 += std::norm(hv[b] - out.e0 * out.ground_vector[b]);
  out.residual = std::sqrt(r2);
  return out;
}

}  // namespace vqb
