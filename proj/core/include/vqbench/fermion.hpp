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

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vqbench/hamiltonian_io.hpp"
#include "vqbench/pauli.hpp"

namespace vqb {

/// Raised when a Hermitian qubit operator is requested from a fermionic
/// operator whose Jordan-Wigner image has non-negligible imaginary weight.
class NonHermitianError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Spin { kUp = 0, kDown = 1 };

/// Project-wide spin-orbital index of (site, spin): 2*site + spin.
constexpr int mode_index(int site, Spin spin) { return 2 * site + static_cast<int>(spin); }

struct LadderOp {
  int mode = 0;
  bool dagger = false;
};

/// coeff * factors[0] * factors[1] * ... (leftmost factor acts last).
struct FermionProduct {
  double coeff = 0.0;
  std::vector<LadderOp> factors;
};

/// Real-weighted sum of products of creation/annihilation operators.
struct FermionOp {
  std::vector<FermionProduct> products;

  FermionOp& add(double coeff, std::vector<LadderOp> factors);
  FermionOp& add(const FermionOp& other, double scale = 1.0);
  FermionOp adjoint() const;
  /// Largest mode index referenced, -1 when empty.
  int max_mode() const;

  /// n_j
  static FermionOp number(int mode);
  /// a^dag_i a_j + a^dag_j a_i
  static FermionOp hopping(int i, int j);
};

using ComplexPauliMap = std::map<PauliString, std::complex<double>>;

/// Exact Jordan-Wigner image with complex weights (identity included as a key).
ComplexPauliMap jordan_wigner_complex(const FermionOp& op, int n_modes);

/// Jordan-Wigner image of a Hermitian operator. Throws NonHermitianError when
/// any imaginary weight exceeds `hermitian_tol`.
PauliSum jordan_wigner(const FermionOp& op, int n_modes, double hermitian_tol = 1e-12);

/// Open-boundary Fermi-Hubbard lattice with `rows` x `cols` sites.
/// Site (r, c) has index r*cols + c.
struct HubbardSpec {
  int rows = 1;
  int cols = 2;
  double t = 1.0;
  double u = 2.0;
  /// Total particle count; half filling (one per site) when unset.
  std::optional<int> n_particles;

  int n_sites() const { return rows * cols; }
  int n_modes() const { return 2 * n_sites(); }
  int particles() const { return n_particles.value_or(n_sites()); }
  /// "RxC"
  std::string label() const;
  /// Parses "2x3" (rows x cols); throws ParseError.
  static HubbardSpec parse_lattice(std::string_view text);
};

/// Bond classes used by the layered Hamiltonian ansatz. Each hopping class is
/// a disjoint matching of the lattice.
enum class TermClass { kU, kH1, kV1, kH2, kV2 };

std::string_view to_string(TermClass c);
std::optional<TermClass> term_class_from_string(std::string_view s);

struct HubbardPartition {
  HubbardSpec spec;
  /// Only classes present on the lattice have an entry.
  std::map<TermClass, PauliSum> parts;

  /// Sum of all parts: the full Hubbard Hamiltonian.
  PauliSum total() const;
  /// Sum of the hopping parts only.
  PauliSum hopping() const;
};

/// Bond list of one hopping class as (site_i, site_j) pairs.
std::vector<std::pair<int, int>> hubbard_bonds(const HubbardSpec& spec, TermClass c);

/// Monolithic fermionic Hubbard Hamiltonian.
FermionOp hubbard_fermion_op(const HubbardSpec& spec);
/// Hopping part only.
FermionOp hubbard_hopping_op(const HubbardSpec& spec);

HubbardPartition build_hubbard(const HubbardSpec& spec);

/// Single (one creator, one annihilator) or double (two each) excitation
/// tau = a^dag_c0 [a^dag_c1] a_a0 [a_a1].
struct Excitation {
  std::vector<int> creators;
  std::vector<int> annihilators;

  FermionOp tau() const;
};

/// Anti-Hermitian G = tau - tau^dag as weights g_k with terms i*g_k*P_k.
/// Throws std::invalid_argument on malformed excitations.
Generator excitation_generator(const Excitation& excitation, double amplitude, int n_modes, int index = 0);

}  // namespace vqb
