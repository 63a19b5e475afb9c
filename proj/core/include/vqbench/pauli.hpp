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
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vqb {

/// Raised when text input (Pauli strings, Hamiltonian and generator files)
/// is malformed. The message names the offending position or line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when two operands act on a different number of qubits.
class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Overall factor produced by multiplying two Pauli strings: i^power.
struct PauliPhase {
  int power = 0;  // in [0, 4)

  std::complex<double> value() const;
  friend bool operator==(PauliPhase, PauliPhase) = default;
};

/// A tensor product of single-qubit Paulis over at most 64 qubits.
///
/// Stored as two bit masks: qubit q carries X if only bit q of `x` is set,
/// Z if only bit q of `z` is set, Y if both are set. Character q of the text
/// form is the letter on qubit q.
class PauliString {
 public:
  static constexpr int kMaxQubits = 64;

  PauliString() = default;
  /// Identity on `n_qubits`.
  explicit PauliString(int n_qubits);
  PauliString(int n_qubits, std::uint64_t x, std::uint64_t z);

  /// Parses e.g. "XZYI". Throws ParseError naming the bad position.
  static PauliString parse(std::string_view text, int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }

  bool is_identity() const { return (x_ | z_) == 0; }
  /// 'I', 'X', 'Y' or 'Z'.
  char letter(int qubit) const;
  /// Number of Y letters.
  int y_count() const;
  /// Number of non-identity letters.
  int weight() const;
  bool commutes_with(const PauliString& other) const;

  std::string str() const;

  /// Canonical order: lexicographic on the letter sequence with I < X < Y < Z.
  friend bool operator<(const PauliString& a, const PauliString& b);
  friend bool operator==(const PauliString& a, const PauliString& b) = default;

 private:
  int n_qubits_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// Operator product a*b = phase * product.
struct PauliProduct {
  PauliPhase phase;
  PauliString product;
};

PauliProduct multiply(const PauliString& a, const PauliString& b);

/// Free-function spelling of PauliString::parse.
PauliString parse_pauli(std::string_view text, int n_qubits);

struct PauliTerm {
  double coeff = 0.0;
  PauliString string;
};

/// Real-weighted sum of Pauli strings plus an identity offset.
///
/// Canonical at all times: one entry per distinct string, identity routed to
/// identity_coeff(), near-zero coefficients pruned, iteration in canonical
/// string order.
class PauliSum {
 public:
  static constexpr double kDefaultPruneTolerance = 1e-12;

  PauliSum() = default;
  explicit PauliSum(int n_qubits, double prune_tolerance = kDefaultPruneTolerance);

  int n_qubits() const { return n_qubits_; }
  double identity_coeff() const { return identity_coeff_; }
  double prune_tolerance() const { return prune_tolerance_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Terms in canonical order.
  std::vector<PauliTerm> terms() const;
  /// Coefficient of `s`, 0 when absent. The identity string yields identity_coeff().
  double coeff(const PauliString& s) const;

  void add_term(const PauliTerm& term);
  void add_term(double coeff, const PauliString& s) { add_term(PauliTerm{coeff, s}); }
  void add_identity(double c) { identity_coeff_ += c; }
  void add(const PauliSum& other, double scale = 1.0);

  PauliSum scaled(double s) const;
  /// sum of |c_i| over non-identity terms.
  double one_norm() const;
  /// sum of c_i^2 over non-identity terms.
  double squared_norm() const;

  /// Equal when identity offsets and every coefficient agree within `tol`.
  bool approx_equal(const PauliSum& other, double tol) const;
  friend bool operator==(const PauliSum& a, const PauliSum& b);

 private:
  int n_qubits_ = 0;
  double prune_tolerance_ = kDefaultPruneTolerance;
  double identity_coeff_ = 0.0;
  std::map<PauliString, double> terms_;
};

/// Functional form: returns a copy of `sum` with `term` added.
PauliSum add_term(PauliSum sum, const PauliTerm& term);

}  // namespace vqb
