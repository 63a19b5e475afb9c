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

#include "vqbench/pauli.hpp"

#include <bit>
#include <cmath>

#include <fmt/format.h>

namespace vqb {
namespace {

int letter_code(std::uint64_t x, std::uint64_t z, int q) {
  const bool xb = (x >> q) & 1u;
  const bool zb = (z >> q) & 1u;
  // I=0 X=1 Y=2 Z=3 so integer order matches letter order.
  if (xb && zb) return 2;
  if (xb) return 1;
  if (zb) return 3;
  return 0;
}

std::uint64_t qubit_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace

std::complex<double> PauliPhase::value() const {
  switch (power & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PauliString::PauliString(int n_qubits) : PauliString(n_qubits, 0, 0) {}

PauliString::PauliString(int n_qubits, std::uint64_t x, std::uint64_t z)
    : n_qubits_(n_qubits), x_(x), z_(z) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument(fmt::format("PauliString: n_qubits={} outside [1, {}]", n_qubits, kMaxQubits));
  }
  if (((x | z) & ~qubit_mask(n_qubits)) != 0) {
    throw std::invalid_argument("PauliString: mask bits beyond n_qubits");
  }
}

PauliString PauliString::parse(std::string_view text, int n_qubits) {
  if (static_cast<int>(text.size()) != n_qubits) {
    throw ParseError(fmt::format("pauli string '{}': length {} does not match {} qubits (position {})",
                                 text, text.size(), n_qubits, std::min<std::size_t>(text.size(), n_qubits)));
  }
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (int q = 0; q < n_qubits; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (text[q]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default:
        throw ParseError(fmt::format("pauli string '{}': invalid character '{}' at position {}", text, text[q], q));
    }
  }
  return PauliString(n_qubits, x, z);
}

char PauliString::letter(int qubit) const {
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  return kLetters[letter_code(x_, z_, qubit)];
}

int PauliString::y_count() const { return std::popcount(x_ & z_); }

int PauliString::weight() const { return std::popcount(x_ | z_); }

bool PauliString::commutes_with(const PauliString& other) const {
  return ((std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_)) & 1) == 0;
}

std::string PauliString::str() const {
  std::string out(n_qubits_, 'I');
  for (int q = 0; q < n_qubits_; ++q) out[q] = letter(q);
  return out;
}

bool operator<(const PauliString& a, const PauliString& b) {
  if (a.n_qubits_ != b.n_qubits_) return a.n_qubits_ < b.n_qubits_;
  const std::uint64_t diff = (a.x_ ^ b.x_) | (a.z_ ^ b.z_);
  if (diff == 0) return false;
  const int q = std::countr_zero(diff);
  return letter_code(a.x_, a.z_, q) < letter_code(b.x_, b.z_, q);
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw SizeMismatch(fmt::format("multiply: {} vs {} qubits", a.n_qubits(), b.n_qubits()));
  }
  // P = i^{|x&z|} X^x Z^z; moving Z^{za} past X^{xb} costs (-1)^{|za&xb|}.
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  int power = a.y_count() + b.y_count() - std::popcount(x & z) + 2 * std::popcount(a.z_mask() & b.x_mask());
  power = ((power % 4) + 4) % 4;
  return {PauliPhase{power}, PauliString(a.n_qubits(), x, z)};
}

PauliString parse_pauli(std::string_view text, int n_qubits) { return PauliString::parse(text, n_qubits); }

PauliSum::PauliSum(int n_qubits, double prune_tolerance)
    : n_qubits_(n_qubits), prune_tolerance_(prune_tolerance) {
  if (n_qubits < 1 || n_qubits > PauliString::kMaxQubits) {
    throw std::invalid_argument(fmt::format("PauliSum: n_qubits={} out of range", n_qubits));
  }
}

std::vector<PauliTerm> PauliSum::terms() const {
  std::vector<PauliTerm> out;
  out.reserve(terms_.size());
  for (const auto& [s, c] : terms_) out.push_back({c, s});
  return out;
}

double PauliSum::coeff(const PauliString& s) const {
  if (s.is_identity()) return identity_coeff_;
  auto it = terms_.find(s);
  return it == terms_.end() ? 0.0 : it->second;
}

void PauliSum::add_term(const PauliTerm& term) {
  if (term.string.n_qubits() != n_qubits_) {
    throw SizeMismatch(fmt::format("add_term: term on {} qubits added to sum on {}", term.string.n_qubits(), n_qubits_));
  }
  if (!std::isfinite(term.coeff)) throw std::invalid_argument("add_term: non-finite coefficient");
  if (term.string.is_identity()) {
    identity_coeff_ += term.coeff;
    return;
  }
  auto [it, inserted] = terms_.try_emplace(term.string, term.coeff);
  if (!inserted) it->second += term.coeff;
  if (std::abs(it->second) < prune_tolerance_) terms_.erase(it);
}

void PauliSum::add(const PauliSum& other, double scale) {
  if (other.n_qubits_ != n_qubits_) {
    throw SizeMismatch(fmt::format("add: {} vs {} qubits", other.n_qubits_, n_qubits_));
  }
  identity_coeff_ += scale * other.identity_coeff_;
  for (const auto& [s, c] : other.terms_) add_term(scale * c, s);
}

PauliSum PauliSum::scaled(double s) const {
  PauliSum out(n_qubits_, prune_tolerance_);
  out.add(*this, s);
  return out;
}

double PauliSum::one_norm() const {
  double acc = 0.0;
  for (const auto& [s, c] : terms_) acc += std::abs(c);
  return acc;
}

double PauliSum::squared_norm() const {
  double acc = 0.0;
  for (const auto& [s, c] : terms_) acc += c * c;
  return acc;
}

bool PauliSum::approx_equal(const PauliSum& other, double tol) const {
  if (n_qubits_ != other.n_qubits_) return false;
  if (std::abs(identity_coeff_ - other.identity_coeff_) > tol) return false;
  for (const auto& [s, c] : terms_) {
    if (std::abs(c - other.coeff(s)) > tol) return false;
  }
  for (const auto& [s, c] : other.terms_) {
    if (std::abs(c - coeff(s)) > tol) return false;
  }
  return true;
}

bool operator==(const PauliSum& a, const PauliSum& b) {
  return a.n_qubits_ == b.n_qubits_ && a.identity_coeff_ == b.identity_coeff_ && a.terms_ == b.terms_;
}

PauliSum add_term(PauliSum sum, const PauliTerm& term) {
  sum.add_term(term);
  return sum;
}

}  // namespace vqb
