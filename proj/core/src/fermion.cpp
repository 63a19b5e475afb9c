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

#include "vqbench/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "vqbench/hamiltonian_io.hpp"

namespace vqb {
namespace {

using cplx = std::complex<double>;

constexpr double kDust = 1e-14;

// a_j = Z_{<j} (X_j + iY_j)/2 and a^dag_j = Z_{<j} (X_j - iY_j)/2.
ComplexPauliMap ladder_image(const LadderOp& op, int n_modes) {
  const std::uint64_t chain = (std::uint64_t{1} << op.mode) - 1;
  const std::uint64_t bit = std::uint64_t{1} << op.mode;
  ComplexPauliMap out;
  out[PauliString(n_modes, bit, chain)] = 0.5;
  out[PauliString(n_modes, bit, chain | bit)] = op.dagger ? cplx(0.0, -0.5) : cplx(0.0, 0.5);
  return out;
}

ComplexPauliMap product(const ComplexPauliMap& a, const ComplexPauliMap& b) {
  ComplexPauliMap out;
  for (const auto& [pa, ca] : a) {
    for (const auto& [pb, cb] : b) {
      auto [phase, p] = multiply(pa, pb);
      out[p] += ca * cb * phase.value();
    }
  }
  std::erase_if(out, [](const auto& kv) { return std::abs(kv.second) < kDust; });
  return out;
}

}  // namespace

FermionOp& FermionOp::add(double coeff, std::vector<LadderOp> factors) {
  products.push_back({coeff, std::move(factors)});
  return *this;
}

FermionOp& FermionOp::add(const FermionOp& other, double scale) {
  for (const auto& p : other.products) products.push_back({scale * p.coeff, p.factors});
  return *this;
}

FermionOp FermionOp::adjoint() const {
  FermionOp out;
  for (const auto& p : products) {
    std::vector<LadderOp> f(p.factors.rbegin(), p.factors.rend());
    for (auto& op : f) op.dagger = !op.dagger;
    out.products.push_back({p.coeff, std::move(f)});
  }
  return out;
}

int FermionOp::max_mode() const {
  int m = -1;
  for (const auto& p : products) {
    for (const auto& op : p.factors) m = std::max(m, op.mode);
  }
  return m;
}

FermionOp FermionOp::number(int mode) {
  FermionOp op;
  op.add(1.0, {{mode, true}, {mode, false}});
  return op;
}

FermionOp FermionOp::hopping(int i, int j) {
  FermionOp op;
  op.add(1.0, {{i, true}, {j, false}});
  op.add(1.0, {{j, true}, {i, false}});
  return op;
}

ComplexPauliMap jordan_wigner_complex(const FermionOp& op, int n_modes) {
  if (op.max_mode() >= n_modes) {
    throw std::invalid_argument(fmt::format("jordan_wigner: mode {} >= n_modes {}", op.max_mode(), n_modes));
  }
  ComplexPauliMap total;
  for (const auto& p : op.products) {
    for (const auto& f : p.factors) {
      if (f.mode < 0) throw std::invalid_argument("jordan_wigner: negative mode index");
    }
    ComplexPauliMap acc{{PauliString(n_modes), cplx(p.coeff, 0.0)}};
    for (const auto& f : p.factors) acc = product(acc, ladder_image(f, n_modes));
    for (const auto& [s, c] : acc) total[s] += c;
  }
  std::erase_if(total, [](const auto& kv) { return std::abs(kv.second) < kDust; });
  return total;
}

PauliSum jordan_wigner(const FermionOp& op, int n_modes, double hermitian_tol) {
  const auto image = jordan_wigner_complex(op, n_modes);
  PauliSum out(n_modes);
  for (const auto& [s, c] : image) {
    if (std::abs(c.imag()) > hermitian_tol) {
      throw NonHermitianError(fmt::format("jordan_wigner: term {} has imaginary weight {}", s.str(), c.imag()));
    }
    out.add_term(c.real(), s);
  }
  return out;
}

std::string HubbardSpec::label() const { return fmt::format("{}x{}", rows, cols); }

HubbardSpec HubbardSpec::parse_lattice(std::string_view text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string_view::npos) throw ParseError(fmt::format("lattice '{}': expected RxC", text));
  HubbardSpec spec;
  spec.rows = static_cast<int>(parse_integer(text.substr(0, x), "lattice rows"));
  spec.cols = static_cast<int>(parse_integer(text.substr(x + 1), "lattice cols"));
  if (spec.rows < 1 || spec.cols < 1) throw ParseError(fmt::format("lattice '{}': dimensions must be positive", text));
  return spec;
}

std::string_view to_string(TermClass c) {
  switch (c) {
    case TermClass::kU: return "u";
    case TermClass::kH1: return "h1";
    case TermClass::kV1: return "v1";
    case TermClass::kH2: return "h2";
    case TermClass::kV2: return "v2";
  }
  return "?";
}

std::optional<TermClass> term_class_from_string(std::string_view s) {
  for (auto c : {TermClass::kU, TermClass::kH1, TermClass::kV1, TermClass::kH2, TermClass::kV2}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

PauliSum HubbardPartition::total() const {
  PauliSum out(spec.n_modes());
  for (const auto& [c, h] : parts) out.add(h);
  return out;
}

PauliSum HubbardPartition::hopping() const {
  PauliSum out(spec.n_modes());
  for (const auto& [c, h] : parts) {
    if (c != TermClass::kU) out.add(h);
  }
  return out;
}

std::vector<std::pair<int, int>> hubbard_bonds(const HubbardSpec& spec, TermClass c) {
  std::vector<std::pair<int, int>> bonds;
  auto site = [&](int r, int col) { return r * spec.cols + col; };
  switch (c) {
    case TermClass::kH1:
    case TermClass::kH2: {
      const int parity = c == TermClass::kH1 ? 0 : 1;
      for (int r = 0; r < spec.rows; ++r) {
        for (int col = parity; col + 1 < spec.cols; col += 2) bonds.emplace_back(site(r, col), site(r, col + 1));
      }
      break;
    }
    case TermClass::kV1:
    case TermClass::kV2: {
      const int parity = c == TermClass::kV1 ? 0 : 1;
      for (int r = parity; r + 1 < spec.rows; r += 2) {
        for (int col = 0; col < spec.cols; ++col) bonds.emplace_back(site(r, col), site(r + 1, col));
      }
      break;
    }
    case TermClass::kU:
      break;
  }
  return bonds;
}

namespace {

void validate(const HubbardSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1 || spec.n_sites() < 2) {
    throw std::invalid_argument(fmt::format("hubbard: degenerate lattice {}", spec.label()));
  }
  if (!std::isfinite(spec.t) || !std::isfinite(spec.u)) throw std::invalid_argument("hubbard: t and u must be finite");
  if (spec.n_modes() > PauliString::kMaxQubits) throw std::invalid_argument("hubbard: lattice too large");
  const int n = spec.particles();
  if (n < 0 || n > spec.n_modes()) throw std::invalid_argument(fmt::format("hubbard: {} particles invalid", n));
}

FermionOp class_op(const HubbardSpec& spec, TermClass c) {
  FermionOp op;
  if (c == TermClass::kU) {
    for (int s = 0; s < spec.n_sites(); ++s) {
      op.add(spec.u, {{mode_index(s, Spin::kUp), true},
                      {mode_index(s, Spin::kUp), false},
                      {mode_index(s, Spin::kDown), true},
                      {mode_index(s, Spin::kDown), false}});
    }
    return op;
  }
  for (auto [i, j] : hubbard_bonds(spec, c)) {
    for (Spin sigma : {Spin::kUp, Spin::kDown}) {
      op.add(FermionOp::hopping(mode_index(i, sigma), mode_index(j, sigma)), -spec.t);
    }
  }
  return op;
}

constexpr TermClass kHoppingClasses[] = {TermClass::kH1, TermClass::kV1, TermClass::kH2, TermClass::kV2};

}  // namespace

FermionOp hubbard_hopping_op(const HubbardSpec& spec) {
  validate(spec);
  FermionOp op;
  for (auto c : kHoppingClasses) op.add(class_op(spec, c));
  return op;
}

FermionOp hubbard_fermion_op(const HubbardSpec& spec) {
  FermionOp op = hubbard_hopping_op(spec);
  op.add(class_op(spec, TermClass::kU));
  return op;
}

HubbardPartition build_hubbard(const HubbardSpec& spec) {
  validate(spec);
  HubbardPartition out{spec, {}};
  out.parts.emplace(TermClass::kU, jordan_wigner(class_op(spec, TermClass::kU), spec.n_modes()));
  for (auto c : kHoppingClasses) {
    if (hubbard_bonds(spec, c).empty()) continue;
    out.parts.emplace(c, jordan_wigner(class_op(spec, c), spec.n_modes()));
  }
  return out;
}

FermionOp Excitation::tau() const {
  std::vector<LadderOp> f;
  for (int c : creators) f.push_back({c, true});
  for (int a : annihilators) f.push_back({a, false});
  FermionOp op;
  op.add(1.0, std::move(f));
  return op;
}

Generator excitation_generator(const Excitation& excitation, double amplitude, int n_modes, int index) {
  const auto& cr = excitation.creators;
  const auto& an = excitation.annihilators;
  if (cr.size() != an.size() || cr.empty() || cr.size() > 2) {
    throw std::invalid_argument("excitation_generator: expected a single or double excitation");
  }
  std::set<int> modes;
  for (int m : cr) modes.insert(m);
  for (int m : an) modes.insert(m);
  if (modes.size() != 2 * cr.size()) {
    throw std::invalid_argument("excitation_generator: creators and annihilators must be distinct modes");
  }
  if (*modes.begin() < 0 || *modes.rbegin() >= n_modes) {
    throw std::invalid_argument(fmt::format("excitation_generator: mode outside [0, {})", n_modes));
  }
  FermionOp g = excitation.tau();
  g.add(excitation.tau().adjoint(), -1.0);
  Generator out{index, amplitude, {}};
  for (const auto& [s, c] : jordan_wigner_complex(g, n_modes)) {
    // tau - tau^dag is anti-Hermitian, so every weight is purely imaginary.
    if (std::abs(c.real()) > 1e-12) throw std::logic_error("excitation_generator: non-anti-Hermitian image");
    if (std::abs(c.imag()) > PauliSum::kDefaultPruneTolerance) out.terms.push_back({c.imag(), s});
  }
  if (out.terms.empty()) throw std::invalid_argument("excitation_generator: generator vanishes");
  return out;
}

}  // namespace vqb
