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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "vqbench/pauli.hpp"

namespace vqb {

/// Renders a double with 17 significant digits and lowercase exponent, the
/// pinned float format of every file this library writes.
std::string format_double(double v);

/// Parses a full-precision decimal or scientific literal; throws ParseError.
double parse_double(std::string_view text, std::string_view what);
long long parse_integer(std::string_view text, std::string_view what);

/// Contents of a Hamiltonian text file.
///
///   qubits <n>
///   electrons <k>
///   identity <c0>
///   <coeff> <paulistring>     (one line per term, '#' starts a comment)
struct HamiltonianFile {
  PauliSum hamiltonian;
  int electrons = 0;
};

HamiltonianFile read_hamiltonian(std::istream& in);
HamiltonianFile read_hamiltonian_file(const std::filesystem::path& path);
/// Terms are written in canonical order, so output is reproducible bit for bit.
void write_hamiltonian(std::ostream& out, const PauliSum& h, int electrons);
void write_hamiltonian_file(const std::filesystem::path& path, const PauliSum& h, int electrons);

/// Anti-Hermitian generator G = sum_k i*g_k*P_k with its source amplitude.
struct Generator {
  int index = 0;
  double amplitude = 0.0;
  /// Real weights g_k; the operator term is i*g_k*P_k.
  std::vector<PauliTerm> terms;
};

/// Contents of a generator file.
///
///   qubits <n>
///   electrons <k>
///   generator <index> amplitude <a>
///   <g_k> <paulistring>
///   ...
///
/// Blocks appear in descending |amplitude| order.
struct GeneratorFile {
  int n_qubits = 0;
  int electrons = 0;
  std::vector<Generator> generators;
};

GeneratorFile read_generators(std::istream& in);
GeneratorFile read_generators_file(const std::filesystem::path& path);
void write_generators(std::ostream& out, const GeneratorFile& file);
void write_generators_file(const std::filesystem::path& path, const GeneratorFile& file);

}  // namespace vqb
