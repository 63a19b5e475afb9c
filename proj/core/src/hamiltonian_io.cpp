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

#include "vqbench/hamiltonian_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

namespace vqb {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string> fields;
};

// Splits into whitespace-separated fields with comments and blank lines dropped.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string field; ss >> field;) line.fields.push_back(field);
    if (!line.fields.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::string where(const Line& line) { return fmt::format("line {}", line.number); }

long long expect_keyed_int(const std::vector<Line>& lines, std::size_t i, std::string_view key) {
  if (i >= lines.size()) throw ParseError(fmt::format("missing '{}' header", key));
  const Line& line = lines[i];
  if (line.fields.size() != 2 || line.fields[0] != key) {
    throw ParseError(fmt::format("{}: expected '{} <value>'", where(line), key));
  }
  return parse_integer(line.fields[1], fmt::format("{} ({})", key, where(line)));
}

PauliTerm parse_term_line(const Line& line, int n_qubits) {
  if (line.fields.size() != 2) {
    throw ParseError(fmt::format("{}: expected '<coeff> <paulistring>'", where(line)));
  }
  const double c = parse_double(line.fields[0], fmt::format("coefficient ({})", where(line)));
  try {
    return {c, PauliString::parse(line.fields[1], n_qubits)};
  } catch (const ParseError& e) {
    throw ParseError(fmt::format("{}: {}", where(line), e.what()));
  }
}

void open_or_throw(std::ifstream& f, const std::filesystem::path& path) {
  if (!f) throw std::runtime_error(fmt::format("cannot open '{}'", path.string()));
}

}  // namespace

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw ParseError(fmt::format("{}: '{}' is not a finite number", what, text));
  }
  return v;
}

long long parse_integer(std::string_view text, std::string_view what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(fmt::format("{}: '{}' is not an integer", what, text));
  }
  return v;
}

HamiltonianFile read_hamiltonian(std::istream& in) {
  const auto lines = tokenize(in);
  const long long n = expect_keyed_int(lines, 0, "qubits");
  if (n < 1 || n > PauliString::kMaxQubits) throw ParseError(fmt::format("qubits {} out of range", n));
  const long long k = expect_keyed_int(lines, 1, "electrons");
  if (k < 0 || k > n) throw ParseError(fmt::format("electrons {} out of range for {} qubits", k, n));
  if (lines.size() < 3 || lines[2].fields.size() != 2 || lines[2].fields[0] != "identity") {
    throw ParseError("missing 'identity <c0>' header");
  }
  HamiltonianFile out{PauliSum(static_cast<int>(n)), static_cast<int>(k)};
  out.hamiltonian.add_identity(parse_double(lines[2].fields[1], "identity"));
  for (std::size_t i = 3; i < lines.size(); ++i) {
    out.hamiltonian.add_term(parse_term_line(lines[i], static_cast<int>(n)));
  }
  return out;
}

HamiltonianFile read_hamiltonian_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  open_or_throw(f, path);
  try {
    return read_hamiltonian(f);
  } catch (const ParseError& e) {
    throw ParseError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

void write_hamiltonian(std::ostream& out, const PauliSum& h, int electrons) {
  out << "qubits " << h.n_qubits() << '\n';
  out << "electrons " << electrons << '\n';
  out << "identity " << format_double(h.identity_coeff()) << '\n';
  for (const auto& t : h.terms()) out << format_double(t.coeff) << ' ' << t.string.str() << '\n';
}

void write_hamiltonian_file(const std::filesystem::path& path, const PauliSum& h, int electrons) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
  write_hamiltonian(f, h, electrons);
}

GeneratorFile read_generators(std::istream& in) {
  const auto lines = tokenize(in);
  GeneratorFile out;
  const long long n = expect_keyed_int(lines, 0, "qubits");
  if (n < 1 || n > PauliString::kMaxQubits) throw ParseError(fmt::format("qubits {} out of range", n));
  const long long k = expect_keyed_int(lines, 1, "electrons");
  if (k < 0 || k > n) throw ParseError(fmt::format("electrons {} out of range for {} qubits", k, n));
  out.n_qubits = static_cast<int>(n);
  out.electrons = static_cast<int>(k);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.fields[0] == "generator") {
      if (line.fields.size() != 4 || line.fields[2] != "amplitude") {
        throw ParseError(fmt::format("{}: expected 'generator <index> amplitude <a>'", where(line)));
      }
      Generator g;
      g.index = static_cast<int>(parse_integer(line.fields[1], fmt::format("generator index ({})", where(line))));
      g.amplitude = parse_double(line.fields[3], fmt::format("amplitude ({})", where(line)));
      out.generators.push_back(std::move(g));
      continue;
    }
    if (out.generators.empty()) {
      throw ParseError(fmt::format("{}: term line before any 'generator' block", where(line)));
    }
    out.generators.back().terms.push_back(parse_term_line(line, out.n_qubits));
  }
  return out;
}

GeneratorFile read_generators_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  open_or_throw(f, path);
  try {
    return read_generators(f);
  } catch (const ParseError& e) {
    throw ParseError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

void write_generators(std::ostream& out, const GeneratorFile& file) {
  std::vector<const Generator*> order;
  for (const auto& g : file.generators) order.push_back(&g);
  std::stable_sort(order.begin(), order.end(), [](const Generator* a, const Generator* b) {
    return std::abs(a->amplitude) > std::abs(b->amplitude);
  });
  out << "qubits " << file.n_qubits << '\n';
  out << "electrons " << file.electrons << '\n';
  for (const Generator* g : order) {
    out << "generator " << g->index << " amplitude " << format_double(g->amplitude) << '\n';
    auto terms = g->terms;
    std::sort(terms.begin(), terms.end(), [](const PauliTerm& a, const PauliTerm& b) { return a.string < b.string; });
    for (const auto& t : terms) out << format_double(t.coeff) << ' ' << t.string.str() << '\n';
  }
}

void write_generators_file(const std::filesystem::path& path, const GeneratorFile& file) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
  write_generators(f, file);
}

}  // namespace vqb
