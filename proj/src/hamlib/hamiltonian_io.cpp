// Copyright 2026 The qpost Authors
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

#include "qpost/hamlib/hamiltonian_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <locale>
#include <optional>
#include <sstream>
#include <vector>

namespace qpost::ham {

HamiltonianParseError::HamiltonianParseError(int line, const std::string& message)
    : HamiltonianError("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

std::optional<double> to_double(const std::string& s) {
  std::istringstream in(s);
  in.imbue(std::locale::classic());
  double v = 0.0;
  if (!(in >> v)) return std::nullopt;
  char extra = 0;
  if (in >> extra) return std::nullopt;
  return v;
}

PauliFactor parse_factor(const std::string& tok, int line) {
  const auto at = tok.find('@');
  if (tok.size() < 3 || at != 1) {
    throw HamiltonianParseError(line, "expected <P>@<q>, got '" + tok + "'");
  }
  Pauli p;
  switch (tok[0]) {
    case 'X':
      p = Pauli::X;
      break;
    case 'Y':
      p = Pauli::Y;
      break;
    case 'Z':
      p = Pauli::Z;
      break;
    default:
      throw HamiltonianParseError(line, "unknown Pauli '" + tok.substr(0, 1) + "'");
  }
  const auto q = to_int(std::string_view(tok).substr(2));
  if (!q || *q < 0) throw HamiltonianParseError(line, "bad qubit index in '" + tok + "'");
  return {p, *q};
}

}  // namespace

LocalHamiltonian parse_hamiltonian(std::string_view text) {
  std::optional<int> declared;
  std::vector<LocalTerm> terms;
  std::vector<int> term_lines;
  int max_index = -1;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto pct = raw.find('%'); pct != std::string::npos) raw.resize(pct);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "#qubits") {
      if (declared) throw HamiltonianParseError(line_no, "duplicate '#qubits'");
      const auto n = tok.size() == 2 ? to_int(tok[1]) : std::nullopt;
      if (!n || *n < 1) throw HamiltonianParseError(line_no, "expected '#qubits N' with N >= 1");
      declared = *n;
      continue;
    }
    if (tok[0].front() == '#') throw HamiltonianParseError(line_no, "unknown directive '" + tok[0] + "'");

    const auto coeff = to_double(tok[0]);
    if (!coeff) throw HamiltonianParseError(line_no, "bad coefficient '" + tok[0] + "'");
    LocalTerm term{*coeff, {}};
    for (std::size_t i = 1; i < tok.size(); ++i) {
      term.factors.push_back(parse_factor(tok[i], line_no));
      max_index = std::max(max_index, term.factors.back().qubit);
    }
    try {
      // Range is checked once the register size is known.
      validate_term(term, std::numeric_limits<int>::max());
    } catch (const HamiltonianError& e) {
      throw HamiltonianParseError(line_no, e.what());
    }
    terms.push_back(std::move(term));
    term_lines.push_back(line_no);
  }
  if (terms.empty()) throw HamiltonianParseError(line_no, "no terms");
  const int n = declared.value_or(std::max(max_index + 1, 1));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    try {
      validate_term(terms[i], n);
    } catch (const HamiltonianError& e) {
      throw HamiltonianParseError(term_lines[i], e.what());
    }
  }
  return LocalHamiltonian(n, std::move(terms));
}

LocalHamiltonian load_hamiltonian(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open Hamiltonian file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_hamiltonian(ss.str());
}

LocalHamiltonian canonical(const LocalHamiltonian& h) {
  std::vector<LocalTerm> terms = h.terms();
  for (auto& t : terms) {
    std::sort(t.factors.begin(), t.factors.end(),
              [](const PauliFactor& a, const PauliFactor& b) { return a.qubit < b.qubit; });
  }
  return LocalHamiltonian(h.n_qubits(), std::move(terms));
}

std::string format_hamiltonian(const LocalHamiltonian& h) {
  const LocalHamiltonian c = canonical(h);
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(17);
  out << "#qubits " << c.n_qubits() << '\n';
  for (const auto& t : c.terms()) {
    out << t.coefficient;
    for (const auto& f : t.factors) out << ' ' << static_cast<char>(f.pauli) << '@' << f.qubit;
    out << '\n';
  }
  return out.str();
}

}  // namespace qpost::ham
