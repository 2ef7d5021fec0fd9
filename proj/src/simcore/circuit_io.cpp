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

#include "qpost/simcore/circuit_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace qpost::sim {

CircuitParseError::CircuitParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

}  // namespace

PostselectedCircuit parse_circuit(std::string_view text) {
  std::optional<PostselectedCircuit> circuit;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  auto need_circuit = [&](int line) -> PostselectedCircuit& {
    if (!circuit) throw CircuitParseError(line, "'#qubits N' must appear before this line");
    return *circuit;
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto pct = line.find('%'); pct != std::string_view::npos) line = line.substr(0, pct);
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "#qubits") {
        if (circuit) throw CircuitParseError(line_no, "duplicate '#qubits'");
        const auto n = tok.size() == 2 ? to_int(tok[1]) : std::nullopt;
        if (!n || *n < 1) throw CircuitParseError(line_no, "expected '#qubits N' with N >= 1");
        if (*n > kMaxPureQubits) {
          throw CircuitParseError(line_no, "qubit count exceeds the simulator cap of " +
                                               std::to_string(kMaxPureQubits));
        }
        circuit.emplace(*n);
      } else if (tok[0] == "#output") {
        const auto q = tok.size() == 2 ? to_int(tok[1]) : std::nullopt;
        if (!q) throw CircuitParseError(line_no, "expected '#output Q'");
        need_circuit(line_no).set_output(*q);
      } else if (tok[0] == "#postselect") {
        if (tok.size() != 2) throw CircuitParseError(line_no, "expected '#postselect Q=1'");
        const auto eq = tok[1].find('=');
        if (eq == std::string::npos) throw CircuitParseError(line_no, "expected '#postselect Q=1'");
        const auto q = to_int(std::string_view(tok[1]).substr(0, eq));
        const auto v = to_int(std::string_view(tok[1]).substr(eq + 1));
        if (!q || !v) throw CircuitParseError(line_no, "expected '#postselect Q=1'");
        if (*v != 1) {
          throw CircuitParseError(line_no, "only postselection on 1 is supported; insert an X gate");
        }
        need_circuit(line_no).add_postselection(*q, 1);
      } else if (tok[0].front() == '#') {
        throw CircuitParseError(line_no, "unknown directive '" + tok[0] + "'");
      } else {
        const auto kind = gate_from_name(tok[0]);
        if (!kind) throw CircuitParseError(line_no, "unknown gate '" + tok[0] + "'");
        const int a = arity(*kind);
        if (static_cast<int>(tok.size()) != a + 1) {
          throw CircuitParseError(line_no, tok[0] + " takes " + std::to_string(a) + " qubit(s)");
        }
        Gate g{*kind, {}};
        for (int i = 0; i < a; ++i) {
          const auto q = to_int(tok[i + 1]);
          if (!q) throw CircuitParseError(line_no, "bad qubit index '" + tok[i + 1] + "'");
          g.qubits[i] = *q;
        }
        need_circuit(line_no).add(g);
      }
    } catch (const CircuitError& e) {
      throw CircuitParseError(line_no, e.what());
    }
  }
  if (!circuit) throw CircuitParseError(line_no, "missing '#qubits N'");
  return *circuit;
}

PostselectedCircuit load_circuit(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open circuit file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_circuit(ss.str());
}

std::string format_circuit(const PostselectedCircuit& circuit) {
  std::ostringstream out;
  out << "#qubits " << circuit.n_qubits() << '\n';
  if (circuit.output()) out << "#output " << *circuit.output() << '\n';
  for (const auto& c : circuit.postselections()) {
    if (c.value != 1) throw CircuitError("text format only carries postselection on 1");
    out << "#postselect " << c.qubit << "=1\n";
  }
  for (const auto& op : circuit.operations()) {
    const auto* g = std::get_if<Gate>(&op);
    if (!g) throw CircuitError("unitary blocks have no text representation");
    out << gate_name(g->kind);
    for (int i = 0; i < g->arity(); ++i) out << ' ' << g->qubits[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace qpost::sim
