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

#include "qpost/simcore/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace qpost::sim {

int arity(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT:
      return 2;
    case GateKind::TOFFOLI:
      return 3;
    default:
      return 1;
  }
}

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "H";
    case GateKind::S:
      return "S";
    case GateKind::T:
      return "T";
    case GateKind::X:
      return "X";
    case GateKind::CNOT:
      return "CNOT";
    case GateKind::TOFFOLI:
      return "TOFFOLI";
  }
  return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name) {
  static constexpr std::array kinds = {GateKind::H,    GateKind::S,   GateKind::T,
                                       GateKind::X,    GateKind::CNOT, GateKind::TOFFOLI};
  for (GateKind k : kinds) {
    if (gate_name(k) == name) return k;
  }
  return std::nullopt;
}

std::array<cplx, 4> single_qubit_matrix(GateKind kind) {
  const double r = 1.0 / std::numbers::sqrt2;
  switch (kind) {
    case GateKind::H:
      return {r, r, r, -r};
    case GateKind::S:
      return {1.0, 0.0, 0.0, cplx{0.0, 1.0}};
    case GateKind::T:
      return {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)};
    case GateKind::X:
      return {0.0, 1.0, 1.0, 0.0};
    default:
      throw CircuitError("single_qubit_matrix: not a single-qubit gate");
  }
}

PostselectedCircuit::PostselectedCircuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw CircuitError("a circuit needs at least one qubit");
}

void PostselectedCircuit::check_qubit(int q, const char* what) const {
  if (q < 0 || q >= n_qubits_) {
    throw CircuitError(std::string(what) + " qubit " + std::to_string(q) + " out of range for " +
                       std::to_string(n_qubits_) + " qubits");
  }
}

PostselectedCircuit& PostselectedCircuit::add(Gate g) {
  const int a = g.arity();
  for (int i = 0; i < a; ++i) check_qubit(g.qubits[i], "gate");
  for (int i = 0; i < a; ++i) {
    for (int j = i + 1; j < a; ++j) {
      if (g.qubits[i] == g.qubits[j]) throw CircuitError("gate qubits must be distinct");
    }
  }
  for (int i = a; i < 3; ++i) g.qubits[i] = 0;
  ops_.emplace_back(g);
  return *this;
}

PostselectedCircuit& PostselectedCircuit::add(UnitaryBlock block) {
  const std::size_t k = block.qubits.size();
  if (k == 0) throw CircuitError("unitary block acts on no qubits");
  std::set<int> seen;
  for (int q : block.qubits) {
    check_qubit(q, "unitary block");
    if (!seen.insert(q).second) throw CircuitError("unitary block qubits must be distinct");
  }
  const std::size_t d = std::size_t{1} << k;
  if (block.matrix.size() != d * d) throw CircuitError("unitary block matrix has the wrong size");
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      cplx s{0.0, 0.0};
      for (std::size_t i = 0; i < d; ++i) s += std::conj(block.matrix[i * d + r]) * block.matrix[i * d + c];
      if (std::abs(s - (r == c ? 1.0 : 0.0)) > 1e-10) {
        throw CircuitError("unitary block '" + block.label + "' is not unitary");
      }
    }
  }
  ops_.emplace_back(std::move(block));
  return *this;
}

PostselectedCircuit& PostselectedCircuit::append(const PostselectedCircuit& other) {
  if (other.n_qubits() != n_qubits_) throw CircuitError("append: register sizes differ");
  ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
  return *this;
}

void PostselectedCircuit::check_roles() const {
  std::set<int> seen;
  for (const auto& c : post_) {
    if (!seen.insert(c.qubit).second) throw CircuitError("postselection qubits must be distinct");
  }
  if (output_ && seen.count(*output_)) {
    throw CircuitError("output qubit cannot also be a postselection qubit");
  }
}

PostselectedCircuit& PostselectedCircuit::set_output(int q) {
  check_qubit(q, "output");
  output_ = q;
  try {
    check_roles();
  } catch (...) {
    output_.reset();
    throw;
  }
  return *this;
}

PostselectedCircuit& PostselectedCircuit::clear_output() {
  output_.reset();
  return *this;
}

PostselectedCircuit& PostselectedCircuit::add_postselection(int q, int value) {
  check_qubit(q, "postselection");
  if (value != 0 && value != 1) throw CircuitError("postselection value must be 0 or 1");
  post_.push_back({q, value});
  try {
    check_roles();
  } catch (...) {
    post_.pop_back();
    throw;
  }
  return *this;
}

PostselectedCircuit& PostselectedCircuit::clear_postselections() {
  post_.clear();
  return *this;
}

void PostselectedCircuit::validate() const {
  PostselectedCircuit copy(n_qubits_);
  for (const auto& op : ops_) {
    std::visit([&](const auto& o) { copy.add(o); }, op);
  }
  if (output_) check_qubit(*output_, "output");
  for (const auto& c : post_) check_qubit(c.qubit, "postselection");
  check_roles();
}

std::vector<cplx> preparation_unitary(std::span<const cplx> target) {
  const std::size_t d = target.size();
  if (d == 0 || (d & (d - 1)) != 0) throw CircuitError("preparation_unitary: size must be a power of two");
  double norm2 = 0.0;
  for (const cplx& a : target) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-12) throw CircuitError("preparation_unitary: target is not normalized");
  if (std::abs(target[0].imag()) > 1e-15) throw CircuitError("preparation_unitary: first entry must be real");
  // v = e0 - target; H = I - 2 v v^dag / |v|^2 maps e0 to target.
  std::vector<cplx> v(target.begin(), target.end());
  for (auto& x : v) x = -x;
  v[0] += 1.0;
  double vv = 0.0;
  for (const cplx& x : v) vv += std::norm(x);
  std::vector<cplx> m(d * d, cplx{0.0, 0.0});
  for (std::size_t r = 0; r < d; ++r) m[r * d + r] = 1.0;
  if (vv < 1e-30) return m;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) m[r * d + c] -= 2.0 * v[r] * std::conj(v[c]) / vv;
  }
  return m;
}

Operation shifted(const Operation& op, int offset) {
  if (const auto* g = std::get_if<Gate>(&op)) {
    Gate out = *g;
    for (int i = 0; i < out.arity(); ++i) out.qubits[i] += offset;
    return out;
  }
  UnitaryBlock b = std::get<UnitaryBlock>(op);
  for (int& q : b.qubits) q += offset;
  return b;
}

}  // namespace qpost::sim
