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

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qpost/simcore/types.hpp"

namespace qpost::sim {

class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GateKind { H, S, T, X, CNOT, TOFFOLI };

int arity(GateKind kind);
std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(std::string_view name);

/// One gate from the fixed set. For CNOT/TOFFOLI the last qubit is the target.
struct Gate {
  GateKind kind;
  std::array<int, 3> qubits{};

  int arity() const { return sim::arity(kind); }
  bool operator==(const Gate&) const = default;
};

/// Explicit unitary on a few qubits. Only built programmatically (energy
/// measurements, witness preparation); the text format carries gates only.
/// `matrix` is row-major 2^k x 2^k with qubits[0] the most significant
/// local bit.
struct UnitaryBlock {
  std::vector<int> qubits;
  std::vector<cplx> matrix;
  std::string label;
};

using Operation = std::variant<Gate, UnitaryBlock>;

struct PostselectCondition {
  int qubit;
  int value = 1;
  bool operator==(const PostselectCondition&) const = default;
};

/// Gate list plus a designated output qubit and postselection conditions.
class PostselectedCircuit {
 public:
  explicit PostselectedCircuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Operation>& operations() const { return ops_; }
  std::optional<int> output() const { return output_; }
  const std::vector<PostselectCondition>& postselections() const { return post_; }

  PostselectedCircuit& add(Gate g);
  PostselectedCircuit& add(UnitaryBlock block);
  PostselectedCircuit& h(int q) { return add(Gate{GateKind::H, {q}}); }
  PostselectedCircuit& s(int q) { return add(Gate{GateKind::S, {q}}); }
  PostselectedCircuit& t(int q) { return add(Gate{GateKind::T, {q}}); }
  PostselectedCircuit& x(int q) { return add(Gate{GateKind::X, {q}}); }
  PostselectedCircuit& cnot(int c, int tgt) { return add(Gate{GateKind::CNOT, {c, tgt}}); }
  PostselectedCircuit& toffoli(int c0, int c1, int tgt) {
    return add(Gate{GateKind::TOFFOLI, {c0, c1, tgt}});
  }
  /// Appends every operation of `other` (same register size).
  PostselectedCircuit& append(const PostselectedCircuit& other);

  PostselectedCircuit& set_output(int q);
  PostselectedCircuit& clear_output();
  PostselectedCircuit& add_postselection(int q, int value = 1);
  PostselectedCircuit& clear_postselections();

  /// Re-checks every invariant; throws CircuitError.
  void validate() const;

  std::size_t gate_count() const { return ops_.size(); }

 private:
  void check_qubit(int q, const char* what) const;
  void check_roles() const;

  int n_qubits_;
  std::vector<Operation> ops_;
  std::optional<int> output_;
  std::vector<PostselectCondition> post_;
};

/// 2x2 matrix of a single-qubit gate (H, S, T, X).
std::array<cplx, 4> single_qubit_matrix(GateKind kind);

/// Householder unitary whose first column is `target` (unit norm, first
/// entry real). Row-major, size target.size()^2.
std::vector<cplx> preparation_unitary(std::span<const cplx> target);

/// `op` with every qubit index increased by `offset`.
Operation shifted(const Operation& op, int offset);

}  // namespace qpost::sim
