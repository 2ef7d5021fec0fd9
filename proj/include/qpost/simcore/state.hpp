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

#include <span>
#include <vector>

#include "qpost/simcore/types.hpp"

namespace qpost::sim {

class StateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pure amplitude vector or dense row-major density matrix over n qubits.
///
/// The checked factories enforce normalization (pure), or Hermiticity,
/// unit trace and positivity (mixed). States produced by the simulator
/// itself are built through the unchecked path.
class QuantumState {
 public:
  static QuantumState zero(int n_qubits);
  static QuantumState basis(int n_qubits, index_t index);
  static QuantumState pure(std::vector<cplx> amplitudes);
  static QuantumState mixed(int n_qubits, std::vector<cplx> density);

  /// Sum_i w_i |psi_i><psi_i| over pure states of equal size; weights must
  /// be nonnegative and sum to one.
  static QuantumState mixture(std::span<const double> weights,
                              std::span<const QuantumState> components);

  static QuantumState unchecked_pure(int n_qubits, std::vector<cplx> amplitudes);
  static QuantumState unchecked_mixed(int n_qubits, std::vector<cplx> density);

  int n_qubits() const { return n_qubits_; }
  index_t dim() const { return dimension(n_qubits_); }
  bool is_pure() const { return !mixed_; }

  /// Amplitudes of a pure state. Throws for mixed states.
  std::span<const cplx> amplitudes() const;
  /// Row-major density matrix of a mixed state. Throws for pure states.
  std::span<const cplx> density() const;

  /// Raw storage: amplitudes (pure) or the row-major density (mixed).
  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }

  /// rho(r, c); for pure states computed from the amplitudes.
  cplx density_at(index_t row, index_t col) const;

  QuantumState to_mixed() const;

  double trace() const;
  double purity() const;

 private:
  QuantumState(int n_qubits, bool mixed, std::vector<cplx> data)
      : n_qubits_(n_qubits), mixed_(mixed), data_(std::move(data)) {}

  int n_qubits_ = 0;
  bool mixed_ = false;
  std::vector<cplx> data_;
};

/// Kronecker product a (x) b; the qubits of a come first.
QuantumState tensor(const QuantumState& a, const QuantumState& b);

/// state^{(x) copies}. The qubit cap defaults to the pure-path limit; mixed
/// states are additionally limited to kMaxMixedQubits.
QuantumState tensor_power(const QuantumState& state, int copies,
                          int qubit_cap = kMaxPureQubits);

/// <target|rho|target>, the squared-overlap convention.
double fidelity(const QuantumState& state, const QuantumState& target);

/// <a|b> for pure states.
cplx inner_product(const QuantumState& a, const QuantumState& b);

}  // namespace qpost::sim
