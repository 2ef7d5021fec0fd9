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

#include <Eigen/Dense>
#include <vector>

#include "qpost/simcore/state.hpp"

namespace qpost::ham {

using sim::index_t;

class HamiltonianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Pauli : char { X = 'X', Y = 'Y', Z = 'Z' };

struct PauliFactor {
  Pauli pauli;
  int qubit;
  bool operator==(const PauliFactor&) const = default;
};

/// Largest support of a single term.
inline constexpr int kMaxLocality = 3;
/// Largest register assembled densely.
inline constexpr int kMaxDenseQubits = 12;

/// coefficient * (tensor product of Pauli factors). An empty factor list is
/// the identity. Pauli strings are unitary, so the operator norm of the term
/// is |coefficient|.
struct LocalTerm {
  double coefficient = 0.0;
  std::vector<PauliFactor> factors;

  bool operator==(const LocalTerm&) const = default;
};

/// Bit-level form of a Pauli string: P|c> = phase(c) |c ^ flip>, with
/// phase(c) = i^{#Y} (-1)^{popcount(c & sign)}.
struct PauliMasks {
  index_t flip = 0;
  index_t sign = 0;
  int y_count = 0;

  cplx phase(index_t basis) const;
};

PauliMasks masks_of(const LocalTerm& term, int n_qubits);

/// Sum of at-most-3-local weighted Pauli strings with |coefficient| <= 1.
class LocalHamiltonian {
 public:
  /// Validates every invariant; throws HamiltonianError.
  LocalHamiltonian(int n_qubits, std::vector<LocalTerm> terms);

  int n_qubits() const { return n_qubits_; }
  const std::vector<LocalTerm>& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  bool operator==(const LocalHamiltonian&) const = default;

 private:
  int n_qubits_;
  std::vector<LocalTerm> terms_;
};

/// Throws HamiltonianError when `term` breaks locality, norm or index rules.
void validate_term(const LocalTerm& term, int n_qubits);

/// Dense 2^n x 2^n matrix; n <= kMaxDenseQubits.
Eigen::MatrixXcd assemble(const LocalHamiltonian& h);

/// H|psi> without forming the dense matrix.
std::vector<cplx> apply(const LocalHamiltonian& h, std::span<const cplx> psi);

/// tr(H rho) for pure or mixed states.
double expectation(const LocalHamiltonian& h, const sim::QuantumState& state);

}  // namespace qpost::ham
