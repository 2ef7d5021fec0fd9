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

#include "qpost/hamlib/hamiltonian.hpp"
#include "qpost/simcore/circuit.hpp"
#include "qpost/simcore/state.hpp"

// Reference implementations that share no code with the production paths:
// they rebuild every matrix from its definition and use textbook dense
// algorithms. Only the tests and the acceptance battery call them.
namespace qpost::oracle {

using sim::cplx;

struct Eigensystem {
  std::vector<double> values;  // ascending
  Eigen::MatrixXcd vectors;    // column j pairs with values[j]
};

/// Cyclic Jacobi rotations on the real symmetric embedding
/// [[Re H, -Im H], [Im H, Re H]], whose spectrum is that of H doubled.
Eigensystem jacobi_hermitian(const Eigen::MatrixXcd& h, double tolerance = 1e-14);

/// Sum of coefficient times explicit Kronecker products of 2x2 Pauli
/// matrices, identity on untouched qubits.
Eigen::MatrixXcd kronecker_assemble(const ham::LocalHamiltonian& h);

/// Full 2^n x 2^n matrix of one operation, built entry by entry.
Eigen::MatrixXcd operation_matrix(const sim::Operation& op, int n_qubits);

/// Ordered product of the operation matrices; n <= 10.
Eigen::MatrixXcd circuit_unitary(const sim::PostselectedCircuit& circuit);

/// Diagonal of U rho U^dag for the circuit unitary U.
std::vector<double> density_pipeline(const sim::PostselectedCircuit& circuit, const Eigen::MatrixXcd& rho);

Eigen::MatrixXcd density_of(const sim::QuantumState& state);

struct BruteConditional {
  double success = 0.0;
  std::vector<double> conditional;
};

/// Filter the matching outcomes and renormalize.
BruteConditional brute_postselect(const std::vector<double>& probs, int n_bits,
                                  const std::vector<std::pair<int, int>>& conditions);

/// Exact optimum of Pr_q[o=1 | conditions] over the c-envelope of p by
/// enumerating every vertex of the box-simplex polytope. Outcomes with
/// p_z = 0 are fixed at zero; at most 8 outcomes may be free.
double vertex_enumeration(const std::vector<double>& p, int n_bits, int output, const std::vector<int>& conditions,
                          double c, bool minimize);

/// Majority vote probability by dynamic programming over the copies.
double majority_dp(double p, int copies);

}  // namespace qpost::oracle
