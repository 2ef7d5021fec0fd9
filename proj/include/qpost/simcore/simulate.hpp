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

#include "qpost/simcore/circuit.hpp"
#include "qpost/simcore/kernels.hpp"
#include "qpost/simcore/state.hpp"

namespace qpost::sim {

/// Exact Born distribution over all-qubit computational-basis outcomes,
/// indexed by basis index (qubit 0 most significant).
struct Distribution {
  int n_bits = 0;
  std::vector<double> probs;

  double total() const;
  /// Throws unless the entries are nonnegative and sum to one within 1e-10.
  void check_normalized() const;
  /// Probability that `qubit` reads 1.
  double marginal_one(int qubit) const;
};

/// Gate-by-gate unitary action. Pure inputs stay pure.
QuantumState apply_circuit(const PostselectedCircuit& circuit, QuantumState state,
                           kernels::Policy policy = kernels::Policy::Parallel);

Distribution output_distribution(const PostselectedCircuit& circuit, const QuantumState& input,
                                 kernels::Policy policy = kernels::Policy::Parallel);

/// Born distribution of a state measured in the computational basis.
Distribution measure_all(const QuantumState& state,
                         kernels::Policy policy = kernels::Policy::Parallel);

/// Distribution over `qubits` (in the given order) obtained by summing out the
/// remaining bits.
Distribution marginal(const Distribution& dist, std::span<const int> qubits);

}  // namespace qpost::sim
