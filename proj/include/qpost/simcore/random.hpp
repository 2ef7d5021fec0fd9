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

#include <random>

#include "qpost/simcore/circuit.hpp"
#include "qpost/simcore/state.hpp"

namespace qpost::sim {

using Rng = std::mt19937_64;

/// Haar-random pure state (normalized complex Gaussian vector).
QuantumState random_pure_state(int n_qubits, Rng& rng);

/// Random density matrix of the given rank: a random-weight mixture of
/// Haar-random pure states.
QuantumState random_mixed_state(int n_qubits, int rank, Rng& rng);

/// Random pure state orthogonal to `against` (Gram-Schmidt on a Gaussian
/// vector).
QuantumState random_orthogonal_state(const QuantumState& against, Rng& rng);

/// Uniformly random gates from the fixed set on distinct random qubits.
/// Multi-qubit gates are only drawn when enough qubits exist.
PostselectedCircuit random_circuit(int n_qubits, int gate_count, Rng& rng);

}  // namespace qpost::sim
