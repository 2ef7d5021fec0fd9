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

#include "qpost/hamlib/hamiltonian.hpp"
#include "qpost/simcore/random.hpp"

namespace qpost::ham {

/// `terms` random Pauli strings, each on 1..min(3, n) distinct random qubits,
/// with coefficients uniform in [-max_coeff, max_coeff].
LocalHamiltonian random_local_hamiltonian(int n_qubits, int terms, sim::Rng& rng,
                                          double max_coeff = 1.0);

}  // namespace qpost::ham
