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

#include "qpost/hamlib/random_hamiltonian.hpp"

#include <algorithm>
#include <numeric>

namespace qpost::ham {

LocalHamiltonian random_local_hamiltonian(int n_qubits, int terms, sim::Rng& rng, double max_coeff) {
  std::uniform_real_distribution<double> coeff(-max_coeff, max_coeff);
  std::uniform_int_distribution<int> locality(1, std::min(kMaxLocality, n_qubits));
  std::uniform_int_distribution<int> pauli(0, 2);
  static constexpr Pauli kPaulis[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  std::vector<int> order(static_cast<std::size_t>(n_qubits));
  std::iota(order.begin(), order.end(), 0);

  std::vector<LocalTerm> out;
  out.reserve(static_cast<std::size_t>(terms));
  for (int i = 0; i < terms; ++i) {
    LocalTerm t{coeff(rng), {}};
    std::shuffle(order.begin(), order.end(), rng);
    const int k = locality(rng);
    for (int j = 0; j < k; ++j) t.factors.push_back({kPaulis[pauli(rng)], order[j]});
    out.push_back(std::move(t));
  }
  return LocalHamiltonian(n_qubits, std::move(out));
}

}  // namespace qpost::ham
