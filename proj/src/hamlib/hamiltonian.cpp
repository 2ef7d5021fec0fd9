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

#include "qpost/hamlib/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <set>
#include <string>

namespace qpost::ham {

cplx PauliMasks::phase(index_t basis) const {
  static constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx base = kIPow[y_count % 4];
  return (std::popcount(basis & sign) & 1) ? -base : base;
}

PauliMasks masks_of(const LocalTerm& term, int n_qubits) {
  PauliMasks m;
  for (const auto& f : term.factors) {
    const index_t b = index_t{1} << sim::bit_position(f.qubit, n_qubits);
    switch (f.pauli) {
      case Pauli::X:
        m.flip |= b;
        break;
      case Pauli::Y:
        // Y = i X Z
        m.flip |= b;
        m.sign |= b;
        ++m.y_count;
        break;
      case Pauli::Z:
        m.sign |= b;
        break;
    }
  }
  return m;
}

void validate_term(const LocalTerm& term, int n_qubits) {
  if (static_cast<int>(term.factors.size()) > kMaxLocality) {
    throw HamiltonianError("term acts on " + std::to_string(term.factors.size()) +
                           " qubits; terms must be at most 3-local");
  }
  if (!std::isfinite(term.coefficient) || std::abs(term.coefficient) > 1.0) {
    throw HamiltonianError("term coefficient " + std::to_string(term.coefficient) +
                           " violates the norm bound |coefficient| <= 1");
  }
  std::set<int> seen;
  for (const auto& f : term.factors) {
    if (f.qubit < 0 || f.qubit >= n_qubits) {
      throw HamiltonianError("qubit index " + std::to_string(f.qubit) + " out of range for " +
                             std::to_string(n_qubits) + " qubits");
    }
    if (!seen.insert(f.qubit).second) {
      throw HamiltonianError("qubit " + std::to_string(f.qubit) + " appears twice in one term");
    }
  }
}

LocalHamiltonian::LocalHamiltonian(int n_qubits, std::vector<LocalTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  if (n_qubits_ < 1) throw HamiltonianError("a Hamiltonian needs at least one qubit");
  if (n_qubits_ > sim::kMaxPureQubits) throw HamiltonianError("qubit count exceeds the simulator cap");
  if (terms_.empty()) throw HamiltonianError("a Hamiltonian needs at least one term");
  for (const auto& t : terms_) validate_term(t, n_qubits_);
}

Eigen::MatrixXcd assemble(const LocalHamiltonian& h) {
  const int n = h.n_qubits();
  if (n > kMaxDenseQubits) {
    throw sim::CapacityError("dense assembly is capped at " + std::to_string(kMaxDenseQubits) +
                             " qubits");
  }
  const auto d = static_cast<Eigen::Index>(sim::dimension(n));
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& term : h.terms()) {
    const PauliMasks pm = masks_of(term, n);
    for (Eigen::Index c = 0; c < d; ++c) {
      const auto col = static_cast<index_t>(c);
      m(static_cast<Eigen::Index>(col ^ pm.flip), c) += term.coefficient * pm.phase(col);
    }
  }
  return m;
}

std::vector<cplx> apply(const LocalHamiltonian& h, std::span<const cplx> psi) {
  if (psi.size() != sim::dimension(h.n_qubits())) throw sim::DimensionError("apply: size mismatch");
  std::vector<cplx> out(psi.size(), cplx{0.0, 0.0});
  for (const auto& term : h.terms()) {
    const PauliMasks pm = masks_of(term, h.n_qubits());
    for (index_t c = 0; c < psi.size(); ++c) out[c ^ pm.flip] += term.coefficient * pm.phase(c) * psi[c];
  }
  return out;
}

double expectation(const LocalHamiltonian& h, const sim::QuantumState& state) {
  if (state.n_qubits() != h.n_qubits()) throw sim::DimensionError("expectation: qubit counts differ");
  const index_t d = state.dim();
  double total = 0.0;
  for (const auto& term : h.terms()) {
    const PauliMasks pm = masks_of(term, h.n_qubits());
    cplx acc{0.0, 0.0};
    if (state.is_pure()) {
      const auto a = state.amplitudes();
      for (index_t c = 0; c < d; ++c) acc += std::conj(a[c ^ pm.flip]) * pm.phase(c) * a[c];
    } else {
      // tr(P rho) = sum_c phase(c) rho[c][c ^ flip]
      const auto rho = state.density();
      for (index_t c = 0; c < d; ++c) acc += pm.phase(c) * rho[c * d + (c ^ pm.flip)];
    }
    total += term.coefficient * acc.real();
  }
  return total;
}

}  // namespace qpost::ham
