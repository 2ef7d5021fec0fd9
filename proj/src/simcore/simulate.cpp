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

#include "qpost/simcore/simulate.hpp"

#include <cmath>
#include <string>

namespace qpost::sim {

double Distribution::total() const {
  double s = 0.0;
  for (double p : probs) s += p;
  return s;
}

void Distribution::check_normalized() const {
  if (probs.size() != dimension(n_bits)) throw DimensionError("distribution size mismatch");
  for (double p : probs) {
    if (p < -kDistributionTolerance) throw std::invalid_argument("distribution has a negative entry");
  }
  const double t = total();
  if (std::abs(t - 1.0) > kDistributionTolerance) {
    throw std::invalid_argument("distribution sums to " + std::to_string(t));
  }
}

double Distribution::marginal_one(int qubit) const {
  double s = 0.0;
  for (index_t z = 0; z < probs.size(); ++z) {
    if (qubit_value(z, qubit, n_bits)) s += probs[z];
  }
  return s;
}

namespace {

using kernels::Policy;

void conj_inplace(std::span<cplx> m) {
  for (auto& x : m) x = std::conj(x);
}

// Applies one operation. For density matrices the operator acts on the row
// bits and its conjugate on the column bits: rho -> U rho U^dagger.
struct OpApplier {
  std::span<cplx> data;
  int n;
  bool mixed;
  Policy policy;

  void on_bits(const Gate& g, int offset, bool conjugate) const {
    const auto bit = [&](int q) { return bit_position(q, n) + offset; };
    switch (g.kind) {
      case GateKind::H:
      case GateKind::X: {
        const auto m = single_qubit_matrix(g.kind);
        kernels::apply_1q(policy, data, bit(g.qubits[0]), {m[0], m[1], m[2], m[3]});
        break;
      }
      case GateKind::S:
      case GateKind::T: {
        cplx phase = single_qubit_matrix(g.kind)[3];
        if (conjugate) phase = std::conj(phase);
        kernels::apply_phase(policy, data, bit(g.qubits[0]), phase);
        break;
      }
      case GateKind::CNOT:
        kernels::apply_mcx(policy, data, index_t{1} << bit(g.qubits[0]), bit(g.qubits[1]));
        break;
      case GateKind::TOFFOLI:
        kernels::apply_mcx(policy, data,
                           (index_t{1} << bit(g.qubits[0])) | (index_t{1} << bit(g.qubits[1])),
                           bit(g.qubits[2]));
        break;
    }
  }

  void on_bits(const UnitaryBlock& u, int offset, bool conjugate) const {
    std::vector<int> bits;
    bits.reserve(u.qubits.size());
    for (int q : u.qubits) bits.push_back(bit_position(q, n) + offset);
    if (!conjugate) {
      kernels::apply_dense(policy, data, bits, u.matrix);
      return;
    }
    std::vector<cplx> m = u.matrix;
    conj_inplace(m);
    kernels::apply_dense(policy, data, bits, m);
  }

  template <class Op>
  void operator()(const Op& op) const {
    if (!mixed) {
      on_bits(op, 0, false);
      return;
    }
    on_bits(op, n, false);  // row index occupies the high n bits
    on_bits(op, 0, true);
  }
};

}  // namespace

QuantumState apply_circuit(const PostselectedCircuit& circuit, QuantumState state,
                           kernels::Policy policy) {
  if (state.n_qubits() != circuit.n_qubits()) {
    throw DimensionError("circuit has " + std::to_string(circuit.n_qubits()) +
                         " qubits but the input state has " + std::to_string(state.n_qubits()));
  }
  if (!state.is_pure() && state.n_qubits() > kMaxMixedQubits) {
    throw CapacityError("mixed-state simulation is capped at " + std::to_string(kMaxMixedQubits) +
                        " qubits");
  }
  OpApplier apply{state.data(), state.n_qubits(), !state.is_pure(), policy};
  for (const auto& op : circuit.operations()) std::visit(apply, op);
  return state;
}

Distribution measure_all(const QuantumState& state, kernels::Policy policy) {
  Distribution d{state.n_qubits(), std::vector<double>(state.dim())};
  if (state.is_pure()) {
    kernels::abs2(policy, state.amplitudes(), d.probs);
  } else {
    const index_t dim = state.dim();
    const auto rho = state.density();
    for (index_t i = 0; i < dim; ++i) d.probs[i] = rho[i * dim + i].real();
  }
  return d;
}

Distribution output_distribution(const PostselectedCircuit& circuit, const QuantumState& input,
                                 kernels::Policy policy) {
  return measure_all(apply_circuit(circuit, input, policy), policy);
}

Distribution marginal(const Distribution& dist, std::span<const int> qubits) {
  const int k = static_cast<int>(qubits.size());
  for (int q : qubits) {
    if (q < 0 || q >= dist.n_bits) throw DimensionError("marginal: qubit out of range");
  }
  Distribution out{k, std::vector<double>(dimension(k), 0.0)};
  for (index_t z = 0; z < dist.probs.size(); ++z) {
    index_t y = 0;
    for (int j = 0; j < k; ++j) y = (y << 1) | static_cast<index_t>(qubit_value(z, qubits[j], dist.n_bits));
    out.probs[y] += dist.probs[z];
  }
  return out;
}

}  // namespace qpost::sim
