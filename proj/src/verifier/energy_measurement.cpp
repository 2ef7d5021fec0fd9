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

#include "qpost/verifier/energy_measurement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qpost/verifier/energy_verifier.hpp"

namespace qpost::verify {

using sim::index_t;

int index_register_size(int t) {
  if (t < 1) throw VerifierError("index register needs t >= 1");
  int k = 0;
  while ((1 << k) < t) ++k;
  return k;
}

std::vector<cplx> acceptance_rotation(double lambda) {
  lambda = std::clamp(lambda, 0.0, 1.0);
  const double a = std::sqrt(lambda);
  const double b = std::sqrt(1.0 - lambda);
  return {a, -b, b, a};
}

namespace {

// Householder reflection mapping |0> to the uniform superposition over the
// first t basis states of a k-qubit register.
std::vector<cplx> uniform_prep(int k, int t) {
  const index_t d = index_t{1} << k;
  std::vector<double> v(d, 0.0);
  const double amp = 1.0 / std::sqrt(static_cast<double>(t));
  for (int i = 0; i < t; ++i) v[i] = -amp;
  v[0] += 1.0;  // v = e0 - u
  double vv = 0.0;
  for (double x : v) vv += x * x;
  std::vector<cplx> m(d * d);
  for (index_t r = 0; r < d; ++r) {
    for (index_t c = 0; c < d; ++c) m[r * d + c] = (r == c ? 1.0 : 0.0) - 2.0 * v[r] * v[c] / vv;
  }
  return m;
}

// Pauli string of `term` as a dense matrix on its own support, factor order.
std::vector<cplx> local_pauli(const ham::LocalTerm& term) {
  const int s = static_cast<int>(term.factors.size());
  const index_t d = index_t{1} << s;
  ham::LocalTerm local = term;
  for (int j = 0; j < s; ++j) local.factors[j].qubit = j;
  std::vector<cplx> p(d * d, cplx{0.0, 0.0});
  if (s == 0) {
    p[0] = 1.0;
    return p;
  }
  const ham::PauliMasks pm = ham::masks_of(local, s);
  for (index_t c = 0; c < d; ++c) p[(c ^ pm.flip) * d + c] = pm.phase(c);
  return p;
}

}  // namespace

void append_energy_measurement(sim::PostselectedCircuit& circuit, const ham::ScaledHamiltonian& scaled,
                               const MeasurementLayout& layout) {
  const int t = scaled.t;
  const auto& terms = scaled.halved.terms();
  if (static_cast<int>(terms.size()) != t || std::abs(scaled.offset - 0.5 * t) > 1e-15) {
    throw VerifierError("energy measurement expects a scale_shift result");
  }
  if (static_cast<int>(layout.system.size()) != scaled.n_qubits()) {
    throw VerifierError("layout does not cover every Hamiltonian qubit");
  }
  const int k = index_register_size(t);
  if (static_cast<int>(layout.index.size()) != k) {
    throw VerifierError("index register must have " + std::to_string(k) + " qubits");
  }

  if (k > 0) {
    if (t == (1 << k)) {
      for (int q : layout.index) circuit.h(q);
    } else {
      circuit.add(sim::UnitaryBlock{layout.index, uniform_prep(k, t), "uniform-index"});
    }
  }

  for (int i = 0; i < t; ++i) {
    const ham::LocalTerm& term = terms[i];
    const int s = static_cast<int>(term.factors.size());
    const index_t ds = index_t{1} << s;
    const auto pauli = local_pauli(term);
    // Eigenvalues of the scaled term on the +1 / -1 eigenspaces of P.
    const auto r_plus = acceptance_rotation(0.5 + term.coefficient);
    const auto r_minus = acceptance_rotation(0.5 - term.coefficient);

    // W = P+ (x) R+ + P- (x) R-, with P+- = (I +- P)/2, on (support, ancilla).
    const index_t dw = ds * 2;
    std::vector<cplx> w(dw * dw, cplx{0.0, 0.0});
    for (index_t rs = 0; rs < ds; ++rs) {
      for (index_t cs = 0; cs < ds; ++cs) {
        const cplx id = rs == cs ? 1.0 : 0.0;
        const cplx pp = 0.5 * (id + pauli[rs * ds + cs]);
        const cplx pm = 0.5 * (id - pauli[rs * ds + cs]);
        for (index_t ra = 0; ra < 2; ++ra) {
          for (index_t ca = 0; ca < 2; ++ca) {
            w[(rs * 2 + ra) * dw + (cs * 2 + ca)] = pp * r_plus[ra * 2 + ca] + pm * r_minus[ra * 2 + ca];
          }
        }
      }
    }

    // Controlled on index == i: identity on every other index value.
    const index_t di = index_t{1} << k;
    const index_t d = di * dw;
    std::vector<cplx> block(d * d, cplx{0.0, 0.0});
    for (index_t idx = 0; idx < di; ++idx) {
      for (index_t r = 0; r < dw; ++r) {
        for (index_t c = 0; c < dw; ++c) {
          const cplx v = static_cast<int>(idx) == i ? w[r * dw + c] : (r == c ? cplx{1.0} : cplx{0.0});
          block[(idx * dw + r) * d + (idx * dw + c)] = v;
        }
      }
    }
    std::vector<int> qubits = layout.index;
    for (const auto& f : term.factors) qubits.push_back(layout.system.at(f.qubit));
    qubits.push_back(layout.ancilla);
    circuit.add(sim::UnitaryBlock{std::move(qubits), std::move(block), "energy-term-" + std::to_string(i)});
  }
}

EnergyMeasurement povm_circuit(const ham::ScaledHamiltonian& scaled) {
  const int n = scaled.n_qubits();
  const int k = index_register_size(scaled.t);
  MeasurementLayout layout;
  for (int q = 0; q < n; ++q) layout.system.push_back(q);
  for (int j = 0; j < k; ++j) layout.index.push_back(n + j);
  layout.ancilla = n + k;
  sim::PostselectedCircuit c(n + k + 1);
  append_energy_measurement(c, scaled, layout);
  c.set_output(layout.ancilla);
  return {std::move(c), std::move(layout)};
}

double measurement_accept_probability(const EnergyMeasurement& m, const sim::QuantumState& state) {
  const int extra = m.circuit.n_qubits() - state.n_qubits();
  if (extra < 1) throw sim::DimensionError("state does not fit the measurement's system register");
  const auto input = sim::tensor(state, sim::QuantumState::zero(extra));
  return sim::output_distribution(m.circuit, input).marginal_one(m.layout.ancilla);
}

void append_dilution(sim::PostselectedCircuit& circuit, double b_prime, int accept_qubit, int coin_qubit,
                     int out_qubit) {
  if (!(b_prime > 0.0)) throw VerifierError("dilution needs b' > 0");
  // Pr[coin = 1] = 1/(1+b') = 1 - lambda.
  circuit.add(sim::UnitaryBlock{{coin_qubit}, acceptance_rotation(b_prime / (1.0 + b_prime)), "dilution-coin"});
  circuit.x(accept_qubit);
  circuit.toffoli(coin_qubit, accept_qubit, out_qubit);
  circuit.x(accept_qubit);
  circuit.x(out_qubit);
}

}  // namespace qpost::verify
