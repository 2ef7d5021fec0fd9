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

#include <vector>

#include "qpost/hamlib/spectrum.hpp"
#include "qpost/simcore/circuit.hpp"
#include "qpost/simcore/simulate.hpp"

// Circuit realization of the term-sampling energy measurement.
//
// An index register is prepared in the uniform superposition over the t term
// labels. Controlled on label i, the support of term i is split into the +-1
// eigenspaces of its Pauli string and an ancilla is rotated so that it reads 1
// with probability 1 - lambda, lambda = 1/2 +- c_i/2 being the eigenvalue of
// the scaled term. Tracing out the index register leaves
//
//   Pr[ancilla = 1] = (1/t) sum_i (1 - <h'_i>) = 1 - <H'>/t.
namespace qpost::verify {

/// Qubits used by one energy measurement inside a larger circuit.
/// `system` maps Hamiltonian qubit q to system[q].
struct MeasurementLayout {
  std::vector<int> system;
  std::vector<int> index;
  int ancilla = -1;
};

/// ceil(log2 t); zero for a single term.
int index_register_size(int t);

/// Real rotation sending |0> to sqrt(lambda)|0> + sqrt(1-lambda)|1>.
std::vector<cplx> acceptance_rotation(double lambda);

void append_energy_measurement(sim::PostselectedCircuit& circuit, const ham::ScaledHamiltonian& scaled,
                               const MeasurementLayout& layout);

struct EnergyMeasurement {
  sim::PostselectedCircuit circuit;
  MeasurementLayout layout;
};

/// Stand-alone measurement: system qubits first, then the index register,
/// then the ancilla, which is the circuit's output qubit.
EnergyMeasurement povm_circuit(const ham::ScaledHamiltonian& scaled);

/// Pr[ancilla = 1] for `state` (x) |0...0>.
double measurement_accept_probability(const EnergyMeasurement& m, const sim::QuantumState& state);

/// out = 1 unless the coin (1 with probability 1/(1+b')) selected the
/// measurement and it rejected. `out` and `coin` must start in |0>.
void append_dilution(sim::PostselectedCircuit& circuit, double b_prime, int accept_qubit, int coin_qubit,
                     int out_qubit);

}  // namespace qpost::verify
