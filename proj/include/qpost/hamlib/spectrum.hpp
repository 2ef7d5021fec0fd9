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

#include <string_view>

#include "qpost/hamlib/hamiltonian.hpp"

namespace qpost::ham {

/// Eigenvalue gaps below this mark the ground space as degenerate.
inline constexpr double kDegeneracyTolerance = 1e-9;

/// Full eigendecomposition, eigenvalues ascending; column j of `vectors` is
/// the j-th eigenvector in canonical phase.
struct Spectrum {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;

  sim::QuantumState eigenstate(Eigen::Index j) const;
};

struct SpectralData {
  double ground_energy = 0.0;
  sim::QuantumState ground_state = sim::QuantumState::zero(1);
  bool degenerate = false;
  /// E_1 - E_min (diagnostic).
  double spectral_gap = 0.0;
};

/// Rotates `v` so its first entry with modulus above 1e-12 is real positive.
void canonicalize_phase(Eigen::Ref<Eigen::VectorXcd> v);

Spectrum diagonalize(const LocalHamiltonian& h);

/// Ground energy and a deterministic ground-state representative: the
/// lowest-index eigenvector of the solver, in canonical phase.
SpectralData ground(const LocalHamiltonian& h);

/// (H + t I) / 2, kept as halved Pauli coefficients plus a symbolic scalar
/// offset t/2 so every stored term stays within the unit-norm bound.
struct ScaledHamiltonian {
  LocalHamiltonian halved;
  double offset = 0.0;
  /// Term count of the original H; the spectrum lies in [0, t].
  int t = 0;

  int n_qubits() const { return halved.n_qubits(); }
  double energy(const sim::QuantumState& state) const;
  Eigen::MatrixXcd assemble() const;
  Spectrum diagonalize() const;
};

ScaledHamiltonian scale_shift(const LocalHamiltonian& h);

/// Precise local Hamiltonian instance: is E_min <= a or >= b?
struct PromiseInstance {
  LocalHamiltonian hamiltonian;
  double a = 0.0;
  double b = 0.0;
};

enum class PromiseLabel { Yes, No, OutsidePromise };

std::string_view to_string(PromiseLabel label);

/// YES if E_min <= a, NO if E_min >= b, otherwise OUTSIDE_PROMISE.
PromiseLabel promise_label(const PromiseInstance& inst);
PromiseLabel promise_label(const PromiseInstance& inst, double ground_energy);

}  // namespace qpost::ham
