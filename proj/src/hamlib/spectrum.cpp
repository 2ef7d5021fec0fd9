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

#include "qpost/hamlib/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <vector>

namespace qpost::ham {

void canonicalize_phase(Eigen::Ref<Eigen::VectorXcd> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > 1e-12) {
      v *= std::conj(v(i)) / mag;
      v(i) = cplx{std::abs(v(i)), 0.0};
      return;
    }
  }
}

sim::QuantumState Spectrum::eigenstate(Eigen::Index j) const {
  std::vector<cplx> amps(static_cast<std::size_t>(vectors.rows()));
  for (Eigen::Index i = 0; i < vectors.rows(); ++i) amps[static_cast<std::size_t>(i)] = vectors(i, j);
  int n = 0;
  while ((std::size_t{1} << n) < amps.size()) ++n;
  return sim::QuantumState::unchecked_pure(n, std::move(amps));
}

namespace {

Spectrum diagonalize_dense(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  Spectrum s{es.eigenvalues(), es.eigenvectors()};
  for (Eigen::Index j = 0; j < s.vectors.cols(); ++j) {
    s.vectors.col(j).normalize();
    canonicalize_phase(s.vectors.col(j));
  }
  return s;
}

SpectralData ground_from(const Spectrum& s) {
  SpectralData g;
  g.ground_energy = s.values(0);
  g.ground_state = s.eigenstate(0);
  g.spectral_gap = s.values.size() > 1 ? s.values(1) - s.values(0) : 0.0;
  g.degenerate = s.values.size() > 1 && g.spectral_gap < kDegeneracyTolerance;
  return g;
}

}  // namespace

Spectrum diagonalize(const LocalHamiltonian& h) { return diagonalize_dense(assemble(h)); }

SpectralData ground(const LocalHamiltonian& h) { return ground_from(diagonalize(h)); }

double ScaledHamiltonian::energy(const sim::QuantumState& state) const {
  return expectation(halved, state) + offset;
}

Eigen::MatrixXcd ScaledHamiltonian::assemble() const {
  Eigen::MatrixXcd m = ham::assemble(halved);
  m.diagonal().array() += offset;
  return m;
}

Spectrum ScaledHamiltonian::diagonalize() const { return diagonalize_dense(assemble()); }

ScaledHamiltonian scale_shift(const LocalHamiltonian& h) {
  std::vector<LocalTerm> terms = h.terms();
  for (auto& t : terms) t.coefficient *= 0.5;
  const int t = h.term_count();
  return ScaledHamiltonian{LocalHamiltonian(h.n_qubits(), std::move(terms)), 0.5 * t, t};
}

std::string_view to_string(PromiseLabel label) {
  switch (label) {
    case PromiseLabel::Yes:
      return "YES";
    case PromiseLabel::No:
      return "NO";
    case PromiseLabel::OutsidePromise:
      return "OUTSIDE_PROMISE";
  }
  return "?";
}

PromiseLabel promise_label(const PromiseInstance& inst, double ground_energy) {
  if (!(inst.b > inst.a)) throw HamiltonianError("promise instance needs b > a");
  if (ground_energy <= inst.a) return PromiseLabel::Yes;
  if (ground_energy >= inst.b) return PromiseLabel::No;
  return PromiseLabel::OutsidePromise;
}

PromiseLabel promise_label(const PromiseInstance& inst) {
  if (!(inst.b > inst.a)) throw HamiltonianError("promise instance needs b > a");
  return promise_label(inst, ground(inst.hamiltonian).ground_energy);
}

}  // namespace qpost::ham
