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

#include "qpost/simcore/state.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "qpost/simcore/kernels.hpp"

namespace qpost::sim {

std::string bitstring(index_t basis, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q) {
    if (qubit_value(basis, q, n_qubits)) s[q] = '1';
  }
  return s;
}

namespace {

int qubits_for_length(std::size_t len) {
  if (len < 2 || (len & (len - 1)) != 0) {
    throw StateError("state length " + std::to_string(len) + " is not a power of two >= 2");
  }
  int n = 0;
  while ((std::size_t{1} << n) < len) ++n;
  return n;
}

void check_qubit_count(int n, int cap) {
  if (n < 1) throw StateError("a state needs at least one qubit");
  if (n > cap) {
    throw CapacityError(std::to_string(n) + " qubits exceeds the simulator cap of " +
                        std::to_string(cap));
  }
}

}  // namespace

QuantumState QuantumState::zero(int n_qubits) { return basis(n_qubits, 0); }

QuantumState QuantumState::basis(int n_qubits, index_t index) {
  check_qubit_count(n_qubits, kMaxPureQubits);
  if (index >= dimension(n_qubits)) throw StateError("basis index out of range");
  std::vector<cplx> amps(dimension(n_qubits), cplx{0.0, 0.0});
  amps[index] = 1.0;
  return QuantumState(n_qubits, false, std::move(amps));
}

QuantumState QuantumState::pure(std::vector<cplx> amplitudes) {
  const int n = qubits_for_length(amplitudes.size());
  check_qubit_count(n, kMaxPureQubits);
  const double norm = kernels::serial::norm2(amplitudes);
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw StateError("pure state is not normalized (squared norm " + std::to_string(norm) + ")");
  }
  return QuantumState(n, false, std::move(amplitudes));
}

QuantumState QuantumState::mixed(int n_qubits, std::vector<cplx> density) {
  check_qubit_count(n_qubits, kMaxMixedQubits);
  const index_t d = dimension(n_qubits);
  if (density.size() != d * d) throw StateError("density matrix size does not match qubit count");
  double trace = 0.0;
  for (index_t r = 0; r < d; ++r) {
    trace += density[r * d + r].real();
    for (index_t c = r; c < d; ++c) {
      if (std::abs(density[r * d + c] - std::conj(density[c * d + r])) > kNormTolerance) {
        throw StateError("density matrix is not Hermitian");
      }
    }
  }
  if (std::abs(trace - 1.0) > kNormTolerance) {
    throw StateError("density matrix trace is " + std::to_string(trace));
  }
  Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> rho(
      density.data(), static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw StateError("density matrix has a negative eigenvalue");
  }
  return QuantumState(n_qubits, true, std::move(density));
}

QuantumState QuantumState::mixture(std::span<const double> weights,
                                   std::span<const QuantumState> components) {
  if (weights.size() != components.size() || components.empty()) {
    throw StateError("mixture needs one weight per component");
  }
  const int n = components.front().n_qubits();
  check_qubit_count(n, kMaxMixedQubits);
  const index_t d = dimension(n);
  double wsum = 0.0;
  std::vector<cplx> rho(d * d, cplx{0.0, 0.0});
  for (std::size_t k = 0; k < components.size(); ++k) {
    const QuantumState& s = components[k];
    if (!s.is_pure() || s.n_qubits() != n) throw StateError("mixture components must be pure and equal size");
    if (weights[k] < 0.0) throw StateError("mixture weights must be nonnegative");
    wsum += weights[k];
    const auto a = s.amplitudes();
    for (index_t r = 0; r < d; ++r) {
      for (index_t c = 0; c < d; ++c) rho[r * d + c] += weights[k] * a[r] * std::conj(a[c]);
    }
  }
  if (std::abs(wsum - 1.0) > kNormTolerance) throw StateError("mixture weights must sum to one");
  return QuantumState(n, true, std::move(rho));
}

QuantumState QuantumState::unchecked_pure(int n_qubits, std::vector<cplx> amplitudes) {
  return QuantumState(n_qubits, false, std::move(amplitudes));
}

QuantumState QuantumState::unchecked_mixed(int n_qubits, std::vector<cplx> density) {
  return QuantumState(n_qubits, true, std::move(density));
}

std::span<const cplx> QuantumState::amplitudes() const {
  if (mixed_) throw StateError("amplitudes() called on a mixed state");
  return data_;
}

std::span<const cplx> QuantumState::density() const {
  if (!mixed_) throw StateError("density() called on a pure state");
  return data_;
}

cplx QuantumState::density_at(index_t row, index_t col) const {
  if (mixed_) return data_[row * dim() + col];
  return data_[row] * std::conj(data_[col]);
}

QuantumState QuantumState::to_mixed() const {
  if (mixed_) return *this;
  check_qubit_count(n_qubits_, kMaxMixedQubits);
  const index_t d = dim();
  std::vector<cplx> rho(d * d);
  for (index_t r = 0; r < d; ++r) {
    for (index_t c = 0; c < d; ++c) rho[r * d + c] = data_[r] * std::conj(data_[c]);
  }
  return QuantumState(n_qubits_, true, std::move(rho));
}

double QuantumState::trace() const {
  if (!mixed_) return kernels::serial::norm2(data_);
  double t = 0.0;
  for (index_t r = 0; r < dim(); ++r) t += data_[r * dim() + r].real();
  return t;
}

double QuantumState::purity() const {
  if (!mixed_) return 1.0;
  // tr(rho^2) = sum |rho_rc|^2 for Hermitian rho.
  return kernels::serial::norm2(data_);
}

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
  const int n = a.n_qubits() + b.n_qubits();
  const index_t da = a.dim();
  const index_t db = b.dim();
  if (a.is_pure() && b.is_pure()) {
    check_qubit_count(n, kMaxPureQubits);
    std::vector<cplx> out(da * db);
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (index_t i = 0; i < da; ++i) {
      for (index_t j = 0; j < db; ++j) out[i * db + j] = x[i] * y[j];
    }
    return QuantumState::unchecked_pure(n, std::move(out));
  }
  check_qubit_count(n, kMaxMixedQubits);
  const index_t d = da * db;
  std::vector<cplx> out(d * d);
  for (index_t ra = 0; ra < da; ++ra) {
    for (index_t ca = 0; ca < da; ++ca) {
      const cplx va = a.density_at(ra, ca);
      for (index_t rb = 0; rb < db; ++rb) {
        for (index_t cb = 0; cb < db; ++cb) {
          out[(ra * db + rb) * d + (ca * db + cb)] = va * b.density_at(rb, cb);
        }
      }
    }
  }
  return QuantumState::unchecked_mixed(n, std::move(out));
}

QuantumState tensor_power(const QuantumState& state, int copies, int qubit_cap) {
  if (copies < 1) throw StateError("tensor_power needs at least one copy");
  const int total = state.n_qubits() * copies;
  const int cap = state.is_pure() ? qubit_cap : std::min(qubit_cap, kMaxMixedQubits);
  if (total > cap) {
    throw CapacityError(std::to_string(copies) + " copies of " + std::to_string(state.n_qubits()) +
                        " qubits exceeds the cap of " + std::to_string(cap));
  }
  QuantumState out = state;
  for (int c = 1; c < copies; ++c) out = tensor(out, state);
  return out;
}

cplx inner_product(const QuantumState& a, const QuantumState& b) {
  if (a.n_qubits() != b.n_qubits()) throw DimensionError("inner_product: qubit counts differ");
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double fidelity(const QuantumState& state, const QuantumState& target) {
  if (!target.is_pure()) throw StateError("fidelity target must be a pure state");
  if (state.n_qubits() != target.n_qubits()) throw DimensionError("fidelity: qubit counts differ");
  if (std::abs(state.trace() - 1.0) > 1e-10 || std::abs(target.trace() - 1.0) > 1e-10) {
    throw StateError("fidelity: inputs must be normalized");
  }
  if (state.is_pure()) return std::norm(inner_product(target, state));
  const auto t = target.amplitudes();
  const index_t d = state.dim();
  const auto rho = state.density();
  cplx acc{0.0, 0.0};
  for (index_t r = 0; r < d; ++r) {
    cplx row{0.0, 0.0};
    for (index_t c = 0; c < d; ++c) row += rho[r * d + c] * t[c];
    acc += std::conj(t[r]) * row;
  }
  return acc.real();
}

}  // namespace qpost::sim
