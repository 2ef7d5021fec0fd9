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

#include "qpost/simcore/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qpost/simcore/kernels.hpp"

namespace qpost::sim {

namespace {

std::vector<cplx> gaussian_vector(index_t d, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> v(d);
  for (auto& x : v) {
    const double re = g(rng);
    const double im = g(rng);
    x = {re, im};
  }
  return v;
}

void normalize(std::vector<cplx>& v) {
  const double s = std::sqrt(kernels::serial::norm2(v));
  for (auto& x : v) x /= s;
}

}  // namespace

QuantumState random_pure_state(int n_qubits, Rng& rng) {
  auto v = gaussian_vector(dimension(n_qubits), rng);
  normalize(v);
  return QuantumState::pure(std::move(v));
}

QuantumState random_mixed_state(int n_qubits, int rank, Rng& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> w(static_cast<std::size_t>(rank));
  std::vector<QuantumState> comps;
  for (int k = 0; k < rank; ++k) {
    w[k] = u(rng);
    comps.push_back(random_pure_state(n_qubits, rng));
  }
  const double s = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= s;
  // Renormalize the last weight so the sum is exactly representable as 1.
  w.back() = 1.0 - std::accumulate(w.begin(), w.end() - 1, 0.0);
  return QuantumState::mixture(w, comps);
}

QuantumState random_orthogonal_state(const QuantumState& against, Rng& rng) {
  const auto a = against.amplitudes();
  for (;;) {
    auto v = gaussian_vector(against.dim(), rng);
    cplx overlap{0.0, 0.0};
    for (std::size_t i = 0; i < v.size(); ++i) overlap += std::conj(a[i]) * v[i];
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= overlap * a[i];
    // Second pass removes the residual component left by rounding.
    overlap = {0.0, 0.0};
    for (std::size_t i = 0; i < v.size(); ++i) overlap += std::conj(a[i]) * v[i];
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= overlap * a[i];
    if (kernels::serial::norm2(v) < 1e-6) continue;
    normalize(v);
    return QuantumState::pure(std::move(v));
  }
}

PostselectedCircuit random_circuit(int n_qubits, int gate_count, Rng& rng) {
  std::vector<GateKind> kinds = {GateKind::H, GateKind::S, GateKind::T, GateKind::X};
  if (n_qubits >= 2) kinds.push_back(GateKind::CNOT);
  if (n_qubits >= 3) kinds.push_back(GateKind::TOFFOLI);
  std::uniform_int_distribution<std::size_t> pick_kind(0, kinds.size() - 1);
  std::vector<int> order(static_cast<std::size_t>(n_qubits));
  std::iota(order.begin(), order.end(), 0);
  PostselectedCircuit c(n_qubits);
  for (int i = 0; i < gate_count; ++i) {
    const GateKind k = kinds[pick_kind(rng)];
    std::shuffle(order.begin(), order.end(), rng);
    Gate g{k, {}};
    for (int j = 0; j < arity(k); ++j) g.qubits[j] = order[j];
    c.add(g);
  }
  return c;
}

}  // namespace qpost::sim
