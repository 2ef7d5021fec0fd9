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

#include "qpost/oracles/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qpost::oracle {

Eigensystem jacobi_hermitian(const Eigen::MatrixXcd& h, double tolerance) {
  const auto n = h.rows();
  const auto m = 2 * n;
  Eigen::MatrixXd a(m, m);
  a.topLeftCorner(n, n) = h.real();
  a.topRightCorner(n, n) = -h.imag();
  a.bottomLeftCorner(n, n) = h.imag();
  a.bottomRightCorner(n, n) = h.real();
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(m, m);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = i + 1; j < m; ++j) off += a(i, j) * a(i, j);
    if (std::sqrt(off) < tolerance) break;
    for (Eigen::Index p = 0; p < m; ++p) {
      for (Eigen::Index q = p + 1; q < m; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < m; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < m; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < m; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return a(x, x) < a(y, y); });

  // Each eigenvalue of H appears twice; (x; y) maps to x + i y. Build an
  // orthonormal complex basis by Gram-Schmidt over the sorted real vectors.
  Eigensystem out;
  out.vectors = Eigen::MatrixXcd::Zero(n, n);
  Eigen::Index filled = 0;
  for (Eigen::Index idx = 0; idx < m && filled < n; ++idx) {
    const auto col = order[idx];
    Eigen::VectorXcd z(n);
    for (Eigen::Index k = 0; k < n; ++k) z(k) = cplx(v(k, col), v(k + n, col));
    for (Eigen::Index j = 0; j < filled; ++j) z -= out.vectors.col(j).dot(z) * out.vectors.col(j);
    const double norm = z.norm();
    if (norm < 1e-6) continue;
    out.vectors.col(filled) = z / norm;
    out.values.push_back(a(col, col));
    ++filled;
  }
  if (filled != n) throw std::runtime_error("jacobi_hermitian: failed to build a full eigenbasis");
  return out;
}

namespace {

Eigen::Matrix2cd pauli(ham::Pauli p) {
  Eigen::Matrix2cd m;
  switch (p) {
    case ham::Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case ham::Pauli::Y:
      m << 0, cplx(0, -1), cplx(0, 1), 0;
      break;
    case ham::Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Eigen::MatrixXcd local_gate(sim::GateKind kind) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd m;
  switch (kind) {
    case sim::GateKind::H:
      m.resize(2, 2);
      m << r, r, r, -r;
      break;
    case sim::GateKind::S:
      m.resize(2, 2);
      m << 1, 0, 0, cplx(0, 1);
      break;
    case sim::GateKind::T:
      m.resize(2, 2);
      m << 1, 0, 0, std::polar(1.0, M_PI / 4);
      break;
    case sim::GateKind::X:
      m.resize(2, 2);
      m << 0, 1, 1, 0;
      break;
    case sim::GateKind::CNOT:
      m = Eigen::MatrixXcd::Identity(4, 4);
      m.block(2, 2, 2, 2) << 0, 1, 1, 0;
      break;
    case sim::GateKind::TOFFOLI:
      m = Eigen::MatrixXcd::Identity(8, 8);
      m.block(6, 6, 2, 2) << 0, 1, 1, 0;
      break;
  }
  return m;
}

}  // namespace

Eigen::MatrixXcd kronecker_assemble(const ham::LocalHamiltonian& h) {
  const int n = h.n_qubits();
  const Eigen::Index d = Eigen::Index{1} << n;
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& term : h.terms()) {
    Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = 0; q < n; ++q) {
      Eigen::MatrixXcd f = Eigen::MatrixXcd::Identity(2, 2);
      for (const auto& pf : term.factors)
        if (pf.qubit == q) f = pauli(pf.pauli);
      prod = kron(prod, f);
    }
    total += term.coefficient * prod;
  }
  return total;
}

Eigen::MatrixXcd operation_matrix(const sim::Operation& op, int n_qubits) {
  std::vector<int> qubits;
  Eigen::MatrixXcd local;
  if (const auto* g = std::get_if<sim::Gate>(&op)) {
    qubits.assign(g->qubits.begin(), g->qubits.begin() + g->arity());
    local = local_gate(g->kind);
  } else {
    const auto& b = std::get<sim::UnitaryBlock>(op);
    qubits = b.qubits;
    const auto k = Eigen::Index{1} << qubits.size();
    local.resize(k, k);
    for (Eigen::Index r = 0; r < k; ++r)
      for (Eigen::Index c = 0; c < k; ++c) local(r, c) = b.matrix[r * k + c];
  }
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  const int k = static_cast<int>(qubits.size());
  // Bit of qubit q in a basis index, qubit 0 most significant.
  auto bit = [&](Eigen::Index basis, int q) { return (basis >> (n_qubits - 1 - q)) & 1; };
  Eigen::Index touched = 0;
  for (int q : qubits) touched |= Eigen::Index{1} << (n_qubits - 1 - q);
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      if ((r & ~touched) != (c & ~touched)) continue;
      Eigen::Index lr = 0, lc = 0;
      for (int j = 0; j < k; ++j) {
        lr = (lr << 1) | bit(r, qubits[j]);
        lc = (lc << 1) | bit(c, qubits[j]);
      }
      full(r, c) = local(lr, lc);
    }
  }
  return full;
}

Eigen::MatrixXcd circuit_unitary(const sim::PostselectedCircuit& circuit) {
  const int n = circuit.n_qubits();
  if (n > 10) throw std::length_error("circuit_unitary: at most 10 qubits");
  const Eigen::Index d = Eigen::Index{1} << n;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
  for (const auto& op : circuit.operations()) u = operation_matrix(op, n) * u;
  return u;
}

Eigen::MatrixXcd density_of(const sim::QuantumState& state) {
  const auto d = static_cast<Eigen::Index>(state.dim());
  Eigen::MatrixXcd rho(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) rho(r, c) = state.density_at(r, c);
  return rho;
}

std::vector<double> density_pipeline(const sim::PostselectedCircuit& circuit, const Eigen::MatrixXcd& rho) {
  const Eigen::MatrixXcd u = circuit_unitary(circuit);
  const Eigen::MatrixXcd out = u * rho * u.adjoint();
  std::vector<double> diag(out.rows());
  for (Eigen::Index i = 0; i < out.rows(); ++i) diag[i] = out(i, i).real();
  return diag;
}

BruteConditional brute_postselect(const std::vector<double>& probs, int n_bits,
                                  const std::vector<std::pair<int, int>>& conditions) {
  BruteConditional out;
  out.conditional.assign(probs.size(), 0.0);
  std::vector<std::size_t> keep;
  for (std::size_t z = 0; z < probs.size(); ++z) {
    bool ok = true;
    for (auto [q, v] : conditions) ok = ok && static_cast<int>((z >> (n_bits - 1 - q)) & 1) == v;
    if (ok) keep.push_back(z);
  }
  for (auto z : keep) out.success += probs[z];
  if (out.success > 0.0)
    for (auto z : keep) out.conditional[z] = probs[z] / out.success;
  return out;
}

double vertex_enumeration(const std::vector<double>& p, int n_bits, int output, const std::vector<int>& conditions,
                          double c, bool minimize) {
  std::vector<std::size_t> free;
  for (std::size_t z = 0; z < p.size(); ++z)
    if (p[z] > 0.0) free.push_back(z);
  const int s = static_cast<int>(free.size());
  if (s > 8) throw std::length_error("vertex_enumeration: support above 8");
  auto bitv = [&](std::size_t z, int q) { return static_cast<int>((z >> (n_bits - 1 - q)) & 1); };
  std::vector<int> in_num(s), in_den(s);
  for (int i = 0; i < s; ++i) {
    bool cond = true;
    for (int q : conditions) cond = cond && bitv(free[i], q) == 1;
    in_den[i] = cond;
    in_num[i] = cond && bitv(free[i], output) == 1;
  }
  double best = minimize ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
  bool found = false;
  // A vertex has s - 1 coordinates at a bound; the last one closes the sum.
  for (int j = 0; j < s; ++j) {
    for (unsigned mask = 0; mask < (1u << (s - 1)); ++mask) {
      std::vector<double> q(s);
      double rest = 1.0;
      int bitpos = 0;
      for (int i = 0; i < s; ++i) {
        if (i == j) continue;
        q[i] = (mask >> bitpos++) & 1u ? c * p[free[i]] : p[free[i]] / c;
        rest -= q[i];
      }
      q[j] = rest;
      const double lo = p[free[j]] / c, hi = c * p[free[j]];
      if (q[j] < lo - 1e-15 || q[j] > hi + 1e-15) continue;
      double num = 0.0, den = 0.0;
      for (int i = 0; i < s; ++i) {
        num += in_num[i] * q[i];
        den += in_den[i] * q[i];
      }
      if (den <= 0.0) continue;
      const double v = num / den;
      found = true;
      best = minimize ? std::min(best, v) : std::max(best, v);
    }
  }
  if (!found) throw std::runtime_error("vertex_enumeration: no feasible vertex");
  return best;
}

double majority_dp(double p, int copies) {
  std::vector<double> dist(copies + 1, 0.0);
  dist[0] = 1.0;
  for (int i = 0; i < copies; ++i) {
    for (int j = i + 1; j >= 1; --j) dist[j] = dist[j] * (1.0 - p) + dist[j - 1] * p;
    dist[0] *= (1.0 - p);
  }
  double total = 0.0;
  for (int j = copies / 2 + 1; j <= copies; ++j) total += dist[j];
  return total;
}

}  // namespace qpost::oracle
