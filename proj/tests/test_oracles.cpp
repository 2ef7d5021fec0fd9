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

#include <catch2/catch_amalgamated.hpp>

#include "qpost/oracles/oracles.hpp"
#include "qpost/simcore/random.hpp"

using namespace qpost;
using Catch::Approx;

// The oracles are checked on textbook cases so that agreement with the
// production code means something.

TEST_CASE("Jacobi eigensolver on known spectra") {
  Eigen::MatrixXcd pauli_y(2, 2);
  pauli_y << 0.0, cplx(0, -1), cplx(0, 1), 0.0;
  const auto es = oracle::jacobi_hermitian(pauli_y);
  REQUIRE(es.values[0] == Approx(-1.0).margin(1e-14));
  REQUIRE(es.values[1] == Approx(1.0).margin(1e-14));
  const Eigen::VectorXcd v = es.vectors.col(0);
  REQUIRE((pauli_y * v + v).norm() < 1e-12);

  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
  d(0, 0) = 2.0;
  d(1, 1) = -1.0;
  d(2, 2) = 0.5;
  const auto ed = oracle::jacobi_hermitian(d);
  REQUIRE(ed.values == std::vector<double>{-1.0, 0.5, 2.0});
}

TEST_CASE("Kronecker assembly of textbook Hamiltonians") {
  const ham::LocalHamiltonian zz(2, {{1.0, {{ham::Pauli::Z, 0}, {ham::Pauli::Z, 1}}}});
  const auto m = oracle::kronecker_assemble(zz);
  REQUIRE(m.diagonal().real() == Eigen::Vector4d(1, -1, -1, 1));
  const ham::LocalHamiltonian y(1, {{0.5, {{ham::Pauli::Y, 0}}}});
  REQUIRE(oracle::kronecker_assemble(y)(0, 1) == cplx(0, -0.5));
}

TEST_CASE("circuit_unitary of small circuits") {
  sim::PostselectedCircuit c(2);
  c.h(0).cnot(0, 1);
  const auto u = oracle::circuit_unitary(c);
  REQUIRE(std::abs(u(0, 0) - M_SQRT1_2) < 1e-15);
  REQUIRE(std::abs(u(3, 0) - M_SQRT1_2) < 1e-15);
  REQUIRE((u.adjoint() * u - Eigen::MatrixXcd::Identity(4, 4)).norm() < 1e-14);
}

TEST_CASE("brute_postselect and majority_dp") {
  const auto r = oracle::brute_postselect({0.1, 0.2, 0.3, 0.4}, 2, {{0, 1}});
  REQUIRE(r.success == Approx(0.7));
  REQUIRE(r.conditional[3] == Approx(0.4 / 0.7));
  REQUIRE(oracle::majority_dp(0.6, 3) == Approx(0.648).margin(1e-15));
}

TEST_CASE("vertex enumeration on the worked envelope example") {
  // Qubits (o, p): p(o1p1) = 0.3, p(o0p1) = 0.3, p(p0) = 0.4.
  const double v = oracle::vertex_enumeration({0.4, 0.3, 0.0, 0.3}, 2, 0, {1}, 1.1, true);
  REQUIRE(v == Approx(0.27273 / (0.27273 + 0.33)).margin(1e-5));
  REQUIRE(oracle::vertex_enumeration({0.4, 0.3, 0.0, 0.3}, 2, 0, {1}, 1.0, true) == Approx(0.5).margin(1e-15));
}
