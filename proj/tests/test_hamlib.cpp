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

#include <cmath>

#include "qpost/hamlib/hamiltonian_io.hpp"
#include "qpost/hamlib/random_hamiltonian.hpp"
#include "qpost/hamlib/spectrum.hpp"
#include "qpost/oracles/oracles.hpp"
#include "qpost/simcore/random.hpp"

using namespace qpost;
using namespace qpost::ham;
using Catch::Approx;

TEST_CASE("parse_hamiltonian examples") {
  const auto z = parse_hamiltonian("1.0 Z@0\n");
  REQUIRE(z.n_qubits() == 1);
  REQUIRE(z.term_count() == 1);
  REQUIRE(z.terms()[0].factors == std::vector<PauliFactor>{{Pauli::Z, 0}});

  const auto two = parse_hamiltonian("0.5 X@0 X@1\n-0.25 Z@2\n");
  REQUIRE(two.term_count() == 2);
  REQUIRE(two.n_qubits() == 3);

  REQUIRE_THROWS_AS(parse_hamiltonian("0.9 X@0 Y@1 Z@2 Z@3\n"), HamiltonianParseError);
}

TEST_CASE("parse errors name the line and the rule") {
  auto message = [](const char* text) -> std::string {
    try {
      parse_hamiltonian(text);
    } catch (const HamiltonianParseError& e) {
      return e.what();
    }
    return "";
  };
  REQUIRE_THAT(message("% c\n0.9 X@0 Y@1 Z@2 Z@3\n"), Catch::Matchers::ContainsSubstring("line 2") &&
                                                         Catch::Matchers::ContainsSubstring("3-local"));
  REQUIRE_THAT(message("1.5 Z@0\n"), Catch::Matchers::ContainsSubstring("line 1"));
  REQUIRE_THAT(message("0.5 Z@0 X@0\n"), Catch::Matchers::ContainsSubstring("twice"));
  REQUIRE_THAT(message("0.5 Q@0\n"), Catch::Matchers::ContainsSubstring("Pauli"));
  REQUIRE_THAT(message("abc Z@0\n"), Catch::Matchers::ContainsSubstring("coefficient"));
  REQUIRE_THAT(message("#qubits 1\n0.5 Z@3\n"), Catch::Matchers::ContainsSubstring("line 2"));
  REQUIRE_THAT(message("% only a comment\n"), Catch::Matchers::ContainsSubstring("no terms"));
}

TEST_CASE("assemble examples") {
  const auto z = assemble(parse_hamiltonian("1.0 Z@0\n"));
  REQUIRE(z(0, 0) == cplx{1.0});
  REQUIRE(z(1, 1) == cplx{-1.0});
  REQUIRE(z(0, 1) == cplx{0.0});

  const auto x = assemble(parse_hamiltonian("#qubits 2\n0.5 X@0\n"));
  // 0.5 X (x) I: qubit 0 is the high bit.
  REQUIRE(x(0, 2) == cplx{0.5});
  REQUIRE(x(1, 3) == cplx{0.5});
  REQUIRE(x(0, 1) == cplx{0.0});

  sim::Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = random_local_hamiltonian(3, 5, rng);
    const Eigen::MatrixXcd m = assemble(h);
    REQUIRE((m - oracle::kronecker_assemble(h)).cwiseAbs().maxCoeff() <= 1e-13);
    REQUIRE((m - m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  }
  REQUIRE_THROWS_AS(assemble(parse_hamiltonian("#qubits 13\n1.0 Z@0\n")), sim::CapacityError);
}

TEST_CASE("apply and expectation agree with the dense matrix") {
  sim::Rng rng(32);
  const auto h = random_local_hamiltonian(4, 6, rng);
  const auto psi = sim::random_pure_state(4, rng);
  const auto hp = apply(h, psi.amplitudes());
  const Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(psi.amplitudes().data(), 16);
  const Eigen::VectorXcd expected = oracle::kronecker_assemble(h) * v;
  for (int i = 0; i < 16; ++i) REQUIRE(std::abs(hp[i] - expected(i)) < 1e-13);
  const auto rho = sim::random_mixed_state(4, 3, rng);
  const double e = (oracle::kronecker_assemble(h) * oracle::density_of(rho)).trace().real();
  REQUIRE(expectation(h, rho) == Approx(e).margin(1e-12));
}

TEST_CASE("ground examples") {
  const auto z = ground(parse_hamiltonian("1.0 Z@0\n"));
  REQUIRE(z.ground_energy == Approx(-1.0).margin(1e-12));
  REQUIRE(std::abs(z.ground_state.amplitudes()[1]) == Approx(1.0).margin(1e-12));

  const auto x = ground(parse_hamiltonian("-1.0 X@0\n"));
  REQUIRE(x.ground_energy == Approx(-1.0).margin(1e-12));
  // Canonical phase: first nonzero amplitude real positive.
  REQUIRE(x.ground_state.amplitudes()[0].real() == Approx(M_SQRT1_2).margin(1e-12));
  REQUIRE(x.ground_state.amplitudes()[1].real() == Approx(M_SQRT1_2).margin(1e-12));

  const auto h = parse_hamiltonian("-1.0 Z@0 Z@1\n-0.5 X@0\n");
  const auto sd = ground(h);
  const auto es = oracle::jacobi_hermitian(oracle::kronecker_assemble(h));
  REQUIRE(sd.ground_energy == Approx(es.values[0]).margin(1e-9));
  REQUIRE(sd.ground_energy == Approx(-std::sqrt(1.25)).margin(1e-12));
  // Z@1 is conserved, so the ground space is two-fold: check membership.
  const Eigen::VectorXcd g = Eigen::Map<const Eigen::VectorXcd>(sd.ground_state.amplitudes().data(), 4);
  REQUIRE(sd.degenerate);
  REQUIRE((oracle::kronecker_assemble(h) * g - es.values[0] * g).norm() <= 1e-9);

  const auto nd = parse_hamiltonian("-1.0 Z@0 Z@1\n-0.5 X@0\n0.3 Z@1\n");
  const auto sn = ground(nd);
  const auto en = oracle::jacobi_hermitian(oracle::kronecker_assemble(nd));
  const Eigen::VectorXcd gn = Eigen::Map<const Eigen::VectorXcd>(sn.ground_state.amplitudes().data(), 4);
  REQUIRE_FALSE(sn.degenerate);
  REQUIRE(sn.ground_energy == Approx(en.values[0]).margin(1e-9));
  REQUIRE(std::norm(en.vectors.col(0).dot(gn)) >= 1.0 - 1e-9);
  REQUIRE(sn.spectral_gap == Approx(en.values[1] - en.values[0]).margin(1e-9));
}

TEST_CASE("degenerate ground spaces are flagged and deterministic") {
  const auto h = parse_hamiltonian("#qubits 2\n1.0 Z@0\n");
  const auto a = ground(h), b = ground(h);
  REQUIRE(a.degenerate);
  REQUIRE(a.spectral_gap < kDegeneracyTolerance);
  REQUIRE(std::vector<cplx>(a.ground_state.amplitudes().begin(), a.ground_state.amplitudes().end()) ==
          std::vector<cplx>(b.ground_state.amplitudes().begin(), b.ground_state.amplitudes().end()));
  // The representative lies in the ground space.
  REQUIRE(expectation(h, a.ground_state) == Approx(-1.0).margin(1e-12));
}

TEST_CASE("scale_shift") {
  const auto z = scale_shift(parse_hamiltonian("1.0 Z@0\n"));
  const auto s = z.diagonalize();
  REQUIRE(s.values(0) == Approx(0.0).margin(1e-15));
  REQUIRE(s.values(1) == Approx(1.0).margin(1e-15));
  REQUIRE(std::abs(s.vectors(1, 0)) == Approx(1.0).margin(1e-12));
  REQUIRE(z.offset == 0.5);
  REQUIRE(z.halved.terms()[0].coefficient == 0.5);

  sim::Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = random_local_hamiltonian(3, 1 + trial % 8, rng);
    const int t = h.term_count();
    const auto sc = scale_shift(h);
    const auto base = oracle::jacobi_hermitian(oracle::kronecker_assemble(h));
    const auto es = oracle::jacobi_hermitian(sc.assemble());
    REQUIRE(es.values.front() >= -1e-10);
    REQUIRE(es.values.back() <= t + 1e-10);
    REQUIRE(sc.diagonalize().values(0) == Approx((base.values[0] + t) / 2.0).margin(1e-10));
    if (base.values[1] - base.values[0] > 1e-6) {
      REQUIRE(std::norm(base.vectors.col(0).dot(es.vectors.col(0))) == Approx(1.0).margin(1e-9));
    }
    // Global norm bound |E| <= t.
    REQUIRE(std::max(std::abs(base.values.front()), std::abs(base.values.back())) <= t + 1e-10);
  }
}

TEST_CASE("promise_label") {
  const auto z = parse_hamiltonian("1.0 Z@0\n");
  REQUIRE(promise_label({z, -1.0, 0.0}) == PromiseLabel::Yes);
  // Identity term lifts E_min to 1.
  const auto lifted = parse_hamiltonian("1.0\n1.0\n1.0 Z@0\n");
  REQUIRE(ground(lifted).ground_energy == Approx(1.0).margin(1e-12));
  REQUIRE(promise_label({lifted, 0.0, 1.0}) == PromiseLabel::No);

  sim::Rng rng(34);
  const auto h = random_local_hamiltonian(3, 4, rng);
  const double e = oracle::jacobi_hermitian(oracle::kronecker_assemble(h)).values[0];
  REQUIRE(promise_label({h, e - 0.1, e + 0.1}) == PromiseLabel::OutsidePromise);
  REQUIRE_THROWS_AS(promise_label({h, 1.0, 1.0}), HamiltonianError);
}

TEST_CASE("norm bound: |coefficient| equals the term norm") {
  sim::Rng rng(35);
  const auto h = random_local_hamiltonian(3, 8, rng);
  for (const auto& term : h.terms()) {
    const LocalHamiltonian single(3, {term});
    const auto es = oracle::jacobi_hermitian(assemble(single));
    REQUIRE(std::max(std::abs(es.values.front()), std::abs(es.values.back())) ==
            Approx(std::abs(term.coefficient)).margin(1e-12));
    REQUIRE(std::abs(term.coefficient) <= 1.0);
  }
}

TEST_CASE("format and parse round-trip on canonical form") {
  sim::Rng rng(36);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = canonical(random_local_hamiltonian(5, 6, rng));
    REQUIRE(parse_hamiltonian(format_hamiltonian(h)) == h);
  }
}
