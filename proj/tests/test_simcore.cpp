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

#include "qpost/oracles/oracles.hpp"
#include "qpost/simcore/postselect.hpp"
#include "qpost/simcore/random.hpp"
#include "qpost/simcore/simulate.hpp"

using namespace qpost;
using namespace qpost::sim;
using Catch::Approx;

namespace {

PostselectedCircuit bell() {
  PostselectedCircuit c(2);
  c.h(0).cnot(0, 1);
  return c;
}

Eigen::VectorXcd vec(const QuantumState& s) {
  const auto a = s.amplitudes();
  return Eigen::Map<const Eigen::VectorXcd>(a.data(), static_cast<Eigen::Index>(a.size()));
}

}  // namespace

TEST_CASE("state invariants are enforced") {
  REQUIRE_THROWS_AS(QuantumState::pure({1.0, 1.0}), StateError);
  REQUIRE_THROWS_AS(QuantumState::pure({1.0, 0.0, 0.0}), StateError);
  REQUIRE_THROWS_AS(QuantumState::mixed(1, {0.5, 0.0, 0.0, 0.6}), StateError);   // trace
  REQUIRE_THROWS_AS(QuantumState::mixed(1, {0.5, 0.1, 0.2, 0.5}), StateError);   // Hermiticity
  REQUIRE_THROWS_AS(QuantumState::mixed(1, {1.5, 0.0, 0.0, -0.5}), StateError);  // positivity
  REQUIRE_NOTHROW(QuantumState::mixed(1, {0.5, 0.5, 0.5, 0.5}));
}

TEST_CASE("apply_circuit basics") {
  const QuantumState in = QuantumState::basis(2, 2);
  const QuantumState same = apply_circuit(PostselectedCircuit(2), in);
  REQUIRE(std::vector<cplx>(same.amplitudes().begin(), same.amplitudes().end()) ==
          std::vector<cplx>(in.amplitudes().begin(), in.amplitudes().end()));

  PostselectedCircuit h(1);
  h.h(0);
  const auto out = apply_circuit(h, QuantumState::zero(1));
  REQUIRE(out.is_pure());
  REQUIRE(out.amplitudes()[0].real() == Approx(M_SQRT1_2).margin(1e-15));
  REQUIRE(out.amplitudes()[1].real() == Approx(M_SQRT1_2).margin(1e-15));

  REQUIRE_THROWS_AS(apply_circuit(h, QuantumState::zero(2)), DimensionError);
}

TEST_CASE("random circuits match the dense unitary product") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const PostselectedCircuit c = random_circuit(3, 8, rng);
    const QuantumState psi = random_pure_state(3, rng);
    const Eigen::VectorXcd expected = oracle::circuit_unitary(c) * vec(psi);
    const Eigen::VectorXcd got = vec(apply_circuit(c, psi));
    REQUIRE((got - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("mixed states follow U rho U^dag") {
  Rng rng(12);
  const PostselectedCircuit c = random_circuit(3, 10, rng);
  const QuantumState rho = random_mixed_state(3, 3, rng);
  const Eigen::MatrixXcd u = oracle::circuit_unitary(c);
  const Eigen::MatrixXcd expected = u * oracle::density_of(rho) * u.adjoint();
  const Eigen::MatrixXcd got = oracle::density_of(apply_circuit(c, rho));
  REQUIRE((got - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("output distributions") {
  const Distribution none = output_distribution(PostselectedCircuit(2), QuantumState::zero(2));
  REQUIRE(none.probs == std::vector<double>{1.0, 0.0, 0.0, 0.0});

  const Distribution b = output_distribution(bell(), QuantumState::zero(2));
  REQUIRE(b.probs[0] == Approx(0.5).margin(1e-15));
  REQUIRE(b.probs[3] == Approx(0.5).margin(1e-15));
  REQUIRE(b.probs[1] + b.probs[2] < 1e-30);

  PostselectedCircuit ghz(3);
  ghz.h(0).cnot(0, 1).cnot(1, 2);
  const Distribution g = output_distribution(ghz, QuantumState::zero(3));
  const Eigen::VectorXcd amps = oracle::circuit_unitary(ghz).col(0);
  for (std::size_t z = 0; z < 8; ++z) REQUIRE(g.probs[z] == Approx(std::norm(amps(z))).margin(1e-15));
  g.check_normalized();
}

TEST_CASE("postselect examples") {
  const Distribution b = output_distribution(bell(), QuantumState::zero(2));
  const PostselectCondition cond[] = {{0, 1}};
  const ConditionalResult r = postselect(b, cond);
  REQUIRE(r.success_prob == Approx(0.5).margin(1e-15));
  REQUIRE(r.conditional_one(1) == Approx(1.0).margin(1e-15));

  const Distribution uniform{2, {0.25, 0.25, 0.25, 0.25}};
  const ConditionalResult u = postselect(uniform, cond);
  REQUIRE(u.success_prob == 0.5);
  REQUIRE(u.conditional.probs[2] == 0.5);
  REQUIRE(u.conditional.probs[3] == 0.5);

  const Distribution zero{2, {1.0, 0.0, 0.0, 0.0}};
  REQUIRE_THROWS_AS(postselect(zero, cond), PostselectionError);
}

TEST_CASE("postselect matches the brute-force filter") {
  Rng rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Distribution d{4, std::vector<double>(16)};
    double total = 0.0;
    for (auto& p : d.probs) total += p = u(rng);
    for (auto& p : d.probs) p /= total;
    const std::vector<PostselectCondition> conds = {{1, 1}, {3, 0}};
    const ConditionalResult r = postselect(d, conds);
    const oracle::BruteConditional o = oracle::brute_postselect(d.probs, 4, {{1, 1}, {3, 0}});
    REQUIRE(r.success_prob == Approx(o.success).margin(1e-12));
    for (std::size_t z = 0; z < 16; ++z) {
      REQUIRE(r.conditional.probs[z] == Approx(o.conditional[z]).margin(1e-12));
      // Conditioning consistency: success * conditional recovers the filtered mass.
      const bool match = qubit_value(z, 1, 4) == 1 && qubit_value(z, 3, 4) == 0;
      REQUIRE(r.success_prob * r.conditional.probs[z] == Approx(match ? d.probs[z] : 0.0).margin(1e-15));
    }
  }
}

TEST_CASE("merge_postselections") {
  SECTION("registers deterministically 1") {
    PostselectedCircuit c(3);
    c.x(0).x(1).h(2).set_output(2).add_postselection(0).add_postselection(1);
    const auto m = merge_postselections(c);
    const auto r = postselect(output_distribution(m, with_fresh_ancilla(QuantumState::zero(3))), m);
    REQUIRE(r.success_prob == Approx(1.0).margin(1e-15));
    REQUIRE(r.conditional_one(2) == Approx(0.5).margin(1e-15));
  }
  SECTION("Bell halves") {
    PostselectedCircuit c = bell();
    c.add_postselection(0).add_postselection(1);
    const auto m = merge_postselections(c);
    const auto joint = postselect(output_distribution(c, QuantumState::zero(2)), c);
    const auto single = postselect(output_distribution(m, with_fresh_ancilla(QuantumState::zero(2))), m);
    REQUIRE(single.success_prob == Approx(0.5).margin(1e-15));
    REQUIRE(single.success_prob == Approx(joint.success_prob).margin(1e-15));
  }
  SECTION("random circuits up to 6 qubits") {
    Rng rng(14);
    int checked = 0;
    for (int trial = 0; trial < 60 && checked < 30; ++trial) {
      const int n = 3 + trial % 4;
      PostselectedCircuit c = random_circuit(n, 15, rng);
      c.add_postselection(0).add_postselection(n - 1).set_output(1);
      const auto d = output_distribution(c, QuantumState::zero(n));
      if (event_probability(d, c.postselections()) < 1e-9) continue;
      ++checked;
      const auto joint = postselect(d, c);
      const auto m = merge_postselections(c);
      const auto single = postselect(output_distribution(m, with_fresh_ancilla(QuantumState::zero(n))), m);
      REQUIRE(std::abs(single.success_prob - joint.success_prob) <= 1e-12);
      for (std::size_t z = 0; z < joint.conditional.probs.size(); ++z) {
        REQUIRE(std::abs(single.conditional.probs[2 * z + 1] - joint.conditional.probs[z]) <= 1e-12);
        REQUIRE(single.conditional.probs[2 * z] == 0.0);
      }
    }
    REQUIRE(checked >= 25);
  }
  SECTION("rejects conditions on 0 and wrong counts") {
    PostselectedCircuit c(3);
    c.add_postselection(0, 0).add_postselection(1);
    REQUIRE_THROWS_AS(merge_postselections(c), CircuitError);
    PostselectedCircuit one(2);
    one.add_postselection(0);
    REQUIRE_THROWS_AS(merge_postselections(one), CircuitError);
  }
}

TEST_CASE("tensor_power and fidelity") {
  Rng rng(15);
  const QuantumState psi = random_pure_state(2, rng);
  const auto one = tensor_power(psi, 1);
  REQUIRE(fidelity(one, psi) == Approx(1.0).margin(1e-12));

  const auto zeros = tensor_power(QuantumState::zero(1), 3);
  REQUIRE(zeros.n_qubits() == 3);
  REQUIRE(zeros.amplitudes()[0] == cplx{1.0});

  // Per-copy fidelity 0.9, two copies.
  const QuantumState g = QuantumState::zero(1);
  const QuantumState a = QuantumState::pure({std::sqrt(0.9), std::sqrt(0.1)});
  REQUIRE(fidelity(tensor_power(a, 2), tensor_power(g, 2)) == Approx(0.81).margin(1e-12));

  // Tensor fidelity law on mixed states, m <= 4.
  const QuantumState rho = random_mixed_state(1, 2, rng);
  const QuantumState target = random_pure_state(1, rng);
  for (int m = 1; m <= 4; ++m) {
    REQUIRE(fidelity(tensor_power(rho, m), tensor_power(target, m)) ==
            Approx(std::pow(fidelity(rho, target), m)).margin(1e-10));
  }
  REQUIRE_THROWS_AS(tensor_power(psi, 11), CapacityError);  // 22 qubits
  REQUIRE_THROWS_AS(tensor_power(psi, 3, 4), CapacityError);
}

TEST_CASE("fidelity examples") {
  const QuantumState g = QuantumState::basis(1, 0), e = QuantumState::basis(1, 1);
  REQUIRE(fidelity(g, g) == 1.0);
  REQUIRE(fidelity(e, g) == 0.0);
  const double w[] = {0.7, 0.3};
  const QuantumState parts[] = {g, e};
  REQUIRE(fidelity(QuantumState::mixture(w, parts), g) == Approx(0.7).margin(1e-15));
}

TEST_CASE("unitarity and purity preservation on random states") {
  Rng rng(16);
  for (GateKind k : {GateKind::H, GateKind::S, GateKind::T, GateKind::X, GateKind::CNOT, GateKind::TOFFOLI}) {
    PostselectedCircuit c(4);
    Gate g{k, {}};
    for (int j = 0; j < arity(k); ++j) g.qubits[j] = 3 - j;
    c.add(g);
    for (int i = 0; i < 100; ++i) {
      const QuantumState out = apply_circuit(c, random_pure_state(4, rng));
      REQUIRE(out.is_pure());
      double s = 0.0;
      for (auto a : out.amplitudes()) s += std::norm(a);
      REQUIRE(std::abs(s - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("serial and parallel policies agree on a 16-qubit circuit") {
  Rng rng(17);
  const PostselectedCircuit c = random_circuit(16, 60, rng);
  const auto input = QuantumState::zero(16);
  const Distribution a = output_distribution(c, input, kernels::Policy::Serial);
  const Distribution b = output_distribution(c, input, kernels::Policy::Parallel);
  REQUIRE(a.probs == b.probs);
}

TEST_CASE("marginal sums out the remaining bits") {
  const Distribution b = output_distribution(bell(), QuantumState::zero(2));
  const int q[] = {1};
  const Distribution m = marginal(b, q);
  REQUIRE(m.n_bits == 1);
  REQUIRE(m.probs[1] == Approx(0.5).margin(1e-15));
}
