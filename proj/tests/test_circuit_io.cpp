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

#include "qpost/simcore/circuit_io.hpp"
#include "qpost/simcore/postselect.hpp"
#include "qpost/simcore/random.hpp"
#include "qpost/simcore/simulate.hpp"
#include "qpost/theorems/instances.hpp"

using namespace qpost::sim;

TEST_CASE("parse a full circuit") {
  const auto c = parse_circuit(
      "% comment line\n"
      "#qubits 3\n"
      "#output 2\n"
      "#postselect 0=1\n"
      "H 0\n"
      "CNOT 0 1   % trailing comment\n"
      "TOFFOLI 0 1 2\n"
      "S 1\nT 2\nX 0\n");
  REQUIRE(c.n_qubits() == 3);
  REQUIRE(c.output() == 2);
  REQUIRE(c.postselections() == std::vector<PostselectCondition>{{0, 1}});
  REQUIRE(c.gate_count() == 6);
}

TEST_CASE("format and parse round-trip") {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    PostselectedCircuit c = random_circuit(4, 12, rng);
    c.set_output(3).add_postselection(0).add_postselection(1);
    const auto text = format_circuit(c);
    const auto back = parse_circuit(text);
    REQUIRE(format_circuit(back) == text);
    REQUIRE(output_distribution(back, QuantumState::zero(4)).probs ==
            output_distribution(c, QuantumState::zero(4)).probs);
  }
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_circuit(text);
    } catch (const CircuitParseError& e) {
      return e.line();
    }
    return -1;
  };
  REQUIRE(line_of("H 0\n") == 1);                           // gate before #qubits
  REQUIRE(line_of("#qubits 2\nFOO 0\n") == 2);              // unknown gate
  REQUIRE(line_of("#qubits 2\nCNOT 0 0\n") == 2);           // repeated qubit
  REQUIRE(line_of("#qubits 2\n\nH 5\n") == 3);              // out of range
  REQUIRE(line_of("#qubits 2\n#postselect 0=0\n") == 2);    // only =1 expressible
  REQUIRE(line_of("#qubits 2\nCNOT 0\n") == 2);             // arity
  REQUIRE(line_of("#qubits 2\n#output 0\n#postselect 0=1\n") > 0);  // o in p
}

TEST_CASE("shipped circuits parse and behave") {
  const std::string dir = qpost::thm::data_directory() + "/circuits/";
  const auto bell = load_circuit(dir + "bell.qc");
  REQUIRE(output_distribution(bell, QuantumState::zero(2)).marginal_one(1) == Catch::Approx(0.5));
  const auto ghz = load_circuit(dir + "ghz_post.qc");
  const auto r = postselect(output_distribution(ghz, QuantumState::zero(3)), ghz);
  REQUIRE(r.success_prob == Catch::Approx(0.5));
  REQUIRE(r.conditional_one(2) == Catch::Approx(1.0));
  const auto tp = load_circuit(dir + "t_phase.qc");
  REQUIRE(postselect(output_distribution(tp, QuantumState::zero(2)), tp).conditional_one(0) ==
          Catch::Approx(1.0).margin(1e-12));
  REQUIRE_THROWS(load_circuit(dir + "missing.qc"));
}
