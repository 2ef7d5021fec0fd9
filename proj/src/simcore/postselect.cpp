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

#include "qpost/simcore/postselect.hpp"

#include <set>
#include <string>

namespace qpost::sim {

namespace {

bool matches(index_t z, std::span<const PostselectCondition> conditions, int n) {
  for (const auto& c : conditions) {
    if (qubit_value(z, c.qubit, n) != c.value) return false;
  }
  return true;
}

void check_conditions(const Distribution& dist, std::span<const PostselectCondition> conditions) {
  std::set<int> seen;
  for (const auto& c : conditions) {
    if (c.qubit < 0 || c.qubit >= dist.n_bits) {
      throw DimensionError("postselection bit " + std::to_string(c.qubit) + " out of range");
    }
    if (c.value != 0 && c.value != 1) throw std::invalid_argument("postselection value must be 0 or 1");
    if (!seen.insert(c.qubit).second) throw std::invalid_argument("duplicate postselection bit");
  }
}

}  // namespace

double event_probability(const Distribution& dist, std::span<const PostselectCondition> conditions) {
  check_conditions(dist, conditions);
  double s = 0.0;
  for (index_t z = 0; z < dist.probs.size(); ++z) {
    if (matches(z, conditions, dist.n_bits)) s += dist.probs[z];
  }
  return s;
}

ConditionalResult postselect(const Distribution& dist,
                             std::span<const PostselectCondition> conditions) {
  dist.check_normalized();
  const double success = event_probability(dist, conditions);
  if (success <= kZeroSuccess) {
    throw PostselectionError("postselection succeeds with probability " + std::to_string(success) +
                             "; the conditional distribution is undefined");
  }
  ConditionalResult out{success, Distribution{dist.n_bits, std::vector<double>(dist.probs.size(), 0.0)}};
  for (index_t z = 0; z < dist.probs.size(); ++z) {
    if (matches(z, conditions, dist.n_bits)) out.conditional.probs[z] = dist.probs[z] / success;
  }
  return out;
}

ConditionalResult postselect(const Distribution& dist, const PostselectedCircuit& circuit) {
  return postselect(dist, circuit.postselections());
}

PostselectedCircuit merge_postselections(const PostselectedCircuit& circuit) {
  const auto& post = circuit.postselections();
  if (post.size() != 2) {
    throw CircuitError("merge_postselections needs exactly two postselection registers, got " +
                       std::to_string(post.size()));
  }
  if (post[0].value != 1 || post[1].value != 1) {
    throw CircuitError("merge_postselections requires both registers to be postselected on 1; "
                       "insert X gates first");
  }
  const int ancilla = circuit.n_qubits();
  PostselectedCircuit merged(circuit.n_qubits() + 1);
  for (const auto& op : circuit.operations()) {
    std::visit([&](const auto& o) { merged.add(o); }, op);
  }
  merged.toffoli(post[0].qubit, post[1].qubit, ancilla);
  if (circuit.output()) merged.set_output(*circuit.output());
  merged.add_postselection(ancilla, 1);
  return merged;
}

QuantumState with_fresh_ancilla(const QuantumState& input) {
  return tensor(input, QuantumState::zero(1));
}

}  // namespace qpost::sim
