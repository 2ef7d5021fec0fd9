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

#include <span>

#include "qpost/simcore/simulate.hpp"

namespace qpost::sim {

/// Success probabilities at or below this are treated as an empty
/// postselection event.
inline constexpr double kZeroSuccess = 1e-15;

/// Raised when the postselection event has probability zero, i.e. the
/// conditional distribution is undefined.
class PostselectionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ConditionalResult {
  double success_prob = 0.0;
  /// Matching outcomes renormalized; non-matching outcomes are zero.
  Distribution conditional;

  /// Pr[qubit = 1 | conditions].
  double conditional_one(int qubit) const { return conditional.marginal_one(qubit); }
};

ConditionalResult postselect(const Distribution& dist,
                             std::span<const PostselectCondition> conditions);

/// Postselects on the circuit's own conditions.
ConditionalResult postselect(const Distribution& dist, const PostselectedCircuit& circuit);

/// Joint probability of all conditions, without the zero-success check.
double event_probability(const Distribution& dist, std::span<const PostselectCondition> conditions);

/// Replaces two "= 1" postselection conditions by one: a fresh ancilla is
/// appended as the last qubit, a Toffoli copies the AND of the two registers
/// onto it, and the ancilla becomes the sole postselection register.
PostselectedCircuit merge_postselections(const PostselectedCircuit& circuit);

/// input (x) |0>, the input for a circuit returned by merge_postselections.
QuantumState with_fresh_ancilla(const QuantumState& input);

}  // namespace qpost::sim
