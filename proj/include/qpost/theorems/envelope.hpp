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

#include <cstdint>
#include <string>
#include <vector>

#include "qpost/simcore/simulate.hpp"
#include "qpost/theorems/config.hpp"
#include "qpost/theorems/report.hpp"

// Multiplicative-error envelopes. A distribution q lies in the envelope of p
// with factor c when p_z / c <= q_z <= c p_z for every outcome z. The worst
// conditional Pr_q[o = 1 | conditions] over the envelope is a linear-fractional
// program over a box intersected with the simplex.
namespace qpost::thm {

/// Pr[output = 1 | every condition qubit = 1].
struct ConditionalQuery {
  int output = 0;
  std::vector<int> conditions;
};

/// Numerator and denominator masses of the query under `q`.
struct QueryMasses {
  double numerator = 0.0;
  double denominator = 0.0;
};

QueryMasses query_masses(const sim::Distribution& q, const ConditionalQuery& query);
/// Throws PostselectionError when the conditioning event has no mass.
double conditional_value(const sim::Distribution& q, const ConditionalQuery& query);

enum class Sense { Minimize, Maximize };
enum class EnvelopeMethod { Dinkelbach, Bisection };
std::string_view to_string(Sense s);

struct EnvelopeResult {
  sim::Distribution q;
  double value = 0.0;
  Sense sense = Sense::Minimize;
  int iterations = 0;
};

/// Optimizes the query over the c-envelope of p. Dinkelbach iterates
/// lambda <- N(q)/D(q) with q minimizing (or maximizing) N - lambda D; each
/// inner problem is a continuous knapsack solved greedily. Bisection on lambda
/// (tolerance 1e-13) is the alternative method.
EnvelopeResult envelope_optimize(const sim::Distribution& p, double c, const ConditionalQuery& query, Sense sense,
                                 EnvelopeMethod method = EnvelopeMethod::Dinkelbach);

/// Worst violation of p_z/c <= q_z <= c p_z (nonnegative when inside).
double envelope_margin(const sim::Distribution& p, const sim::Distribution& q, double c);

struct SubsetCheck {
  bool pass = true;
  int checked = 0;
  double worst_margin = 0.0;
  /// Description of the subset attaining the worst margin.
  std::string worst_subset;
};

/// (sum_S p)/c <= sum_S q <= c sum_S p within 1e-12 for the empty set, the full
/// set, every singleton and `num_subsets` seeded random subsets.
SubsetCheck subset_check(const sim::Distribution& p, const sim::Distribution& q, double c, int num_subsets,
                         std::uint64_t seed);

/// A copy of `q` pushed outside the envelope on its largest outcome, for
/// negative controls.
sim::Distribution inject_violation(const sim::Distribution& p, const sim::Distribution& q, double c);

struct Theorem2ClosedForms {
  double c_squared = 0.0;
  double regime_limit = 0.0;  // 1 + 2 delta
  bool in_regime = false;
  bool boundary = false;      // c^2 == 1 + 2 delta
  bool precondition_ok = false;  // 1 <= c < sqrt(2)
  double yes_bound = 0.0;     // (1/2 + delta) / c^2
  double no_bound = 0.0;      // c^2 (1/2 - delta)
  double no_target = 0.0;     // 1/2 - 2 delta^2
};

Theorem2ClosedForms theorem2_closed_forms(double c, double delta);

enum class Theorem2Verdict { Holds, Fails, OutsideRegime };
std::string_view to_string(Theorem2Verdict v);

struct Theorem2Outcome {
  Theorem2Verdict verdict = Theorem2Verdict::Holds;
  Theorem2ClosedForms forms;
  std::vector<InequalityRow> rows;
};

/// Envelope verdict at one c for a base conditional on the given side.
/// `worst_min` / `worst_max` are the optimized envelope extremes.
Theorem2Outcome theorem2_verdict(double c, double delta, bool yes_side, double base, double worst_min,
                                 double worst_max);

/// Synthetic circuit Q whose output distribution, given its own success flag
/// (the last qubit), is q; the flag reads 1 with probability 2^-k'. The
/// conditions are the query's conditions plus the flag.
sim::PostselectedCircuit envelope_circuit(const sim::Distribution& q, const ConditionalQuery& query, int k_prime);

struct MergeComparison {
  double joint_success = 0.0;
  double joint_conditional = 0.0;
  double merged_success = 0.0;
  double merged_conditional = 0.0;
};

/// Conditions envelope_circuit(q) on both registers, then on the single
/// Toffoli-merged register.
MergeComparison compare_merge(const sim::PostselectedCircuit& q_circuit);

struct Theorem2Input {
  sim::Distribution base;
  ConditionalQuery query;
  double delta = 0.0;
  bool yes_side = true;
};

/// The Theorem 2 suite on one base distribution: the c list {1, 1.05, 1.1,
/// 1.3} plus the configured c, sandwich, subset, regime and monotonicity rows,
/// and the merge comparison at the configured c (default 1.1).
ExperimentReport run_theorem2(const Theorem2Input& in, const ExperimentConfig& cfg);

/// Builds the base distribution from the configured instance's exact branch.
ExperimentReport run_theorem2(const ExperimentConfig& cfg);

}  // namespace qpost::thm
