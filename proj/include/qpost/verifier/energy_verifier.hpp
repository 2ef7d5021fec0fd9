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

#include <string_view>

#include "qpost/hamlib/spectrum.hpp"

namespace qpost::verify {

class VerifierError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Promise-gap bookkeeping for an instance with a = 0.
struct GapParameters {
  int t = 0;
  double a = 0.0;
  double b = 0.0;
  /// b / (2t), in (0, 1].
  double b_prime = 0.0;
  /// b' / [6 (1 + b')], in (0, 1/12].
  double threshold_eps = 0.0;
};

/// Throws VerifierError unless t >= 1 and 0 < b <= 2t.
GapParameters make_gap_parameters(int t, double b);
GapParameters gap_parameters_from_b_prime(int t, double b_prime);

struct Thresholds {
  double yes_floor;
  double no_ceiling;
};

/// (1/2 + eps, 1/2 - eps) with eps = b'/[6(1+b')].
Thresholds decision_thresholds(const GapParameters& gp);

/// Thresholds this realization actually guarantees: 1/2 +- b'/[2(1+b')].
Thresholds sharp_thresholds(const GapParameters& gp);

/// 1 - <H'>/t: acceptance of the term-sampling energy measurement.
double accept_probability(const ham::ScaledHamiltonian& scaled, const sim::QuantumState& state);

/// Runs the measurement with probability 1/(1+b'), otherwise accepts:
/// b'/(1+b') + p/(1+b').
double dilute(double p_measure, double b_prime);

enum class Verdict { Accept, Reject, Inconclusive };
std::string_view to_string(Verdict v);

struct VerificationReport {
  GapParameters gap;
  ham::PromiseLabel label = ham::PromiseLabel::OutsidePromise;
  double ground_energy = 0.0;
  double scaled_ground_energy = 0.0;
  double accept_prob = 0.0;
  double diluted_prob = 0.0;
  /// max over all witnesses of the diluted acceptance, attained on the
  /// ground state of H'.
  double best_witness_diluted = 0.0;
  Thresholds thresholds{};
  Thresholds sharp{};
  Verdict verdict = Verdict::Inconclusive;
  /// Distance from the decision threshold on the side given by the label
  /// (YES: diluted - yes_floor; NO: no_ceiling - best_witness_diluted).
  double margin = 0.0;
  /// True when the verdict agrees with the promise label.
  bool consistent = false;
};

/// Verifies a promise instance with a = 0 against `witness`. YES instances
/// are judged on the witness, NO instances on the best possible witness.
/// Throws VerifierError when a != 0 or the instance is outside the promise.
VerificationReport verify_instance(const ham::PromiseInstance& inst, const sim::QuantumState& witness);

/// Majority vote over `copies` independent runs that each accept with
/// probability p. `copies` must be odd.
double amplify_majority(double p, int copies);

}  // namespace qpost::verify
