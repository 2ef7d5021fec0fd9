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

#include "qpost/verifier/energy_verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace qpost::verify {

GapParameters make_gap_parameters(int t, double b) {
  if (t < 1) throw VerifierError("term count t must be positive");
  if (!(b > 0.0) || b > 2.0 * t) {
    throw VerifierError("gap parameter b = " + std::to_string(b) + " must satisfy 0 < b <= 2t");
  }
  GapParameters gp;
  gp.t = t;
  gp.a = 0.0;
  gp.b = b;
  gp.b_prime = b / (2.0 * t);
  gp.threshold_eps = gp.b_prime / (6.0 * (1.0 + gp.b_prime));
  return gp;
}

GapParameters gap_parameters_from_b_prime(int t, double b_prime) {
  return make_gap_parameters(t, 2.0 * t * b_prime);
}

Thresholds decision_thresholds(const GapParameters& gp) {
  return {0.5 + gp.threshold_eps, 0.5 - gp.threshold_eps};
}

Thresholds sharp_thresholds(const GapParameters& gp) {
  const double e = gp.b_prime / (2.0 * (1.0 + gp.b_prime));
  return {0.5 + e, 0.5 - e};
}

double accept_probability(const ham::ScaledHamiltonian& scaled, const sim::QuantumState& state) {
  if (state.n_qubits() != scaled.n_qubits()) {
    throw sim::DimensionError("accept_probability: state has " + std::to_string(state.n_qubits()) +
                              " qubits, Hamiltonian has " + std::to_string(scaled.n_qubits()));
  }
  return 1.0 - scaled.energy(state) / scaled.t;
}

double dilute(double p_measure, double b_prime) {
  if (!(b_prime > 0.0)) throw VerifierError("dilution needs b' > 0");
  return b_prime / (1.0 + b_prime) + p_measure / (1.0 + b_prime);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Accept:
      return "ACCEPT";
    case Verdict::Reject:
      return "REJECT";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

VerificationReport verify_instance(const ham::PromiseInstance& inst, const sim::QuantumState& witness) {
  if (inst.a != 0.0) throw VerifierError("the energy verifier handles instances with a = 0 only");
  const auto& h = inst.hamiltonian;
  const ham::ScaledHamiltonian scaled = ham::scale_shift(h);
  const ham::Spectrum spec = scaled.diagonalize();

  VerificationReport r;
  r.gap = make_gap_parameters(h.term_count(), inst.b);
  r.scaled_ground_energy = spec.values(0);
  r.ground_energy = 2.0 * spec.values(0) - h.term_count();
  r.label = ham::promise_label(inst, r.ground_energy);
  if (r.label == ham::PromiseLabel::OutsidePromise) {
    throw VerifierError("instance is outside the promise (E_min = " + std::to_string(r.ground_energy) +
                        ")");
  }
  r.thresholds = decision_thresholds(r.gap);
  r.sharp = sharp_thresholds(r.gap);
  r.accept_prob = accept_probability(scaled, witness);
  r.diluted_prob = dilute(r.accept_prob, r.gap.b_prime);
  // Acceptance is affine and decreasing in energy, so the best witness is the
  // minimum-energy eigenstate.
  r.best_witness_diluted = dilute(1.0 - spec.values(0) / scaled.t, r.gap.b_prime);

  if (r.label == ham::PromiseLabel::Yes) {
    r.margin = r.diluted_prob - r.thresholds.yes_floor;
    r.verdict = r.diluted_prob >= r.thresholds.yes_floor ? Verdict::Accept : Verdict::Inconclusive;
    r.consistent = r.verdict == Verdict::Accept;
  } else {
    r.margin = r.thresholds.no_ceiling - r.best_witness_diluted;
    r.verdict = r.best_witness_diluted <= r.thresholds.no_ceiling ? Verdict::Reject : Verdict::Inconclusive;
    r.consistent = r.verdict == Verdict::Reject;
  }
  return r;
}

double amplify_majority(double p, int copies) {
  if (copies < 1 || copies % 2 == 0) throw VerifierError("majority vote needs an odd number of copies");
  if (p < 0.0 || p > 1.0) throw VerifierError("probability out of [0, 1]");
  if (copies > 61) throw VerifierError("majority vote supports at most 61 copies");
  double total = 0.0;
  for (int j = copies / 2 + 1; j <= copies; ++j) {
    std::uint64_t binom = 1;  // exact C(copies, j)
    for (int i = 1; i <= copies - j; ++i) binom = binom * static_cast<std::uint64_t>(j + i) / i;
    total += static_cast<double>(binom) * std::pow(p, j) * std::pow(1.0 - p, copies - j);
  }
  return total;
}

}  // namespace qpost::verify
