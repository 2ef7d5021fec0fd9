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

#include <string>
#include <vector>

#include "qpost/hamlib/hamiltonian.hpp"
#include "qpost/simcore/circuit.hpp"
#include "qpost/simcore/random.hpp"
#include "qpost/simcore/state.hpp"
#include "qpost/theorems/config.hpp"
#include "qpost/theorems/report.hpp"

// Harness for propagating an approximate ground state through a postselected
// verifier: the exact branch runs U_x on |0^m>|g>^{m'}, the approximate branch
// on |0^m> rho_approx^{m'}, and the two are compared against the
// 2 sqrt(1 - F^{m'}) propagation bound and the resulting conditional bounds.
namespace qpost::thm {

enum class WitnessMode { Pure, Mixed };
std::string_view to_string(WitnessMode m);

/// Pure: sqrt(F)|g> + sqrt(1-F)|d>. Mixed: F|g><g| + (1-F)|d><d|.
/// Throws StateError unless <g|d> = 0 within 1e-10.
sim::QuantumState approx_state(const sim::QuantumState& g, double F, const sim::QuantumState& direction,
                               WitnessMode mode);

/// Per-copy fidelity (1 - kappa 2^{-4k})^{1/m'}, so the joint fidelity is
/// 1 - kappa 2^{-4k}.
double fidelity_schedule(int k, int m_prime, double kappa = 1.0);

/// Synthetic verifier U_x. Ancillas occupy qubits [0, m): per copy an index
/// register and an accept qubit of an energy measurement, then the output
/// qubit when m' > 1 (majority of the accept bits), then k Hadamard qubits
/// whose AND is the postselection qubit, so Pr[p = 1] = 2^-k for every input.
/// Copy j of the witness occupies [m + j n, m + (j+1) n).
struct VerifierCircuit {
  sim::PostselectedCircuit circuit{1};
  int n = 0;
  int m = 0;
  int m_prime = 1;
  int k = 1;
  int output = 0;
  int postselect = 0;
  int n_total() const { return circuit.n_qubits(); }
};

/// m' must be 1 or 3.
VerifierCircuit build_verifier(const ham::LocalHamiltonian& h, int m_prime, int k);

/// |0^m> (x) witness^{(x) m'}.
sim::QuantumState verifier_input(const VerifierCircuit& v, const sim::QuantumState& witness);

struct BranchProbabilities {
  double success = 0.0;      // Pr[p = 1]
  double joint = 0.0;        // Pr[o = 1, p = 1]
  double conditional = 0.0;  // Pr[o = 1 | p = 1]
};

/// Throws PostselectionError when Pr[p = 1] vanishes.
BranchProbabilities run_branch(const VerifierCircuit& v, const sim::QuantumState& witness);

struct PairResult {
  BranchProbabilities exact;
  BranchProbabilities approx;
};

PairResult run_pair(const VerifierCircuit& v, const sim::QuantumState& ground, const sim::QuantumState& approx);

struct PropagationCheck {
  double eps = 0.0;    // 1 - F^{m'}
  double bound = 0.0;  // 2 sqrt(eps), the asserted bound
  double tight = 0.0;  // sqrt(eps), recorded only
  double d_joint = 0.0;
  double d_post = 0.0;
  bool joint_ok = false;
  bool post_ok = false;
};

PropagationCheck check_propagation(const PairResult& pair, double joint_fidelity);

/// Closed forms of the conditional bounds at joint fidelity F^{m'}.
struct Theorem1Bounds {
  double eps = 0.0;
  double root = 0.0;  // sqrt(eps)
  double yes_deviation = 0.0;
  double yes_lb = 0.0;
  double no_denominator = 0.0;  // 2^-k - 2 sqrt(eps)
  double no_deviation = 0.0;
  double no_ub = 0.0;
  bool no_vacuous = false;
};

Theorem1Bounds theorem1_bounds(double delta, int k, double joint_fidelity);

enum class Side { Yes, No };
std::string_view to_string(Side s);

/// Displayed chains for the given side, the success-probability floor, and
/// the premise Pr[p=1] >= 2^-k. `worst` holds the exact branch and the
/// worst approximate branch over the tested directions.
std::vector<InequalityRow> theorem1_verdict(const PairResult& worst, Side side, double delta, int k,
                                            double joint_fidelity, int m_prime, double r);

/// Orthogonal directions to the ground state: excited eigenvectors of H
/// first, then seeded random orthogonal states, `count` in total.
std::vector<sim::QuantumState> perturbation_directions(const ham::LocalHamiltonian& h,
                                                       const sim::QuantumState& ground, int count, sim::Rng& rng);

/// Joint fidelities swept: 1, 1-2^-4, 1-2^-8, 1-2^-12, the schedule value and
/// (1-2^-s)^{m'} when s is set; descending and distinct.
std::vector<double> joint_fidelity_grid(int k, int m_prime, double kappa, const std::optional<int>& s);

struct SweepRow {
  WitnessMode mode;
  double fidelity;  // per copy
  double joint;     // F^{m'}
  int direction;
  PropagationCheck prop;
  Theorem1Bounds bounds;
  PairResult pair;
};

struct Theorem1Result {
  ExperimentReport report;
  std::vector<SweepRow> sweep;
  Side side = Side::Yes;
  double delta = 0.0;
};

Theorem1Result run_theorem1(const ExperimentConfig& cfg);

std::string sweep_csv(const std::vector<SweepRow>& sweep);

}  // namespace qpost::thm
