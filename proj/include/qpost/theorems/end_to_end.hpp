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

#include "qpost/theorems/config.hpp"
#include "qpost/theorems/fidelity_propagation.hpp"
#include "qpost/theorems/report.hpp"

namespace qpost::thm {

/// U'_x: per copy a flag qubit and a preparation block producing
/// sqrt(r)|1>|psi> + sqrt(1-r)|0>|0^n>, the AND of the flags as p'', then U_x.
/// Postselects on p'' and on U_x's p. Layout: flags, flag-AND ancillas, then the
/// qubits of U_x shifted by `offset`.
struct CompositeCircuit {
  sim::PostselectedCircuit circuit{1};
  int offset = 0;
  int flag_register = 0;  // p''
};

CompositeCircuit build_composite(const VerifierCircuit& v, const sim::QuantumState& psi, double r);

struct CompositeResult {
  double success = 0.0;      // Pr[p'' = 1, p = 1]
  double conditional = 0.0;  // Pr[o = 1 | p'' = 1, p = 1]
  double merged_success = 0.0;
  double merged_conditional = 0.0;
};

CompositeResult run_composite(const CompositeCircuit& c);

/// Full pipeline on the configured instance: Theorem 1 sweep, the composite
/// circuit at the schedule fidelity, and the Theorem 2 suite on the exact
/// branch's output distribution.
ExperimentReport run_end_to_end(const ExperimentConfig& cfg);

}  // namespace qpost::thm
