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
#include <string_view>

#include "qpost/hamlib/hamiltonian.hpp"

// One term per line: `<coeff> <P>@<q> [<P>@<q> [<P>@<q>]]`, P in {X,Y,Z}.
// A line holding only a coefficient is an identity term. `#qubits N` fixes
// the register size (otherwise the largest index + 1); `%` starts a comment.
namespace qpost::ham {

class HamiltonianParseError : public HamiltonianError {
 public:
  HamiltonianParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

LocalHamiltonian parse_hamiltonian(std::string_view text);
LocalHamiltonian load_hamiltonian(const std::string& path);

/// Canonical form: `#qubits N` header, factors sorted by qubit, coefficients
/// printed with round-trip precision.
std::string format_hamiltonian(const LocalHamiltonian& h);

/// Sorts factors by qubit index within each term.
LocalHamiltonian canonical(const LocalHamiltonian& h);

}  // namespace qpost::ham
