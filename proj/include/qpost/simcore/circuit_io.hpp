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

#include "qpost/simcore/circuit.hpp"

// Text format, one gate per line:
//
//   #qubits 3
//   #output 2
//   #postselect 0=1
//   H 0
//   CNOT 0 1
//   TOFFOLI 0 1 2      % comment
//
// `#qubits` must precede any gate. Only postselection on 1 is expressible;
// condition on 0 by inserting an X gate.
namespace qpost::sim {

class CircuitParseError : public std::runtime_error {
 public:
  CircuitParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

PostselectedCircuit parse_circuit(std::string_view text);
PostselectedCircuit load_circuit(const std::string& path);

/// Canonical text form. Throws CircuitError for circuits containing
/// unitary blocks.
std::string format_circuit(const PostselectedCircuit& circuit);

}  // namespace qpost::sim
