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

#include "qpost/theorems/instances.hpp"

#ifndef QPOST_DATA_DIR
#define QPOST_DATA_DIR "data"
#endif

namespace qpost::thm {

const std::vector<InstanceSpec>& builtin_instances() {
  static const std::vector<InstanceSpec> specs = {
      {"I1", "two-qubit Ising pair in a transverse field with a bias; YES side",
       "% I1: two-qubit Ising pair in a transverse field with a longitudinal bias.\n"
       "#qubits 2\n"
       "-0.8 Z@0 Z@1\n"
       "-0.5 X@0\n"
       "-0.4 X@1\n"
       "0.3 Z@0\n",
       1, 1},
      {"I2", "single-qubit field read through three witness copies and a majority vote; YES side",
       "% I2: one qubit in a transverse field, verified with three witness copies.\n"
       "#qubits 1\n"
       "-0.8 X@0\n",
       3, 1},
      {"I3", "three-qubit instance lifted by an identity term; NO side",
       "% I3: three qubits; the identity term lifts the spectrum above zero.\n"
       "#qubits 3\n"
       "1.0\n"
       "0.3 Z@0 Z@1\n"
       "0.25 X@0 Y@1 Z@2\n"
       "0.2 Z@2\n",
       1, 1},
  };
  return specs;
}

const InstanceSpec* find_builtin(std::string_view id) {
  for (const auto& s : builtin_instances()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

std::string data_directory() { return QPOST_DATA_DIR; }

}  // namespace qpost::thm
