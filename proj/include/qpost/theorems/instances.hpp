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
#include <vector>

#include "qpost/hamlib/hamiltonian.hpp"

namespace qpost::thm {

/// A shipped experiment instance: Hamiltonian text plus the verifier shape
/// (witness copies m' and postselection-floor exponent k) it is run with.
struct InstanceSpec {
  std::string id;
  std::string description;
  std::string text;
  int m_prime = 1;
  int k = 1;
};

const std::vector<InstanceSpec>& builtin_instances();
/// nullptr when `id` is not a builtin.
const InstanceSpec* find_builtin(std::string_view id);

/// Directory holding the shipped data files.
std::string data_directory();

}  // namespace qpost::thm
