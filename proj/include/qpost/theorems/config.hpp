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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qpost/hamlib/hamiltonian.hpp"

// Experiment configuration, one `key = value` per line; `%` and `#` start a
// comment. Keys not set fall back to the instance defaults or to the values
// below.
namespace qpost::thm {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ModeSelection { Pure, Mixed, Both };

struct ExperimentConfig {
  /// Builtin id (I1, I2, I3) or a Hamiltonian file path, relative paths
  /// resolved against `base_dir`.
  std::string instance = "I1";
  std::optional<int> m_prime;
  std::optional<int> k;
  /// Per-copy fidelity 1 - 2^-s is added to the sweep when set.
  std::optional<int> s;
  double kappa = 1.0;
  /// Extra multiplicative error added to the Theorem 2 c list.
  std::optional<double> c;
  /// Promise gap; derived from the exact branch when unset.
  std::optional<double> delta;
  double r = 0.5;
  int directions = 20;
  std::uint64_t seed = 0;
  int subsets = 100;
  /// Second-postselection floor exponent of the synthetic Q circuit.
  int k_prime = 2;
  /// Negative control: replace the optimized envelope by one that leaves
  /// the multiplicative bounds.
  bool inject = false;
  ModeSelection mode = ModeSelection::Both;
  std::string base_dir = ".";
};

ExperimentConfig parse_config(std::string_view text, const std::string& base_dir = ".");
ExperimentConfig load_config(const std::string& path);
/// Applies one `key=value` override; throws ConfigError on bad keys or values.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);
void apply_override(ExperimentConfig& cfg, std::string_view assignment);

/// Canonical `key = value` text (round-trips through parse_config).
std::string format_config(const ExperimentConfig& cfg);

struct ResolvedInstance {
  std::string id;
  /// "builtin" or the resolved file path.
  std::string source;
  ham::LocalHamiltonian hamiltonian;
  int m_prime = 1;
  int k = 1;
};

ResolvedInstance resolve_instance(const ExperimentConfig& cfg);

}  // namespace qpost::thm
