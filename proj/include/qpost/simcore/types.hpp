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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qpost {

using cplx = std::complex<double>;
using index_t = std::uint64_t;

namespace sim {

using qpost::cplx;
using qpost::index_t;

/// Largest register simulated on the pure-state path.
inline constexpr int kMaxPureQubits = 20;
/// Largest register simulated as a dense density matrix (2^10 x 2^10).
inline constexpr int kMaxMixedQubits = 10;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kDistributionTolerance = 1e-10;

/// Qubit 0 is the most significant bit of a basis index, so a basis index
/// reads left to right as q0 q1 ... q(n-1), matching Kronecker order.
constexpr int bit_position(int qubit, int n_qubits) { return n_qubits - 1 - qubit; }

constexpr int qubit_value(index_t basis, int qubit, int n_qubits) {
  return static_cast<int>((basis >> bit_position(qubit, n_qubits)) & 1U);
}

constexpr index_t dimension(int n_qubits) { return index_t{1} << n_qubits; }

std::string bitstring(index_t basis, int n_qubits);

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace sim
}  // namespace qpost
