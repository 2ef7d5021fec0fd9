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

#include <array>
#include <span>

#include "qpost/simcore/types.hpp"

// Gate-application kernels on a flat complex vector of length 2^bits.
//
// Every kernel takes *bit positions* (0 = least significant), not qubit
// labels; the simulator does the translation. Density matrices reuse the same
// kernels by treating rho as a vector over 2n bits (row bits high).
//
// `serial` is the reference implementation. `parallel` is the OpenMP version
// and must produce bit-identical results: element-wise kernels write disjoint
// outputs, and reductions sum fixed-size blocks in a fixed order regardless of
// the thread count.
namespace qpost::kernels {

using sim::index_t;

struct Mat2 {
  cplx m00, m01, m10, m11;
};

enum class Policy { Serial, Parallel };

/// Block length used by all reductions.
inline constexpr index_t kReductionBlock = 4096;

/// Vectors shorter than this run single-threaded inside the parallel kernels.
inline constexpr index_t kParallelThreshold = index_t{1} << 12;

namespace serial {
void apply_1q(std::span<cplx> v, int bit, const Mat2& m);
/// Multiplies amplitudes whose `bit` is 1 by `phase`.
void apply_phase(std::span<cplx> v, int bit, cplx phase);
/// Flips `target_bit` wherever all bits of `control_mask` are set.
void apply_mcx(std::span<cplx> v, index_t control_mask, int target_bit);
/// Dense 2^k x 2^k row-major matrix on `bits`; bits[0] is the most
/// significant bit of the local index.
void apply_dense(std::span<cplx> v, std::span<const int> bits,
                 std::span<const cplx> matrix);
double norm2(std::span<const cplx> v);
void abs2(std::span<const cplx> v, std::span<double> out);
}  // namespace serial

namespace parallel {
void apply_1q(std::span<cplx> v, int bit, const Mat2& m);
void apply_phase(std::span<cplx> v, int bit, cplx phase);
void apply_mcx(std::span<cplx> v, index_t control_mask, int target_bit);
void apply_dense(std::span<cplx> v, std::span<const int> bits,
                 std::span<const cplx> matrix);
double norm2(std::span<const cplx> v);
void abs2(std::span<const cplx> v, std::span<double> out);
}  // namespace parallel

inline void apply_1q(Policy p, std::span<cplx> v, int bit, const Mat2& m) {
  p == Policy::Serial ? serial::apply_1q(v, bit, m) : parallel::apply_1q(v, bit, m);
}
inline void apply_phase(Policy p, std::span<cplx> v, int bit, cplx phase) {
  p == Policy::Serial ? serial::apply_phase(v, bit, phase)
                      : parallel::apply_phase(v, bit, phase);
}
inline void apply_mcx(Policy p, std::span<cplx> v, index_t mask, int target) {
  p == Policy::Serial ? serial::apply_mcx(v, mask, target)
                      : parallel::apply_mcx(v, mask, target);
}
inline void apply_dense(Policy p, std::span<cplx> v, std::span<const int> bits,
                        std::span<const cplx> matrix) {
  p == Policy::Serial ? serial::apply_dense(v, bits, matrix)
                      : parallel::apply_dense(v, bits, matrix);
}
inline double norm2(Policy p, std::span<const cplx> v) {
  return p == Policy::Serial ? serial::norm2(v) : parallel::norm2(v);
}
inline void abs2(Policy p, std::span<const cplx> v, std::span<double> out) {
  p == Policy::Serial ? serial::abs2(v, out) : parallel::abs2(v, out);
}

}  // namespace qpost::kernels
