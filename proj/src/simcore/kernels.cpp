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

#include "qpost/simcore/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qpost::kernels {

namespace {

inline index_t insert_zero(index_t i, int bit) {
  const index_t low = i & ((index_t{1} << bit) - 1);
  return ((i >> bit) << (bit + 1)) | low;
}

inline index_t insert_zeros(index_t i, std::span<const int> sorted_bits) {
  for (int b : sorted_bits) i = insert_zero(i, b);
  return i;
}

struct DensePlan {
  std::vector<int> sorted;
  std::vector<index_t> offsets;
  index_t local_dim;
};

DensePlan plan_dense(std::span<const cplx> v, std::span<const int> bits,
                     std::span<const cplx> matrix) {
  const int k = static_cast<int>(bits.size());
  DensePlan plan;
  plan.local_dim = index_t{1} << k;
  if (matrix.size() != plan.local_dim * plan.local_dim) {
    throw std::invalid_argument("apply_dense: matrix size does not match bit count");
  }
  if ((index_t{1} << k) > v.size()) {
    throw std::invalid_argument("apply_dense: more bits than the vector holds");
  }
  plan.sorted.assign(bits.begin(), bits.end());
  std::sort(plan.sorted.begin(), plan.sorted.end());
  plan.offsets.resize(plan.local_dim);
  for (index_t l = 0; l < plan.local_dim; ++l) {
    index_t off = 0;
    for (int j = 0; j < k; ++j) {
      if ((l >> (k - 1 - j)) & 1U) off |= index_t{1} << bits[j];
    }
    plan.offsets[l] = off;
  }
  return plan;
}

inline void dense_local(std::span<cplx> v, const DensePlan& plan, index_t base,
                        std::span<const cplx> matrix, std::vector<cplx>& in) {
  const index_t d = plan.local_dim;
  for (index_t l = 0; l < d; ++l) in[l] = v[base + plan.offsets[l]];
  for (index_t r = 0; r < d; ++r) {
    cplx acc{0.0, 0.0};
    const cplx* row = matrix.data() + r * d;
    for (index_t c = 0; c < d; ++c) acc += row[c] * in[c];
    v[base + plan.offsets[r]] = acc;
  }
}

inline void mat2_pair(std::span<cplx> v, index_t i0, index_t stride, const Mat2& m) {
  const cplx a = v[i0];
  const cplx b = v[i0 + stride];
  v[i0] = m.m00 * a + m.m01 * b;
  v[i0 + stride] = m.m10 * a + m.m11 * b;
}

inline double block_norm2(std::span<const cplx> v, index_t block) {
  const index_t begin = block * kReductionBlock;
  const index_t end = std::min<index_t>(begin + kReductionBlock, v.size());
  double s = 0.0;
  for (index_t i = begin; i < end; ++i) s += std::norm(v[i]);
  return s;
}

inline index_t block_count(std::size_t n) {
  return (static_cast<index_t>(n) + kReductionBlock - 1) / kReductionBlock;
}

}  // namespace

namespace serial {

void apply_1q(std::span<cplx> v, int bit, const Mat2& m) {
  const index_t half = v.size() / 2;
  const index_t stride = index_t{1} << bit;
  for (index_t i = 0; i < half; ++i) mat2_pair(v, insert_zero(i, bit), stride, m);
}

void apply_phase(std::span<cplx> v, int bit, cplx phase) {
  const index_t half = v.size() / 2;
  const index_t stride = index_t{1} << bit;
  for (index_t i = 0; i < half; ++i) v[insert_zero(i, bit) + stride] *= phase;
}

void apply_mcx(std::span<cplx> v, index_t control_mask, int target_bit) {
  const index_t half = v.size() / 2;
  const index_t stride = index_t{1} << target_bit;
  for (index_t i = 0; i < half; ++i) {
    const index_t i0 = insert_zero(i, target_bit);
    if ((i0 & control_mask) == control_mask) std::swap(v[i0], v[i0 + stride]);
  }
}

void apply_dense(std::span<cplx> v, std::span<const int> bits,
                 std::span<const cplx> matrix) {
  const DensePlan plan = plan_dense(v, bits, matrix);
  const index_t bases = v.size() / plan.local_dim;
  std::vector<cplx> in(plan.local_dim);
  for (index_t i = 0; i < bases; ++i) {
    dense_local(v, plan, insert_zeros(i, plan.sorted), matrix, in);
  }
}

double norm2(std::span<const cplx> v) {
  const index_t blocks = block_count(v.size());
  double total = 0.0;
  for (index_t b = 0; b < blocks; ++b) total += block_norm2(v, b);
  return total;
}

void abs2(std::span<const cplx> v, std::span<double> out) {
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::norm(v[i]);
}

}  // namespace serial

namespace parallel {

void apply_1q(std::span<cplx> v, int bit, const Mat2& m) {
  const std::int64_t half = static_cast<std::int64_t>(v.size() / 2);
  const index_t stride = index_t{1} << bit;
#pragma omp parallel for schedule(static) if (v.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < half; ++i) {
    mat2_pair(v, insert_zero(static_cast<index_t>(i), bit), stride, m);
  }
}

void apply_phase(std::span<cplx> v, int bit, cplx phase) {
  const std::int64_t half = static_cast<std::int64_t>(v.size() / 2);
  const index_t stride = index_t{1} << bit;
#pragma omp parallel for schedule(static) if (v.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < half; ++i) {
    v[insert_zero(static_cast<index_t>(i), bit) + stride] *= phase;
  }
}

void apply_mcx(std::span<cplx> v, index_t control_mask, int target_bit) {
  const std::int64_t half = static_cast<std::int64_t>(v.size() / 2);
  const index_t stride = index_t{1} << target_bit;
#pragma omp parallel for schedule(static) if (v.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < half; ++i) {
    const index_t i0 = insert_zero(static_cast<index_t>(i), target_bit);
    if ((i0 & control_mask) == control_mask) std::swap(v[i0], v[i0 + stride]);
  }
}

void apply_dense(std::span<cplx> v, std::span<const int> bits,
                 std::span<const cplx> matrix) {
  const DensePlan plan = plan_dense(v, bits, matrix);
  const std::int64_t bases = static_cast<std::int64_t>(v.size() / plan.local_dim);
#pragma omp parallel if (v.size() >= kParallelThreshold)
  {
    std::vector<cplx> in(plan.local_dim);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < bases; ++i) {
      dense_local(v, plan, insert_zeros(static_cast<index_t>(i), plan.sorted), matrix, in);
    }
  }
}

double norm2(std::span<const cplx> v) {
  const index_t blocks = block_count(v.size());
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static) if (v.size() >= kParallelThreshold)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    partial[b] = block_norm2(v, static_cast<index_t>(b));
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

void abs2(std::span<const cplx> v, std::span<double> out) {
  const std::int64_t n = static_cast<std::int64_t>(v.size());
#pragma omp parallel for schedule(static) if (v.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) out[i] = std::norm(v[i]);
}

}  // namespace parallel

}  // namespace qpost::kernels
