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

// Serial reference kernels against their OpenMP versions, 16 to 20 qubits.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qpost/simcore/kernels.hpp"

using namespace qpost;
using kernels::Policy;

namespace {

std::vector<cplx> random_vector(int bits) {
  std::mt19937_64 rng(bits);
  std::normal_distribution<double> g;
  std::vector<cplx> v(std::size_t{1} << bits);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

const kernels::Mat2 kHadamard{M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2};

template <Policy P>
void BM_apply_1q(benchmark::State& st) {
  const int bits = static_cast<int>(st.range(0));
  auto v = random_vector(bits);
  for (auto _ : st) {
    kernels::apply_1q(P, v, bits / 2, kHadamard);
    benchmark::DoNotOptimize(v.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(v.size()));
}

template <Policy P>
void BM_apply_mcx(benchmark::State& st) {
  const int bits = static_cast<int>(st.range(0));
  auto v = random_vector(bits);
  const index_t mask = (index_t{1} << 1) | (index_t{1} << (bits - 2));
  for (auto _ : st) {
    kernels::apply_mcx(P, v, mask, 3);
    benchmark::DoNotOptimize(v.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(v.size()));
}

template <Policy P>
void BM_apply_dense(benchmark::State& st) {
  const int bits = static_cast<int>(st.range(0));
  auto v = random_vector(bits);
  const auto mat = random_vector(6);  // 8x8
  const std::vector<int> targets = {bits - 1, bits / 2, 0};
  for (auto _ : st) {
    kernels::apply_dense(P, v, targets, mat);
    benchmark::DoNotOptimize(v.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(v.size()));
}

template <Policy P>
void BM_norm2(benchmark::State& st) {
  const auto v = random_vector(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::norm2(P, v));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(v.size()));
}

}  // namespace

BENCHMARK(BM_apply_1q<Policy::Serial>)->DenseRange(16, 20, 2);
BENCHMARK(BM_apply_1q<Policy::Parallel>)->DenseRange(16, 20, 2);
BENCHMARK(BM_apply_mcx<Policy::Serial>)->DenseRange(16, 20, 2);
BENCHMARK(BM_apply_mcx<Policy::Parallel>)->DenseRange(16, 20, 2);
BENCHMARK(BM_apply_dense<Policy::Serial>)->DenseRange(16, 20, 2);
BENCHMARK(BM_apply_dense<Policy::Parallel>)->DenseRange(16, 20, 2);
BENCHMARK(BM_norm2<Policy::Serial>)->DenseRange(16, 20, 2);
BENCHMARK(BM_norm2<Policy::Parallel>)->DenseRange(16, 20, 2);

BENCHMARK_MAIN();
