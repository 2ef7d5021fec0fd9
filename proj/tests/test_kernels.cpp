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

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "qpost/simcore/kernels.hpp"

using namespace qpost;

namespace {

std::vector<cplx> random_vector(int bits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<cplx> v(std::size_t{1} << bits);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

// The parallel kernels must agree with the serial ones bit for bit.
constexpr int kBits = 15;

}  // namespace

TEST_CASE("apply_1q parallel matches serial exactly") {
  const kernels::Mat2 m{{0.6, 0.1}, {0.0, -0.8}, {0.8, 0.0}, {0.6, -0.1}};
  for (int bit : {0, 7, kBits - 1}) {
    auto a = random_vector(kBits, 1), b = a;
    kernels::serial::apply_1q(a, bit, m);
    kernels::parallel::apply_1q(b, bit, m);
    REQUIRE(a == b);
  }
}

TEST_CASE("apply_phase and apply_mcx parallel match serial exactly") {
  auto a = random_vector(kBits, 2), b = a;
  kernels::serial::apply_phase(a, 3, {0.0, 1.0});
  kernels::parallel::apply_phase(b, 3, {0.0, 1.0});
  REQUIRE(a == b);
  const index_t mask = (index_t{1} << 2) | (index_t{1} << 11);
  kernels::serial::apply_mcx(a, mask, 5);
  kernels::parallel::apply_mcx(b, mask, 5);
  REQUIRE(a == b);
}

TEST_CASE("apply_dense parallel matches serial exactly") {
  const auto mat = random_vector(6, 3);  // 8x8 on three bits
  const std::vector<int> bits = {13, 2, 6};
  auto a = random_vector(kBits, 4), b = a;
  kernels::serial::apply_dense(a, bits, mat);
  kernels::parallel::apply_dense(b, bits, mat);
  REQUIRE(a == b);
}

TEST_CASE("reductions are bit-identical across policies") {
  const auto v = random_vector(kBits, 5);
  REQUIRE(kernels::serial::norm2(v) == kernels::parallel::norm2(v));
  std::vector<double> x(v.size()), y(v.size());
  kernels::serial::abs2(v, x);
  kernels::parallel::abs2(v, y);
  REQUIRE(x == y);
}

TEST_CASE("mcx with empty mask is a plain X") {
  std::vector<cplx> v = {1.0, 0.0, 0.0, 0.0};
  kernels::serial::apply_mcx(v, 0, 1);
  REQUIRE(v[2] == cplx{1.0});
  REQUIRE(v[0] == cplx{0.0});
}

TEST_CASE("small vectors take the same path under both policies") {
  auto a = random_vector(4, 6), b = a;
  const kernels::Mat2 h{M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2};
  kernels::apply_1q(kernels::Policy::Serial, a, 1, h);
  kernels::apply_1q(kernels::Policy::Parallel, b, 1, h);
  REQUIRE(a == b);
}
