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

#include <cmath>
#include <numeric>

#include "qpost/oracles/oracles.hpp"
#include "qpost/simcore/random.hpp"
#include "qpost/theorems/envelope.hpp"

using namespace qpost;
using namespace qpost::thm;
using Catch::Approx;
using sim::Distribution;

namespace {

// Qubits (o, p): p(o1p1) = 0.3, p(o0p1) = 0.3, p(p0) = 0.4.
const Distribution kWorked{2, {0.4, 0.3, 0.0, 0.3}};
const ConditionalQuery kQuery{0, {1}};

Distribution random_distribution(int bits, int support, sim::Rng& rng) {
  std::vector<double> p(std::size_t{1} << bits, 0.0);
  std::vector<std::size_t> idx(p.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  double total = 0.0;
  for (int j = 0; j < support; ++j) total += p[idx[j]] = u(rng);
  for (double& x : p) x /= total;
  return {bits, p};
}

}  // namespace

TEST_CASE("c = 1 returns the base conditional") {
  const auto r = envelope_optimize(kWorked, 1.0, kQuery, Sense::Minimize);
  REQUIRE(r.value == Approx(0.5).margin(1e-15));
  for (std::size_t z = 0; z < 4; ++z) REQUIRE(r.q.probs[z] == Approx(kWorked.probs[z]).margin(1e-15));
}

TEST_CASE("worked example at c = 1.1") {
  const auto r = envelope_optimize(kWorked, 1.1, kQuery, Sense::Minimize);
  REQUIRE(r.value == Approx(0.45249).margin(1e-5));
  REQUIRE(r.q.probs[3] == Approx(0.27273).margin(1e-5));
  REQUIRE(r.q.probs[1] == Approx(0.33).margin(1e-12));
  REQUIRE(r.q.probs[0] + r.q.probs[2] == Approx(0.39727).margin(1e-5));
  REQUIRE(r.value == Approx(oracle::vertex_enumeration(kWorked.probs, 2, 0, {1}, 1.1, true)).margin(1e-9));
  const auto sc = subset_check(kWorked, r.q, 1.1, 100, 7);
  REQUIRE(sc.pass);
  REQUIRE(sc.checked >= 100);
}

TEST_CASE("Dinkelbach and bisection agree with vertex enumeration") {
  sim::Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const int bits = 2 + trial % 3;
    const Distribution p = random_distribution(bits, std::min(8, 1 << bits), rng);
    const auto m = query_masses(p, kQuery);
    if (m.denominator <= 0.0 || m.numerator <= 0.0) continue;
    for (double c : {1.0, 1.05, 1.1, 1.3, 1.7}) {
      for (auto sense : {Sense::Minimize, Sense::Maximize}) {
        const double ve = oracle::vertex_enumeration(p.probs, bits, 0, {1}, c, sense == Sense::Minimize);
        const auto d = envelope_optimize(p, c, kQuery, sense);
        const auto b = envelope_optimize(p, c, kQuery, sense, EnvelopeMethod::Bisection);
        REQUIRE(std::abs(d.value - ve) <= 1e-9);
        REQUIRE(std::abs(b.value - ve) <= 1e-9);
        REQUIRE(envelope_margin(p, d.q, c) >= -1e-12);
        REQUIRE(d.q.total() == Approx(1.0).margin(1e-12));
        // Sandwich.
        const double base = conditional_value(p, kQuery);
        REQUIRE(d.value >= base / (c * c) - 1e-12);
        REQUIRE(d.value <= base * c * c + 1e-12);
      }
    }
  }
}

TEST_CASE("worst-case degradation is monotone in c") {
  sim::Rng rng(62);
  const Distribution p = random_distribution(3, 8, rng);
  double prev_min = 1.0, prev_max = 0.0;
  for (double c : {1.0, 1.02, 1.05, 1.1, 1.2, 1.3, 1.4}) {
    const double lo = envelope_optimize(p, c, kQuery, Sense::Minimize).value;
    const double hi = envelope_optimize(p, c, kQuery, Sense::Maximize).value;
    REQUIRE(lo <= prev_min + 1e-12);
    REQUIRE(hi >= prev_max - 1e-12);
    prev_min = lo;
    prev_max = hi;
  }
}

TEST_CASE("subset check trivial sets and injected violations") {
  const auto sc = subset_check(kWorked, kWorked, 1.1, 0, 1);
  REQUIRE(sc.pass);
  // empty, full and four singletons
  REQUIRE(sc.checked == 6);
  const Distribution bad = inject_violation(kWorked, kWorked, 1.1);
  REQUIRE(envelope_margin(kWorked, bad, 1.1) < 0.0);
  REQUIRE_FALSE(subset_check(kWorked, bad, 1.1, 10, 1).pass);
}

TEST_CASE("closed forms") {
  const auto f = theorem2_closed_forms(1.2, 0.3);
  REQUIRE(f.c_squared == Approx(1.44).margin(1e-15));
  REQUIRE(f.in_regime);
  REQUIRE(f.precondition_ok);
  REQUIRE(f.yes_bound == Approx(0.55556).margin(1e-5));
  REQUIRE(f.yes_bound > 0.5);
  REQUIRE(f.no_bound == Approx(0.288).margin(1e-12));
  REQUIRE(f.no_target == Approx(0.32).margin(1e-12));
  REQUIRE(f.no_bound < f.no_target);

  // c^2 = 1 + 2 delta exactly: YES bound = 1/2 on the boundary.
  const auto b = theorem2_closed_forms(std::sqrt(1.5), 0.25);
  REQUIRE(b.boundary);
  REQUIRE_FALSE(b.in_regime);
  REQUIRE(b.yes_bound == Approx(0.5).margin(1e-12));

  const auto out = theorem2_closed_forms(1.5, 0.3);
  REQUIRE_FALSE(out.in_regime);
  REQUIRE_FALSE(out.precondition_ok);
}

TEST_CASE("verdicts") {
  const auto yes = theorem2_verdict(1.2, 0.3, true, 0.8, 0.8 / 1.44, 0.9);
  REQUIRE(yes.verdict == Theorem2Verdict::Holds);
  const auto outside = theorem2_verdict(1.5, 0.3, true, 0.8, 0.4, 0.9);
  REQUIRE(outside.verdict == Theorem2Verdict::OutsideRegime);
  for (const auto& r : outside.rows) {
    if (r.name == "regime") REQUIRE(r.status == Status::Vacuous);
  }
  const auto broken = theorem2_verdict(1.2, 0.3, true, 0.8, 0.3, 0.9);  // min below base/c^2
  REQUIRE(broken.verdict == Theorem2Verdict::Fails);
}

TEST_CASE("the synthetic Q circuit realizes q and merges exactly") {
  sim::Rng rng(63);
  const Distribution q = random_distribution(3, 8, rng);
  for (int kp : {0, 2, 5}) {
    const auto c = envelope_circuit(q, kQuery, kp);
    REQUIRE(c.n_qubits() == 4);
    const MergeComparison m = compare_merge(c);
    REQUIRE(m.joint_conditional == Approx(conditional_value(q, kQuery)).margin(1e-12));
    REQUIRE(m.joint_success == Approx(std::ldexp(1.0, -kp) * query_masses(q, kQuery).denominator).margin(1e-12));
    REQUIRE(std::abs(m.merged_success - m.joint_success) <= 1e-12);
    REQUIRE(std::abs(m.merged_conditional - m.joint_conditional) <= 1e-12);
  }
  REQUIRE_THROWS_AS(envelope_circuit(Distribution{11, std::vector<double>(2048, 1.0 / 2048)}, kQuery, 1),
                    sim::CapacityError);
}

TEST_CASE("run_theorem2 on a synthetic NO base") {
  // Pr[p = 1] = 1/2, Pr[o = 1 | p = 1] = 0.2 = 1/2 - 0.3.
  const Distribution base{2, {0.25, 0.4, 0.25, 0.1}};
  ExperimentConfig cfg;
  cfg.c = 1.2;
  const auto rep = run_theorem2({base, kQuery, 0.3, false}, cfg);
  REQUIRE(rep.count(Status::Fail) == 0);
  bool saw_merge = false;
  for (const auto& r : rep.rows) saw_merge = saw_merge || r.name == "merge/verdict_invariant";
  REQUIRE(saw_merge);

  cfg.inject = true;
  REQUIRE_FALSE(run_theorem2({base, kQuery, 0.3, false}, cfg).passed());

  cfg.inject = false;
  cfg.c = 1.5;
  const auto wide = run_theorem2({base, kQuery, 0.3, false}, cfg);
  REQUIRE(wide.passed());
  bool warned = false;
  for (const auto& n : wide.notes) warned = warned || n.find("sqrt(2)") != std::string::npos;
  REQUIRE(warned);
}
