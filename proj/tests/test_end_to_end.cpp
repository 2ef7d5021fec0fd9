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

#include <fstream>
#include <sstream>

#include "qpost/hamlib/hamiltonian_io.hpp"
#include "qpost/hamlib/spectrum.hpp"
#include "qpost/theorems/end_to_end.hpp"
#include "qpost/theorems/instances.hpp"

using namespace qpost;
using namespace qpost::thm;
using Catch::Approx;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("shipped instance files match the builtin table") {
  for (const auto& spec : builtin_instances()) {
    const std::string text = slurp(data_directory() + "/instances/" + spec.id + ".ham");
    REQUIRE(text == spec.text);
  }
}

TEST_CASE("shipped instance properties") {
  const auto i1 = ham::ground(ham::parse_hamiltonian(find_builtin("I1")->text));
  REQUIRE(i1.ground_energy == Approx(-1.34511).margin(1e-5));
  REQUIRE_FALSE(i1.degenerate);
  const auto i3 = ham::ground(ham::parse_hamiltonian(find_builtin("I3")->text));
  REQUIRE(i3.ground_energy == Approx(0.25).margin(1e-12));
  REQUIRE_FALSE(i3.degenerate);
}

TEST_CASE("end to end on every shipped instance") {
  for (const auto& spec : builtin_instances()) {
    ExperimentConfig cfg;
    cfg.instance = spec.id;
    const ExperimentReport rep = run_end_to_end(cfg);
    INFO(spec.id);
    REQUIRE(rep.count(Status::Fail) == 0);
    REQUIRE(rep.passed());
    int thm1 = 0, e2e = 0, thm2 = 0;
    for (const auto& r : rep.rows) {
      thm1 += r.name.rfind("thm1/", 0) == 0;
      e2e += r.name.rfind("e2e/", 0) == 0;
      thm2 += r.name.rfind("thm2/", 0) == 0;
    }
    REQUIRE(thm1 > 0);
    REQUIRE(e2e > 0);
    REQUIRE(thm2 > 0);
  }
}

TEST_CASE("the composite circuit multiplies success by r^m'") {
  const auto h = ham::parse_hamiltonian(find_builtin("I1")->text);
  const VerifierCircuit v = build_verifier(h, 1, 1);
  const auto g = ham::diagonalize(h).eigenstate(0);
  for (double r : {0.25, 0.5, 1.0}) {
    const CompositeCircuit cc = build_composite(v, g, r);
    const CompositeResult cr = run_composite(cc);
    const BranchProbabilities b = run_branch(v, g);
    REQUIRE(cr.success == Approx(r * b.success).margin(1e-12));
    REQUIRE(cr.conditional == Approx(b.conditional).margin(1e-12));
    REQUIRE(std::abs(cr.merged_conditional - cr.conditional) <= 1e-12);
  }
  REQUIRE_THROWS(build_composite(v, g, 0.0));
}

TEST_CASE("identical seeds give identical reports") {
  ExperimentConfig cfg;
  cfg.seed = 3;
  const auto a = run_end_to_end(cfg), b = run_end_to_end(cfg);
  REQUIRE(to_json(a).dump() == to_json(b).dump());
  REQUIRE(to_csv(a) == to_csv(b));
}

TEST_CASE("report serialization") {
  ExperimentReport r;
  r.kind = "demo";
  r.add(check("a", 1.0, Relation::LessEqual, 2.0));
  r.add(check("b", 1.0, Relation::Greater, 1.0));
  r.add(vacuous("c", 0.0, Relation::LessEqual, 1.0, "why"));
  REQUIRE(r.count(Status::Pass) == 1);
  REQUIRE(r.count(Status::Fail) == 1);
  REQUIRE(r.count(Status::Vacuous) == 1);
  REQUIRE_FALSE(r.passed());
  const std::string csv = to_csv(r);
  REQUIRE(csv.rfind("name,lhs,rhs,margin,pass\n", 0) == 0);
  REQUIRE(csv.find("a,1,2,1,PASS") != std::string::npos);
  REQUIRE(to_json(r).at("inequalities").size() == 3);
  REQUIRE(format_double(0.1) == "0.1");
  REQUIRE(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  REQUIRE(check("eq", 1.0, Relation::Equal, 1.0 + 1e-13, 1e-12).status == Status::Pass);
  REQUIRE(check("nan", std::nan(""), Relation::LessEqual, 1.0).status == Status::Fail);
}
