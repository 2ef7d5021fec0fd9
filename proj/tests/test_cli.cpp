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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qpost/app/cli.hpp"
#include "qpost/hamlib/hamiltonian_io.hpp"
#include "qpost/hamlib/spectrum.hpp"
#include "qpost/theorems/instances.hpp"

using namespace qpost;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  return {code, o.str(), e.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string data(const std::string& rel) { return thm::data_directory() + "/" + rel; }

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("qpost_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("ham reports the ground energy") {
  const fs::path dir = scratch("ham");
  std::ofstream(dir / "z.ham") << "1.0 Z@0\n";
  const Run r = run({"ham", (dir / "z.ham").string()});
  REQUIRE(r.code == cli::kExitOk);
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("E_min = -1\n"));

  const Run i1 = run({"ham", data("instances/I1.ham")});
  const auto sd = ham::ground(ham::load_hamiltonian(data("instances/I1.ham")));
  char buf[64];
  std::snprintf(buf, sizeof buf, "E_min = %.15g\n", sd.ground_energy);
  REQUIRE_THAT(i1.out, Catch::Matchers::ContainsSubstring(buf));
  REQUIRE_THAT(i1.out, Catch::Matchers::ContainsSubstring("degenerate = false"));

  const Run labelled = run({"ham", data("instances/I3.ham"), "--a", "0", "--b", "0.25"});
  REQUIRE_THAT(labelled.out, Catch::Matchers::ContainsSubstring("label = NO"));
  REQUIRE(run({"ham", data("instances/I3.ham"), "--a", "0"}).code == cli::kExitInvalid);
}

TEST_CASE("validation failures exit 2 with a message") {
  const Run four = run({"ham", data("negative/four_local.ham")});
  REQUIRE(four.code == cli::kExitInvalid);
  REQUIRE_THAT(four.err, Catch::Matchers::ContainsSubstring("3-local") && Catch::Matchers::ContainsSubstring("line 4"));
  REQUIRE(run({"circuit", data("negative/zero_success.qc")}).code == cli::kExitInvalid);
  REQUIRE(run({"thm1", "--config", "/nonexistent.cfg"}).code == cli::kExitInvalid);
  REQUIRE(run({"thm1", "--set", "k=99"}).code == cli::kExitInvalid);
  REQUIRE(run({"thm1", "--format", "xml"}).code == cli::kExitInvalid);
  REQUIRE(run({}).code == cli::kExitInvalid);
  REQUIRE(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("verify follows the label") {
  REQUIRE(run({"verify", data("instances/I1.ham"), "--b", "2"}).code == cli::kExitOk);
  const Run no = run({"verify", data("instances/I3.ham"), "--b", "0.25"});
  REQUIRE(no.code == cli::kExitOk);
  REQUIRE_THAT(no.out, Catch::Matchers::ContainsSubstring("verdict = REJECT"));
  // E_min = 0.25 lies between a = 0 and b = 1: outside the promise.
  REQUIRE(run({"verify", data("instances/I3.ham"), "--b", "1"}).code == cli::kExitInvalid);
  // YES (E_min = -0.1), but the maximally mixed witness has energy 0.9.
  const fs::path dir = scratch("verify");
  std::ofstream(dir / "biased.ham") << "#qubits 1\n0.9\n-1.0 Z@0\n";
  REQUIRE(run({"verify", (dir / "biased.ham").string(), "--b", "1", "--witness", "mixed"}).code == cli::kExitFailure);
  REQUIRE(run({"verify", (dir / "biased.ham").string(), "--b", "1"}).code == cli::kExitOk);
}

TEST_CASE("thm1 writes CSV, JSON and the sweep") {
  const fs::path dir = scratch("thm1");
  const std::string base = (dir / "i1").string();
  const Run r = run({"thm1", "--config", data("configs/i1.cfg"), "--out", base});
  REQUIRE(r.code == cli::kExitOk);
  const std::string sweep = slurp(base + ".sweep.csv");
  REQUIRE(sweep.rfind("mode,F,joint,eps,bound,tight,direction,d_joint,d_post,yes_lb,no_ub,cond_exact,cond_approx,"
                      "joint_pass,post_pass\n",
                      0) == 0);
  // F = 1 rows have zero differences.
  std::istringstream lines(sweep);
  std::string line;
  std::getline(lines, line);
  int f1 = 0;
  while (std::getline(lines, line)) {
    if (line.find(",1,1,0,0,0,") != std::string::npos) {
      ++f1;
      REQUIRE(line.find(",0,0,") != std::string::npos);
    }
  }
  REQUIRE(f1 == 40);
  const auto j = nlohmann::json::parse(slurp(base + ".json"));
  REQUIRE(j.at("kind") == "thm1");
  REQUIRE(j.at("passed") == true);
  REQUIRE(slurp(base + ".csv").rfind("name,lhs,rhs,margin,pass\n", 0) == 0);
  REQUIRE_FALSE(fs::exists(base + ".csv.tmp"));
}

TEST_CASE("overrides and seeds") {
  const fs::path dir = scratch("over");
  const std::string a = (dir / "a").string(), b = (dir / "b").string();
  REQUIRE(run({"thm1", "--set", "directions=3", "--set", "mode=pure", "--seed", "5", "--format", "json", "--out", a})
              .code == cli::kExitOk);
  REQUIRE(run({"thm1", "--set", "directions=3", "--set", "mode=pure", "--set", "seed=5", "--format", "json", "--out",
               b})
              .code == cli::kExitOk);
  REQUIRE(slurp(a + ".json") == slurp(b + ".json"));
  REQUIRE_FALSE(fs::exists(a + ".csv"));
  REQUIRE(nlohmann::json::parse(slurp(a + ".json")).at("provenance").at("directions") == 3);
}

TEST_CASE("thm2 outside the regime warns and still exits 0") {
  const Run r = run({"thm2", "--config", data("configs/outside_regime.cfg")});
  REQUIRE(r.code == cli::kExitOk);
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("sqrt(2)"));
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("VACUOUS"));
}

TEST_CASE("negative controls exit 1") {
  const Run broken = run({"thm2", "--config", data("negative/broken_envelope.cfg")});
  REQUIRE(broken.code == cli::kExitFailure);
  REQUIRE_THAT(broken.out, Catch::Matchers::ContainsSubstring("subset_sums"));
  REQUIRE(run({"thm1", "--config", data("negative/overclaimed_delta.cfg")}).code == cli::kExitFailure);
}

TEST_CASE("e2e twice with the same seed is byte-identical") {
  const fs::path dir = scratch("e2e");
  const std::string a = (dir / "a").string(), b = (dir / "b").string();
  REQUIRE(run({"e2e", "--config", data("configs/i1_file.cfg"), "--seed", "4", "--out", a}).code == cli::kExitOk);
  REQUIRE(run({"e2e", "--config", data("configs/i1_file.cfg"), "--seed", "4", "--out", b}).code == cli::kExitOk);
  REQUIRE(slurp(a + ".csv") == slurp(b + ".csv"));
  REQUIRE(slurp(a + ".json") == slurp(b + ".json"));
  REQUIRE_FALSE(slurp(a + ".csv").empty());
}

TEST_CASE("circuit prints exact probabilities") {
  const Run r = run({"circuit", data("circuits/ghz_post.qc")});
  REQUIRE(r.code == cli::kExitOk);
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("postselection success = 0.5"));
  REQUIRE_THAT(r.out, Catch::Matchers::ContainsSubstring("Pr[o=1 | p=1] = 1"));
}
