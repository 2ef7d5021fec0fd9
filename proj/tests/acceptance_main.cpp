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

// Acceptance battery: runs the suite twice with seed 7 and prints one
// PASS/FAIL line per criterion. Criteria 1-9 come from the first run's JSON;
// criterion 10 compares the two runs' files byte for byte.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "qpost/app/cli.hpp"

namespace fs = std::filesystem;

namespace {

constexpr const char* kSeed = "7";

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int run_suite(const fs::path& dir) {
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ostringstream out, err;
  const int code = qpost::cli::run({"suite", "--seed", kSeed, "--out", (dir / "suite").string()}, out, err);
  if (!err.str().empty()) std::cerr << err.str();
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path work = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "qpost_acceptance";
  const int code_a = run_suite(work / "run1");
  const int code_b = run_suite(work / "run2");

  bool all = code_a != qpost::cli::kExitInvalid && code_b != qpost::cli::kExitInvalid;
  const std::string json_a = slurp(work / "run1" / "suite.json");
  const std::string json_b = slurp(work / "run2" / "suite.json");
  const std::string csv_a = slurp(work / "run1" / "suite.csv");
  const std::string csv_b = slurp(work / "run2" / "suite.csv");
  if (json_a.empty() || csv_a.empty()) {
    std::cout << "FAIL suite produced no report\n";
    return 1;
  }

  const auto report = nlohmann::json::parse(json_a);
  bool in_suite_determinism = false;
  for (const auto& c : report.at("details").at("criteria")) {
    const int id = c.at("id").get<int>();
    const bool pass = c.at("pass").get<bool>();
    if (id == 10) {
      in_suite_determinism = pass;
      continue;
    }
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << " (" << c.at("title").get<std::string>()
              << "): " << c.at("summary").get<std::string>() << '\n';
  }
  const bool identical = json_a == json_b && csv_a == csv_b;
  const bool pass10 = identical && in_suite_determinism;
  all = all && pass10;
  std::cout << (pass10 ? "PASS" : "FAIL") << " criterion 10 (determinism): suite --seed " << kSeed
            << " twice, CSV " << (csv_a == csv_b ? "identical" : "differs") << ", JSON "
            << (json_a == json_b ? "identical" : "differs") << " (" << csv_a.size() << " + " << json_a.size()
            << " bytes)\n";
  return all && code_a == qpost::cli::kExitOk ? 0 : 1;
}
