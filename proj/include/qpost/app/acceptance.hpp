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
#include <string>
#include <vector>

#include "qpost/theorems/report.hpp"

namespace qpost::app {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  /// One-line summary of what was checked.
  std::string summary;
  thm::ExperimentReport report;
};

/// Runs criteria 1 to 10. The in-suite determinism check (10) re-runs the
/// I1 pipeline and compares serialized bytes; the full two-run comparison of
/// the suite itself lives in the acceptance test binary.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// Individual criteria, exposed for the tests.
CriterionResult criterion_spectral(std::uint64_t seed);
CriterionResult criterion_scaled(std::uint64_t seed);
CriterionResult criterion_affine(std::uint64_t seed);
CriterionResult criterion_thresholds();
/// Random-circuit merge check plus any pipeline merge rows passed in.
CriterionResult criterion_merge(std::uint64_t seed, const std::vector<thm::InequalityRow>& pipeline_rows = {});
CriterionResult criterion_negative_controls();

/// Criteria 5 to 7 share the three end-to-end pipelines.
std::vector<CriterionResult> criteria_theorems(std::uint64_t seed);

std::string criterion_line(const CriterionResult& c);

/// Combined report with rows prefixed "cN/".
thm::ExperimentReport combine(const std::vector<CriterionResult>& results, std::uint64_t seed);

}  // namespace qpost::app
