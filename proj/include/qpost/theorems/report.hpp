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

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace qpost::thm {

using Json = nlohmann::ordered_json;

enum class Relation { LessEqual, Less, GreaterEqual, Greater, Equal };
enum class Status { Pass, Fail, Vacuous };

std::string_view to_string(Relation r);
std::string_view to_string(Status s);

/// One checked inequality `lhs REL rhs`. The margin is signed so that a
/// nonnegative value means the inequality holds (strict relations need a
/// positive margin). For Equal, margin = tolerance - |lhs - rhs|.
struct InequalityRow {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  Relation relation = Relation::LessEqual;
  double tolerance = 0.0;
  double margin = 0.0;
  Status status = Status::Pass;
  std::string note;
};

InequalityRow check(std::string name, double lhs, Relation rel, double rhs, double tolerance = 0.0);
/// A row whose bound carries no information in this regime. Both sides are
/// still recorded; it never counts as a failure.
InequalityRow vacuous(std::string name, double lhs, Relation rel, double rhs, std::string note);

/// Per-run record: provenance, every checked inequality with both sides,
/// and free-form nested details for the JSON form.
struct ExperimentReport {
  std::string kind;
  Json provenance = Json::object();
  std::vector<InequalityRow> rows;
  Json details = Json::object();
  std::vector<std::string> notes;

  void add(InequalityRow row) { rows.push_back(std::move(row)); }
  void append(const ExperimentReport& other, const std::string& prefix);
  bool passed() const;
  int count(Status s) const;
};

std::string to_csv(const ExperimentReport& report);
Json to_json(const ExperimentReport& report);

/// Shortest text that reads back to the same double.
std::string format_double(double v);

/// Writes via a temporary file in the same directory, then renames.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace qpost::thm
