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

#include "qpost/theorems/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qpost::thm {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::LessEqual:
      return "<=";
    case Relation::Less:
      return "<";
    case Relation::GreaterEqual:
      return ">=";
    case Relation::Greater:
      return ">";
    case Relation::Equal:
      return "==";
  }
  return "?";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Vacuous:
      return "VACUOUS";
  }
  return "?";
}

namespace {

double signed_margin(double lhs, Relation rel, double rhs, double tolerance) {
  switch (rel) {
    case Relation::LessEqual:
    case Relation::Less:
      return rhs - lhs;
    case Relation::GreaterEqual:
    case Relation::Greater:
      return lhs - rhs;
    case Relation::Equal:
      return tolerance - std::abs(lhs - rhs);
  }
  return 0.0;
}

}  // namespace

InequalityRow check(std::string name, double lhs, Relation rel, double rhs, double tolerance) {
  InequalityRow row;
  row.name = std::move(name);
  row.lhs = lhs;
  row.rhs = rhs;
  row.relation = rel;
  row.tolerance = tolerance;
  row.margin = signed_margin(lhs, rel, rhs, tolerance);
  bool ok = false;
  switch (rel) {
    case Relation::LessEqual:
    case Relation::GreaterEqual:
      ok = row.margin >= -tolerance;
      break;
    case Relation::Less:
    case Relation::Greater:
      ok = row.margin > 0.0;
      break;
    case Relation::Equal:
      ok = row.margin >= 0.0;
      break;
  }
  if (std::isnan(lhs) || std::isnan(rhs)) ok = false;
  row.status = ok ? Status::Pass : Status::Fail;
  return row;
}

InequalityRow vacuous(std::string name, double lhs, Relation rel, double rhs, std::string note) {
  InequalityRow row = check(std::move(name), lhs, rel, rhs);
  row.status = Status::Vacuous;
  row.note = std::move(note);
  return row;
}

void ExperimentReport::append(const ExperimentReport& other, const std::string& prefix) {
  for (auto row : other.rows) {
    row.name = prefix + row.name;
    rows.push_back(std::move(row));
  }
  for (const auto& n : other.notes) notes.push_back(prefix + n);
  details[other.kind] = to_json(other);
}

bool ExperimentReport::passed() const { return count(Status::Fail) == 0; }

int ExperimentReport::count(Status s) const {
  int k = 0;
  for (const auto& r : rows) k += r.status == s;
  return k;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf.data(), ptr);
}

std::string to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "name,lhs,rhs,margin,pass\n";
  for (const auto& r : report.rows) {
    out << r.name << ',' << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
        << format_double(r.margin) << ',' << to_string(r.status) << '\n';
  }
  return out.str();
}

namespace {

Json number(double v) {
  // JSON has no encoding for non-finite values; keep them as text.
  if (std::isfinite(v)) return v;
  return format_double(v);
}

}  // namespace

Json to_json(const ExperimentReport& report) {
  Json j = Json::object();
  j["kind"] = report.kind;
  j["provenance"] = report.provenance;
  j["passed"] = report.passed();
  j["counts"] = {{"pass", report.count(Status::Pass)},
                 {"fail", report.count(Status::Fail)},
                 {"vacuous", report.count(Status::Vacuous)}};
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row = {{"name", r.name},
                {"lhs", number(r.lhs)},
                {"relation", std::string(to_string(r.relation))},
                {"rhs", number(r.rhs)},
                {"tolerance", r.tolerance},
                {"margin", number(r.margin)},
                {"status", std::string(to_string(r.status))}};
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(std::move(row));
  }
  j["inequalities"] = std::move(rows);
  j["notes"] = report.notes;
  j["details"] = report.details;
  return j;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    f << contents;
    if (!f.flush()) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

}  // namespace qpost::thm
