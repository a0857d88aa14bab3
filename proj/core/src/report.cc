// Copyright 2026 The autbound Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "autbound/report.h"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "autbound/errors.h"
#include "json.hpp"

namespace autbound {
namespace {

using Json = nlohmann::ordered_json;

const char* Bool(bool b) { return b ? "true" : "false"; }

// Tabs and newlines would break the row structure.
std::string Cell(std::string text) {
  for (char& c : text) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return text;
}

std::string Row(std::initializer_list<std::string> cells) {
  std::string line;
  bool first = true;
  for (const auto& cell : cells) {
    if (!first) line += '\t';
    line += Cell(cell);
    first = false;
  }
  return line + '\n';
}

std::string Dump(const Json& json) { return json.dump(2) + "\n"; }

Json SubgroupJson(const Subgroup& s) {
  Json out;
  out["order"] = s.order();
  out["members"] = s.members();
  return out;
}

}  // namespace

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "tsv") return ReportFormat::kTsv;
  if (name == "json") return ReportFormat::kJson;
  throw GroupError(ErrorKind::kInvalidArgument, "unknown format '" + std::string(name) + "'");
}

std::string FormatBoundReport(const BoundReport& report, ReportFormat format,
                              std::size_t max_bits) {
  if (format == ReportFormat::kTsv) {
    std::string out = Row({"bound_id", "lhs", "rhs", "holds", "equality"});
    for (const auto& e : report.entries) {
      out += Row({e.bound_id, e.lhs.str(), e.rhs.ToString(max_bits), Bool(e.holds),
                  Bool(e.equality)});
    }
    return out;
  }
  Json object;
  object["group"] = report.group;
  object["order"] = report.order;
  object["n"] = report.n;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json row;
    row["bound_id"] = e.bound_id;
    row["lhs"] = e.lhs.str();
    row["rhs"] = e.rhs.ToString(max_bits);
    row["holds"] = e.holds;
    row["equality"] = e.equality;
    entries.push_back(std::move(row));
  }
  object["entries"] = std::move(entries);
  object["phi_value"] = report.phi_value;
  object["end_count"] = report.end_count ? Json(*report.end_count) : Json(nullptr);
  return Dump(Json::array({std::move(object)}));
}

std::string FormatWitness(const TheoremAWitness& witness, ReportFormat format) {
  if (format == ReportFormat::kTsv) {
    std::string out = Row({"check_id", "passed", "detail"});
    for (const auto& c : witness.checks) out += Row({c.check_id, Bool(c.passed), c.detail});
    return out;
  }
  Json object;
  object["group"] = witness.group;
  object["m"] = witness.m;
  object["u"] = SubgroupJson(witness.u);
  object["c"] = SubgroupJson(witness.c);
  object["d"] = SubgroupJson(witness.d);
  object["n_factor"] = witness.n_factor.str();
  Json checks = Json::array();
  for (const auto& c : witness.checks) {
    Json row;
    row["check_id"] = c.check_id;
    row["passed"] = c.passed;
    row["detail"] = c.detail;
    checks.push_back(std::move(row));
  }
  object["checks"] = std::move(checks);
  return Dump(Json::array({std::move(object)}));
}

std::string FormatVerifyReport(const VerifyReport& report, ReportFormat format) {
  if (format == ReportFormat::kTsv) {
    std::string out = Row({"group", "suite", "check", "passed", "detail"});
    for (const auto& r : report.rows) {
      out += Row({r.group, r.suite, r.check, Bool(r.passed), r.detail});
    }
    return out;
  }
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row;
    row["group"] = r.group;
    row["suite"] = r.suite;
    row["check"] = r.check;
    row["passed"] = r.passed;
    row["detail"] = r.detail;
    rows.push_back(std::move(row));
  }
  return Dump(rows);
}

std::string FormatClassification(const std::vector<ClassificationEntry>& table,
                                 ReportFormat format) {
  if (format == ReportFormat::kTsv) {
    std::string out = Row({"aut_order", "group_order", "name", "isomorphic_duplicates"});
    for (const auto& e : table) {
      std::string dups;
      for (const auto& d : e.isomorphic_duplicates) dups += (dups.empty() ? "" : ",") + d;
      out += Row({std::to_string(e.aut_order), std::to_string(e.group_order), e.name, dups});
    }
    return out;
  }
  Json rows = Json::array();
  for (const auto& e : table) {
    Json row;
    row["aut_order"] = e.aut_order;
    row["group_order"] = e.group_order;
    row["name"] = e.name;
    row["isomorphic_duplicates"] = e.isomorphic_duplicates;
    rows.push_back(std::move(row));
  }
  return Dump(rows);
}

void WriteReport(const std::string& content, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << content << std::flush;
    if (!std::cout) throw GroupError(ErrorKind::kIoError, "cannot write to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw GroupError(ErrorKind::kIoError, "cannot open " + path + " for writing");
  out << content;
  out.close();
  if (!out) throw GroupError(ErrorKind::kIoError, "write to " + path + " failed");
}

}  // namespace autbound
