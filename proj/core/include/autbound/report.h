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

#ifndef AUTBOUND_REPORT_H_
#define AUTBOUND_REPORT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autbound/big_expr.h"
#include "autbound/bounds.h"
#include "autbound/catalog.h"
#include "autbound/verify.h"

namespace autbound {

enum class ReportFormat { kTsv, kJson };

// Throws kInvalidArgument for anything but "tsv" or "json".
ReportFormat ParseReportFormat(std::string_view name);

// TSV: a header row, then one tab-separated row per entry, LF endings.
// JSON: an array of objects whose keys follow the struct field order.
// Big integers are written in decimal, or in power form once they exceed
// `max_bits` bits.
std::string FormatBoundReport(const BoundReport& report, ReportFormat format,
                              std::size_t max_bits = BigExpr::kDefaultMaterializeBits);
std::string FormatWitness(const TheoremAWitness& witness, ReportFormat format);
std::string FormatVerifyReport(const VerifyReport& report, ReportFormat format);
std::string FormatClassification(const std::vector<ClassificationEntry>& table,
                                 ReportFormat format);

// Writes `content` to `path`, or to stdout when path is empty or "-".
// Throws kIoError.
void WriteReport(const std::string& content, const std::string& path);

}  // namespace autbound

#endif  // AUTBOUND_REPORT_H_
