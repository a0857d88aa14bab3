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

#ifndef AUTBOUND_VERIFY_H_
#define AUTBOUND_VERIFY_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "autbound/catalog.h"

namespace autbound {

enum class Suite { kCore, kAbelian, kAut, kBounds, kTheoremA, kConjectures };

std::string_view SuiteName(Suite suite);
std::optional<Suite> ParseSuite(std::string_view name);
std::set<Suite> AllSuites();
// Comma-separated suite ids; "all" selects every suite. Throws
// kInvalidArgument on an unknown id.
std::set<Suite> ParseSuiteList(std::string_view list);

struct VerifyRow {
  std::string group;
  std::string suite;
  std::string check;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;

  bool AllPassed() const;
  std::size_t FailureCount() const;
};

struct VerifyOptions {
  std::size_t identity_max_order = 24;     // exhaustive commutator identities
  std::size_t split_max_order = 32;        // every element / every subgroup splits
  std::size_t naive_oracle_max_order = 8;  // all bijections
  std::size_t unpruned_oracle_max_order = 16;
  std::size_t end_max_order = 24;
  std::uint64_t enumerate_max_aut = 50000;
};

// Runs the selected suites over every record, in corpus order, one row per
// (group, check). Realization errors propagate; failed checks (including
// internal assertion failures) become rows with passed = false.
VerifyReport VerifySuite(const std::vector<CatalogRecord>& corpus,
                         const std::set<Suite>& suites, const VerifyOptions& options = {});

}  // namespace autbound

#endif  // AUTBOUND_VERIFY_H_
