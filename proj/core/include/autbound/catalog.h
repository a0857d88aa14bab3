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

#ifndef AUTBOUND_CATALOG_H_
#define AUTBOUND_CATALOG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "autbound/group.h"

namespace autbound {

struct GeneratorSource {
  std::size_t degree = 1;
  std::vector<Permutation> generators;
};

struct CayleySource {
  std::string path;  // resolved relative to the catalog file
};

struct BuiltinSource {
  StandardKind kind;
};

using CatalogSource = std::variant<GeneratorSource, CayleySource, BuiltinSource>;

struct CatalogRecord {
  std::string name;
  CatalogSource source;
  std::optional<std::uint64_t> expected_order;
  std::optional<std::uint64_t> expected_aut_order;
};

// Catalog text format, one record per block:
//
//   group <name>
//   degree <d>                 \  permutation generators, 0-based images;
//   gen <d images>             /  one or more gen lines (or none)
//   builtin <kind>             alternatively, e.g. builtin dihedral(4)
//   cayley <path>              alternatively, a Cayley-table file
//   expect order <k>           optional
//   expect aut <k>             optional
//   end
//
// Blank lines and '#' comments are ignored. Throws kParseError (with the
// line number) and kDuplicateName.
std::vector<CatalogRecord> ParseCatalogText(std::string_view text,
                                            const std::string& origin = "<catalog>",
                                            const std::string& base_dir = {});
std::vector<CatalogRecord> ParseCatalog(const std::string& path);
std::string FormatCatalog(const std::vector<CatalogRecord>& records);

// Builds the group; throws kExpectationMismatch if the order differs from
// expected_order.
GroupPtr Realize(const CatalogRecord& record);

// Generator record through the left regular representation of a minimal
// generating sequence.
CatalogRecord GeneratorRecordFor(const std::string& name, const GroupPtr& group);

// The catalog shipped with the library: every abelian group of order <= 64,
// dihedral, dicyclic and semidihedral families up to order 64, small
// symmetric and alternating groups, and assorted direct products.
std::vector<CatalogRecord> BundledCorpus();

const CatalogRecord* FindRecord(const std::vector<CatalogRecord>& records,
                                std::string_view name);

struct ClassificationEntry {
  std::uint64_t aut_order = 0;
  std::uint64_t group_order = 0;
  std::string name;
  std::vector<std::string> isomorphic_duplicates;
};

// Groups with |Aut(G)| <= max_aut, one entry per isomorphism class, sorted by
// (aut order, group order, name). Each class is named by its least record
// name; the other records of the class are listed as duplicates.
std::vector<ClassificationEntry> ClassifyByAut(const std::vector<CatalogRecord>& corpus,
                                               std::uint64_t max_aut);

}  // namespace autbound

#endif  // AUTBOUND_CATALOG_H_
