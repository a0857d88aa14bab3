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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "autbound/catalog.h"
#include "autbound/errors.h"
#include "autbound/oracles.h"
#include "autbound/report.h"
#include "autbound/verify.h"
#include "json.hpp"
#include "test_util.h"

namespace autbound {
namespace {

using K = StandardKind;

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("autbound_" + name)).string();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> Names(const std::vector<ClassificationEntry>& table) {
  std::vector<std::string> out;
  for (const auto& e : table) out.push_back(e.name);
  return out;
}

CatalogRecord Builtin(const std::string& name, const StandardKind& kind) {
  return CatalogRecord{name, BuiltinSource{kind}, std::nullopt, std::nullopt};
}

TEST(ParseCatalogTest, CyclicSixFromOneCycle) {
  const auto records = ParseCatalogText(
      "# one record\n"
      "group C6\n"
      "degree 6\n"
      "gen 1 2 3 4 5 0\n"
      "expect order 6\n"
      "end\n");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].name, "C6");
  EXPECT_EQ(records[0].expected_order, 6u);
  const GroupPtr g = Realize(records[0]);
  EXPECT_EQ(g->order(), 6u);
  EXPECT_EQ(g->name(), "C6");
}

TEST(ParseCatalogTest, ExpectationMismatchOnRealization) {
  const auto records = ParseCatalogText(
      "group S3\ndegree 3\ngen 1 2 0\ngen 1 0 2\nexpect order 8\nend\n");
  try {
    Realize(records[0]);
    FAIL();
  } catch (const GroupError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kExpectationMismatch);
  }
}

TEST(ParseCatalogTest, EmptyFileGivesEmptyList) {
  const auto path = TempPath("empty.cat");
  { std::ofstream(path) << ""; }
  EXPECT_TRUE(ParseCatalog(path).empty());
  EXPECT_TRUE(ParseCatalogText("\n# nothing\n\n").empty());
}

TEST(ParseCatalogTest, RecordsKeepFileOrderAndAllSourceKinds) {
  const auto table = TempPath("c2.tbl");
  { std::ofstream(table) << "order 2\n0 1\n1 0\n"; }
  const auto path = TempPath("mixed.cat");
  {
    std::ofstream(path) << "group Z\nbuiltin cyclic(4)\nexpect aut 2\nend\n"
                        << "group A\ncayley " << std::filesystem::path(table).filename().string()
                        << "\nend\n"
                        << "group M\ndegree 2\nend\n";
  }
  const auto records = ParseCatalog(path);
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[0].name, "Z");
  EXPECT_EQ(records[0].expected_aut_order, 2u);
  EXPECT_EQ(records[1].name, "A");
  EXPECT_EQ(Realize(records[1])->order(), 2u);
  EXPECT_EQ(Realize(records[2])->order(), 1u);
}

TEST(ParseCatalogTest, ErrorsCarryLineNumbers) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"group A\ndegree 3\ngen 0 1\nend\n", ":3:"},
      {"group A\ndegree 3\ngen 0 0 1\nend\n", ":3:"},
      {"gen 0 1\n", ":1:"},
      {"group A\nbuiltin cyclic(3)\nflavor sweet\nend\n", ":3:"},
      {"group A\nbuiltin cyclic(3)\n", ":1:"},
      {"group A\nend\n", ":2:"},
      {"group A\nbuiltin cyclic(3)\nexpect order x\nend\n", ":3:"},
  };
  for (const auto& [text, where] : cases) {
    try {
      ParseCatalogText(text, "cat");
      ADD_FAILURE() << text;
    } catch (const GroupError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kParseError) << text;
      EXPECT_NE(std::string(e.what()).find("cat" + where), std::string::npos) << e.what();
    }
  }
}

TEST(ParseCatalogTest, DuplicateNamesAreRejected) {
  try {
    ParseCatalogText("group A\nbuiltin cyclic(2)\nend\ngroup A\nbuiltin cyclic(3)\nend\n");
    FAIL();
  } catch (const GroupError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDuplicateName);
  }
}

TEST(ParseCatalogTest, MissingFileIsIoError) {
  try {
    ParseCatalog("/nonexistent/corpus.cat");
    FAIL();
  } catch (const GroupError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIoError);
  }
}

TEST(CatalogRoundTripTest, RegularRepresentationPreservesIsomorphismType) {
  const auto corpus = BundledCorpus();
  std::vector<CatalogRecord> regular;
  std::vector<GroupPtr> originals;
  for (const auto& record : corpus) {
    const GroupPtr g = Realize(record);
    if (g->order() > 24) continue;
    originals.push_back(g);
    regular.push_back(GeneratorRecordFor(record.name, g));
  }
  const auto reparsed = ParseCatalogText(FormatCatalog(regular));
  ASSERT_EQ(reparsed.size(), originals.size());
  for (std::size_t i = 0; i < reparsed.size(); ++i) {
    EXPECT_TRUE(FindIsomorphism(originals[i], Realize(reparsed[i]))) << reparsed[i].name;
  }
}

TEST(CatalogRoundTripTest, BundledCorpusSerializesLosslessly) {
  const auto corpus = BundledCorpus();
  const std::string text = FormatCatalog(corpus);
  EXPECT_EQ(FormatCatalog(ParseCatalogText(text)), text);
}

TEST(BundledCorpusTest, ShapeAndExpectations) {
  const auto corpus = BundledCorpus();
  EXPECT_GE(corpus.size(), 120u);
  std::set<std::string> names;
  for (const auto& record : corpus) {
    EXPECT_TRUE(names.insert(record.name).second) << record.name;
    const GroupPtr g = Realize(record);
    EXPECT_LE(g->order(), 64u);
    if (record.expected_aut_order) {
      EXPECT_EQ(CountAutomorphisms(g).order, *record.expected_aut_order) << record.name;
    }
  }
  // Every abelian group of order 16 appears: 5 isomorphism types.
  std::size_t abelian16 = 0;
  for (const auto& record : corpus) {
    const GroupPtr g = Realize(record);
    abelian16 += g->order() == 16 && g->is_abelian();
  }
  EXPECT_EQ(abelian16, 5u);
}

TEST(ClassifyByAutTest, TrivialAndC2HaveOneAutomorphism) {
  const std::vector<CatalogRecord> corpus = {
      Builtin("1", K::Cyclic(1)), Builtin("C2", K::Cyclic(2)), Builtin("C3", K::Cyclic(3))};
  ASSERT_EQ(NaiveAutomorphismCount(Realize(corpus[1])), 1u);
  ASSERT_EQ(NaiveAutomorphismCount(Realize(corpus[2])), 2u);
  EXPECT_EQ(Names(ClassifyByAut(corpus, 1)), (std::vector<std::string>{"1", "C2"}));
  EXPECT_TRUE(ClassifyByAut(corpus, 0).empty());
}

TEST(ClassifyByAutTest, AbelianUpToSixteenWithTwoAutomorphisms) {
  std::vector<CatalogRecord> corpus;
  std::set<std::string> oracle;
  // The abelian records generated from partitions, named C<n> or C<a>xC<b>...
  for (const auto& record : BundledCorpus()) {
    const GroupPtr g = Realize(record);
    if (!g->is_abelian() || g->order() > 16 || record.name[0] != 'C') continue;
    corpus.push_back(record);
    if (UnprunedAutomorphismCount(g) <= 2) oracle.insert(record.name);
  }
  EXPECT_EQ(oracle, (std::set<std::string>{"C1", "C2", "C3", "C4", "C6"}));
  const auto names = Names(ClassifyByAut(corpus, 2));
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()), oracle);
  EXPECT_EQ(names, (std::vector<std::string>{"C1", "C2", "C3", "C4", "C6"}));
}

TEST(ClassifyByAutTest, DeduplicatesIsomorphicRecords) {
  const std::vector<CatalogRecord> corpus = {
      Builtin("S3", K::Symmetric(3)), Builtin("D6", K::Dihedral(3)),
      Builtin("C6", K::Cyclic(6)), Builtin("C2xC3", K::Abelian({2, 3}))};
  const auto table = ClassifyByAut(corpus, 10);
  ASSERT_EQ(table.size(), 2u);
  EXPECT_EQ(table[0].name, "C2xC3");
  EXPECT_EQ(table[0].isomorphic_duplicates, (std::vector<std::string>{"C6"}));
  EXPECT_EQ(table[1].name, "D6");
  EXPECT_EQ(table[1].aut_order, 6u);
  EXPECT_EQ(table[1].isomorphic_duplicates, (std::vector<std::string>{"S3"}));
}

TEST(ClassifyByAutTest, InvariantUnderCorpusPermutation) {
  auto corpus = BundledCorpus();
  const auto expected = FormatClassification(ClassifyByAut(corpus, 48), ReportFormat::kTsv);
  std::mt19937 rng(12345);
  for (int round = 0; round < 3; ++round) {
    std::shuffle(corpus.begin(), corpus.end(), rng);
    EXPECT_EQ(FormatClassification(ClassifyByAut(corpus, 48), ReportFormat::kTsv), expected);
  }
}

TEST(VerifySuiteTest, EmptySuiteSetGivesEmptySuccess) {
  const auto report = VerifySuite(BundledCorpus(), {});
  EXPECT_TRUE(report.rows.empty());
  EXPECT_TRUE(report.AllPassed());
}

TEST(VerifySuiteTest, BoundsSuitePassesOnBundledCorpus) {
  const auto report = VerifySuite(BundledCorpus(), {Suite::kBounds});
  EXPECT_FALSE(report.rows.empty());
  for (const auto& row : report.rows) {
    EXPECT_TRUE(row.passed) << row.group << " " << row.check << ": " << row.detail;
    EXPECT_EQ(row.suite, "bounds");
  }
}

TEST(VerifySuiteTest, CorruptedCayleyFileSurfacesNotAssociative) {
  const auto table = TempPath("loop5.tbl");
  { std::ofstream(table) << "order 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n"; }
  const std::vector<CatalogRecord> corpus = {
      CatalogRecord{"loop", CayleySource{table}, std::nullopt, std::nullopt}};
  try {
    VerifySuite(corpus, {Suite::kCore});
    FAIL();
  } catch (const GroupError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAssociative);
    EXPECT_NE(std::string(e.what()).find(table), std::string::npos);
  }
}

TEST(VerifySuiteTest, SuiteIdsParse) {
  EXPECT_EQ(ParseSuiteList("core,bounds"), (std::set<Suite>{Suite::kCore, Suite::kBounds}));
  EXPECT_EQ(ParseSuiteList("all"), AllSuites());
  EXPECT_TRUE(ParseSuiteList("").empty());
  try {
    ParseSuiteList("core,nope");
    FAIL();
  } catch (const GroupError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
  }
}

TEST(EmitReportTest, EmptyTsvIsHeaderOnly) {
  const auto path = TempPath("empty.tsv");
  WriteReport(FormatVerifyReport(VerifyReport{}, ReportFormat::kTsv), path);
  EXPECT_EQ(ReadFile(path), "group\tsuite\tcheck\tpassed\tdetail\n");
}

TEST(EmitReportTest, BoundRowFields) {
  BoundReport report;
  report.group = "C3";
  report.entries.push_back({"easy", 2, BigExpr(BigInt(2)), true, true});
  EXPECT_EQ(FormatBoundReport(report, ReportFormat::kTsv),
            "bound_id\tlhs\trhs\tholds\tequality\neasy\t2\t2\ttrue\ttrue\n");
}

TEST(EmitReportTest, JsonKeysFollowDeclarationOrder) {
  const GroupPtr q8 = StandardGroup(K::Quaternion8());
  const auto report = MakeBoundReport(q8, CountAutomorphisms(q8));
  const auto json = nlohmann::ordered_json::parse(FormatBoundReport(report, ReportFormat::kJson));
  ASSERT_TRUE(json.is_array());
  std::vector<std::string> keys;
  for (const auto& [key, value] : json[0].items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"group", "order", "n", "entries", "phi_value",
                                            "end_count"}));
  std::vector<std::string> entry_keys;
  for (const auto& [key, value] : json[0]["entries"][0].items()) entry_keys.push_back(key);
  EXPECT_EQ(entry_keys,
            (std::vector<std::string>{"bound_id", "lhs", "rhs", "holds", "equality"}));
  // Big integers are strings, never floating point.
  for (const auto& e : json[0]["entries"]) {
    EXPECT_TRUE(e["lhs"].is_string());
    EXPECT_TRUE(e["rhs"].is_string());
  }

  const auto witness = MakeTheoremAWitness(q8, CountAutomorphisms(q8));
  const auto wjson = nlohmann::ordered_json::parse(FormatWitness(witness, ReportFormat::kJson));
  std::vector<std::string> wkeys;
  for (const auto& [key, value] : wjson[0].items()) wkeys.push_back(key);
  EXPECT_EQ(wkeys, (std::vector<std::string>{"group", "m", "u", "c", "d", "n_factor", "checks"}));
}

TEST(EmitReportTest, SameReportTwiceIsByteIdentical) {
  const auto corpus = ParseCatalogText("group A\nbuiltin dihedral(4)\nend\n");
  for (const auto format : {ReportFormat::kTsv, ReportFormat::kJson}) {
    const auto first = TempPath("first.out");
    const auto second = TempPath("second.out");
    WriteReport(FormatVerifyReport(VerifySuite(corpus, AllSuites()), format), first);
    WriteReport(FormatVerifyReport(VerifySuite(corpus, AllSuites()), format), second);
    EXPECT_EQ(ReadFile(first), ReadFile(second));
    EXPECT_EQ(ReadFile(first).find('\r'), std::string::npos);
  }
}

TEST(EmitReportTest, UnwritablePathIsIoError) {
  try {
    WriteReport("x", "/nonexistent/dir/report.tsv");
    FAIL();
  } catch (const GroupError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIoError);
  }
}

}  // namespace
}  // namespace autbound
