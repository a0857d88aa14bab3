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

// Command-line front end: inspects single groups and runs corpus-wide
// classification and verification. Exit status: 0 success, 1 a check
// failed, 2 bad input.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "autbound/abelian.h"
#include "autbound/aut.h"
#include "autbound/bounds.h"
#include "autbound/catalog.h"
#include "autbound/errors.h"
#include "autbound/report.h"
#include "autbound/verify.h"

namespace {

using namespace autbound;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

bool LooksLikeCayleyFile(const std::string& path) {
  std::ifstream in(path);
  std::string word;
  while (in >> word) {
    if (word[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    return word == "order";
  }
  return false;
}

// A Cayley-table file, a catalog file holding one record, a bundled corpus
// name, or a kind string such as "dihedral(4)".
GroupPtr ResolveTarget(const std::string& target) {
  if (std::filesystem::is_regular_file(target)) {
    if (LooksLikeCayleyFile(target)) return ReadCayleyTable(target);
    const auto records = ParseCatalog(target);
    if (records.size() != 1) {
      throw GroupError(ErrorKind::kInvalidArgument,
                       target + ": expected exactly one catalog record, found " +
                           std::to_string(records.size()));
    }
    return Realize(records.front());
  }
  const auto corpus = BundledCorpus();
  if (const auto* record = FindRecord(corpus, target)) return Realize(*record);
  return StandardGroup(ParseStandardKind(target), MaxOrder());
}

std::vector<CatalogRecord> LoadCorpus(const std::string& path) {
  return path.empty() ? BundledCorpus() : ParseCatalog(path);
}

std::string JoinNumbers(const std::vector<std::uint64_t>& values, const char* sep) {
  std::string out;
  for (const auto v : values) out += (out.empty() ? "" : sep) + std::to_string(v);
  return out;
}

int RunInfo(const std::string& target) {
  const GroupPtr group = ResolveTarget(target);
  const FiniteGroup& g = *group;
  std::cout << "name\t" << g.name() << "\n"
            << "order\t" << g.order() << "\n"
            << "abelian\t" << (g.is_abelian() ? "true" : "false") << "\n"
            << "exponent\t" << Exponent(g) << "\n"
            << "center_order\t" << Center(group).order() << "\n"
            << "commutator_order\t" << CommutatorSubgroup(group).order() << "\n"
            << "min_generators\t" << MinGeneratingSize(group) << "\n";
  const auto profile = OrderProfile(g);
  std::string orders;
  for (std::size_t k = 1; k < profile.size(); ++k) {
    if (profile[k] == 0) continue;
    orders += (orders.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(profile[k]);
  }
  std::cout << "element_orders\t" << orders << "\n"
            << "aut_order\t" << CountAutomorphisms(group).order << "\n";
  return kExitOk;
}

int RunAut(const std::string& target, bool list) {
  const GroupPtr group = ResolveTarget(target);
  const AutGroup aut = list ? AutomorphismGroup(group) : CountAutomorphisms(group);
  std::cout << "group\t" << group->name() << "\n"
            << "aut_order\t" << aut.order << "\n"
            << "inn_order\t" << InnerAutomorphismGroup(group).order << "\n";
  if (group->order() <= kDefaultEndomorphismMaxOrder) {
    std::cout << "end_count\t" << EndomorphismCount(group) << "\n";
  }
  for (const auto& alpha : aut.elements) {
    std::cout << "map";
    for (const auto x : alpha.map) std::cout << ' ' << x;
    std::cout << "\n";
  }
  return kExitOk;
}

void PrintDecomposition(const AbelianDecomposition& d) {
  std::cout << "factor\tgenerator\torder\n";
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    std::cout << i << '\t' << d.factors[i].generator << '\t' << d.factors[i].order << "\n";
  }
}

int RunDecompose(const std::string& target) {
  const GroupPtr group = ResolveTarget(target);
  if (group->is_abelian()) {
    const auto d = PrimaryDecomposition(group);
    std::cout << "# " << group->name() << " = " << JoinNumbers(d.factor_orders(), " x ")
              << "\n";
    PrintDecomposition(d);
    return kExitOk;
  }
  const auto q = Quotient(CommutatorSubgroup(group));
  const auto d = PrimaryDecomposition(q.group);
  std::cout << "# " << group->name() << " is not abelian; G/G' = "
            << (d.factors.empty() ? "1" : JoinNumbers(d.factor_orders(), " x "))
            << " (generators are coset indices)\n";
  PrintDecomposition(d);
  return kExitOk;
}

int RunBounds(const std::string& target, const std::string& format, const std::string& out,
              std::size_t materialize, bool witness) {
  const ReportFormat fmt = ParseReportFormat(format);
  const GroupPtr group = ResolveTarget(target);
  const AutGroup aut = CountAutomorphisms(group);
  if (witness) {
    const auto w = MakeTheoremAWitness(group, aut);
    WriteReport(FormatWitness(w, fmt), out);
    return w.AllPassed() ? kExitOk : kExitCheckFailed;
  }
  const auto report = MakeBoundReport(group, aut);
  WriteReport(FormatBoundReport(report, fmt, materialize), out);
  return report.AllHold() ? kExitOk : kExitCheckFailed;
}

int RunClassify(std::uint64_t max_aut, const std::string& corpus_path,
                const std::string& format) {
  const auto table = ClassifyByAut(LoadCorpus(corpus_path), max_aut);
  WriteReport(FormatClassification(table, ParseReportFormat(format)), "");
  return kExitOk;
}

int RunVerify(const std::string& suites, const std::string& corpus_path,
              const std::string& format, const std::string& out) {
  const ReportFormat fmt = ParseReportFormat(format);
  const auto selected = ParseSuiteList(suites);
  const auto report = VerifySuite(LoadCorpus(corpus_path), selected);
  WriteReport(FormatVerifyReport(report, fmt), out);
  std::cerr << report.rows.size() << " checks, " << report.FailureCount() << " failed\n";
  return report.AllPassed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphism counts and order bounds for finite groups"};
  app.require_subcommand(1);

  std::string target;
  std::string format = "tsv";
  std::string out;
  std::string corpus;

  auto* info = app.add_subcommand("info", "Basic invariants of one group");
  info->add_option("target", target, "Cayley file, catalog file, corpus name or kind")
      ->required();

  bool list = false;
  auto* aut = app.add_subcommand("aut", "Order of Aut(G), Inn(G) and End(G)");
  aut->add_option("target", target, "Cayley file, catalog file, corpus name or kind")
      ->required();
  aut->add_flag("--list", list, "Enumerate every automorphism");

  auto* decompose = app.add_subcommand("decompose", "Primary decomposition of G or G/G'");
  decompose->add_option("target", target, "Cayley file, catalog file, corpus name or kind")
      ->required();

  std::size_t materialize = BigExpr::kDefaultMaterializeBits;
  bool witness = false;
  auto* bounds = app.add_subcommand("bounds", "Evaluate every order bound for one group");
  bounds->add_option("target", target, "Cayley file, catalog file, corpus name or kind")
      ->required();
  bounds->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  bounds->add_option("--out", out, "Output path (default stdout)");
  bounds->add_option("--materialize", materialize,
                     "Print right-hand sides in decimal up to this many bits");
  bounds->add_flag("--witness", witness, "Emit the finiteness-argument witness instead");

  std::uint64_t max_aut = 0;
  auto* classify = app.add_subcommand("classify", "Groups with at most n automorphisms");
  classify->add_option("--max-aut", max_aut, "Upper bound on |Aut(G)|")->required();
  classify->add_option("--corpus", corpus, "Catalog file (default: bundled corpus)");
  classify->add_option("--format", format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));

  std::string suites = "all";
  auto* verify = app.add_subcommand("verify", "Run property suites over a corpus");
  verify->add_option("--suite", suites,
                     "Comma-separated: core,abelian,aut,bounds,theorem_a,conjectures or all");
  verify->add_option("--corpus", corpus, "Catalog file (default: bundled corpus)");
  verify->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  verify->add_option("--out", out, "Output path (default stdout)");

  auto* catalog = app.add_subcommand("catalog", "Print the bundled corpus in catalog format");
  catalog->add_option("--out", out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*info) return RunInfo(target);
    if (*aut) return RunAut(target, list);
    if (*decompose) return RunDecompose(target);
    if (*bounds) return RunBounds(target, format, out, materialize, witness);
    if (*classify) return RunClassify(max_aut, corpus, format);
    if (*verify) return RunVerify(suites, corpus, format, out);
    if (*catalog) {
      WriteReport(FormatCatalog(BundledCorpus()), out);
      return kExitOk;
    }
  } catch (const GroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitInputError;
}
