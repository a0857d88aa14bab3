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

#include "autbound/catalog.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "autbound/aut.h"
#include "autbound/errors.h"
#include "autbound/number_theory.h"

namespace autbound {
namespace {

std::vector<std::string> Tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

std::uint64_t ParseUnsigned(const std::string& token, const auto& fail) {
  std::size_t consumed = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(token, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed != token.size() || token.empty() || token[0] == '-') {
    throw fail("expected a non-negative integer, got '" + token + "'");
  }
  return value;
}

struct PendingRecord {
  std::string name;
  std::size_t start_line = 0;
  std::optional<std::size_t> degree;
  std::vector<Permutation> generators;
  std::optional<CayleySource> cayley;
  std::optional<BuiltinSource> builtin;
  std::optional<std::uint64_t> expected_order;
  std::optional<std::uint64_t> expected_aut_order;
};

}  // namespace

std::vector<CatalogRecord> ParseCatalogText(std::string_view text, const std::string& origin,
                                            const std::string& base_dir) {
  std::vector<CatalogRecord> records;
  std::set<std::string> names;
  std::optional<PendingRecord> pending;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    return GroupError(ErrorKind::kParseError,
                      origin + ":" + std::to_string(line_no) + ": " + what);
  };

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto tokens = Tokenize(line);
    if (tokens.empty()) continue;
    const std::string& keyword = tokens[0];

    if (keyword == "group") {
      if (pending) throw fail("'group' inside record '" + pending->name + "'");
      if (tokens.size() != 2) throw fail("expected 'group <name>'");
      pending = PendingRecord{};
      pending->name = tokens[1];
      pending->start_line = line_no;
      continue;
    }
    if (!pending) throw fail("'" + keyword + "' outside a record");

    if (keyword == "degree") {
      if (tokens.size() != 2) throw fail("expected 'degree <d>'");
      if (pending->degree) throw fail("repeated 'degree'");
      const auto d = ParseUnsigned(tokens[1], fail);
      if (d == 0) throw fail("degree must be positive");
      pending->degree = d;
    } else if (keyword == "gen") {
      if (!pending->degree) throw fail("'gen' before 'degree'");
      if (tokens.size() != *pending->degree + 1) {
        throw fail("expected " + std::to_string(*pending->degree) + " images");
      }
      std::vector<std::uint32_t> images;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        images.push_back(static_cast<std::uint32_t>(ParseUnsigned(tokens[i], fail)));
      }
      try {
        pending->generators.emplace_back(std::move(images));
      } catch (const GroupError& e) {
        throw fail(e.what());
      }
    } else if (keyword == "cayley") {
      if (tokens.size() != 2) throw fail("expected 'cayley <path>'");
      std::filesystem::path path(tokens[1]);
      if (path.is_relative() && !base_dir.empty()) path = std::filesystem::path(base_dir) / path;
      pending->cayley = CayleySource{path.string()};
    } else if (keyword == "builtin") {
      if (tokens.size() != 2) throw fail("expected 'builtin <kind>'");
      try {
        pending->builtin = BuiltinSource{ParseStandardKind(tokens[1])};
      } catch (const GroupError& e) {
        throw fail(e.what());
      }
    } else if (keyword == "expect") {
      if (tokens.size() != 3) throw fail("expected 'expect order|aut <k>'");
      const auto value = ParseUnsigned(tokens[2], fail);
      if (tokens[1] == "order") {
        pending->expected_order = value;
      } else if (tokens[1] == "aut") {
        pending->expected_aut_order = value;
      } else {
        throw fail("unknown expectation '" + tokens[1] + "'");
      }
    } else if (keyword == "end") {
      if (tokens.size() != 1) throw fail("unexpected tokens after 'end'");
      const int sources = (pending->degree ? 1 : 0) + (pending->cayley ? 1 : 0) +
                          (pending->builtin ? 1 : 0);
      if (sources != 1) {
        throw fail("record '" + pending->name +
                   "' needs exactly one of degree/gen, cayley, builtin");
      }
      if (!names.insert(pending->name).second) {
        throw GroupError(ErrorKind::kDuplicateName,
                         origin + ":" + std::to_string(pending->start_line) +
                             ": duplicate group name '" + pending->name + "'");
      }
      CatalogRecord record;
      record.name = pending->name;
      if (pending->degree) {
        record.source = GeneratorSource{*pending->degree, std::move(pending->generators)};
      } else if (pending->cayley) {
        record.source = *pending->cayley;
      } else {
        record.source = *pending->builtin;
      }
      record.expected_order = pending->expected_order;
      record.expected_aut_order = pending->expected_aut_order;
      records.push_back(std::move(record));
      pending.reset();
    } else {
      throw fail("unknown keyword '" + keyword + "'");
    }
  }
  if (pending) {
    throw GroupError(ErrorKind::kParseError,
                     origin + ":" + std::to_string(pending->start_line) + ": record '" +
                         pending->name + "' missing 'end'");
  }
  return records;
}

std::vector<CatalogRecord> ParseCatalog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GroupError(ErrorKind::kIoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const auto base = std::filesystem::path(path).parent_path().string();
  return ParseCatalogText(buffer.str(), path, base);
}

std::string FormatCatalog(const std::vector<CatalogRecord>& records) {
  std::string out;
  for (const auto& record : records) {
    out += "group " + record.name + "\n";
    if (const auto* gens = std::get_if<GeneratorSource>(&record.source)) {
      out += "degree " + std::to_string(gens->degree) + "\n";
      for (const auto& g : gens->generators) {
        out += "gen";
        for (const auto image : g.images()) out += " " + std::to_string(image);
        out += "\n";
      }
    } else if (const auto* cayley = std::get_if<CayleySource>(&record.source)) {
      out += "cayley " + cayley->path + "\n";
    } else {
      out += "builtin " + FormatStandardKind(std::get<BuiltinSource>(record.source).kind) + "\n";
    }
    if (record.expected_order) {
      out += "expect order " + std::to_string(*record.expected_order) + "\n";
    }
    if (record.expected_aut_order) {
      out += "expect aut " + std::to_string(*record.expected_aut_order) + "\n";
    }
    out += "end\n";
  }
  return out;
}

GroupPtr Realize(const CatalogRecord& record) {
  GroupPtr group;
  if (const auto* gens = std::get_if<GeneratorSource>(&record.source)) {
    group = FromGenerators(gens->generators, gens->degree, MaxOrder());
  } else if (const auto* cayley = std::get_if<CayleySource>(&record.source)) {
    group = ReadCayleyTable(cayley->path);
  } else {
    group = StandardGroup(std::get<BuiltinSource>(record.source).kind, MaxOrder());
  }
  if (record.expected_order && *record.expected_order != group->order()) {
    throw GroupError(ErrorKind::kExpectationMismatch,
                     record.name + ": expected order " +
                         std::to_string(*record.expected_order) + ", realized order " +
                         std::to_string(group->order()));
  }
  return group->renamed(record.name);
}

CatalogRecord GeneratorRecordFor(const std::string& name, const GroupPtr& group) {
  GeneratorSource source;
  source.degree = group->order();
  for (const Element g : MinimalGeneratingSequence(group)) {
    std::vector<std::uint32_t> images(group->order());
    for (std::size_t x = 0; x < group->order(); ++x) {
      images[x] = group->mul(g, static_cast<Element>(x));
    }
    source.generators.emplace_back(std::move(images));
  }
  CatalogRecord record;
  record.name = name;
  record.source = std::move(source);
  record.expected_order = group->order();
  return record;
}

namespace {

// Partitions of k into non-increasing parts.
void Partitions(std::size_t k, std::size_t max_part, std::vector<std::size_t>& current,
                std::vector<std::vector<std::size_t>>& out) {
  if (k == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t part = std::min(k, max_part); part >= 1; --part) {
    current.push_back(part);
    Partitions(k - part, part, current, out);
    current.pop_back();
  }
}

// Invariant factors d1 | d2 | ... | dr of every abelian group of order n.
std::vector<std::vector<std::size_t>> AbelianInvariantFactors(std::size_t n) {
  std::vector<std::vector<std::size_t>> result = {{}};
  std::map<std::uint64_t, std::size_t> exponents;
  for (const auto p : PrimeFactorsWithMultiplicity(n)) ++exponents[p];
  for (const auto& [p, e] : exponents) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> current;
    Partitions(e, e, current, parts);
    std::vector<std::vector<std::size_t>> next;
    for (const auto& prefix : result) {
      for (const auto& partition : parts) {
        // Largest parts go to the last invariant factor.
        std::vector<std::size_t> merged = prefix;
        const std::size_t width = std::max(merged.size(), partition.size());
        merged.insert(merged.begin(), width - merged.size(), 1);
        for (std::size_t i = 0; i < partition.size(); ++i) {
          std::size_t power = 1;
          for (std::size_t j = 0; j < partition[i]; ++j) power *= p;
          merged[width - 1 - i] *= power;
        }
        next.push_back(std::move(merged));
      }
    }
    result = std::move(next);
  }
  return result;
}

std::uint64_t GeneralLinearOrder(std::uint64_t p, std::uint64_t k) {
  std::uint64_t pk = 1;
  for (std::uint64_t i = 0; i < k; ++i) pk *= p;
  std::uint64_t order = 1;
  std::uint64_t pi = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    order *= pk - pi;
    pi *= p;
  }
  return order;
}

CatalogRecord Builtin(std::string name, StandardKind kind, std::uint64_t order,
                      std::optional<std::uint64_t> aut = std::nullopt) {
  return CatalogRecord{std::move(name), BuiltinSource{std::move(kind)}, order, aut};
}

CatalogRecord Generators(std::string name, std::size_t degree,
                         std::vector<std::vector<std::uint32_t>> gens, std::uint64_t order,
                         std::optional<std::uint64_t> aut = std::nullopt) {
  GeneratorSource source{degree, {}};
  for (auto& g : gens) source.generators.emplace_back(std::move(g));
  return CatalogRecord{std::move(name), std::move(source), order, aut};
}

}  // namespace

std::vector<CatalogRecord> BundledCorpus() {
  using K = StandardKind;
  std::vector<CatalogRecord> corpus;

  for (std::size_t n = 1; n <= 64; ++n) {
    for (const auto& factors : AbelianInvariantFactors(n)) {
      std::optional<std::uint64_t> aut;
      std::string name;
      if (factors.size() <= 1) {
        name = "C" + std::to_string(n);
        aut = EulerPhi(n);
      } else {
        for (std::size_t i = 0; i < factors.size(); ++i) {
          name += (i ? "xC" : "C") + std::to_string(factors[i]);
        }
        if (IsPrime(factors.front()) && factors.front() == factors.back()) {
          aut = GeneralLinearOrder(factors.front(), factors.size());
        }
      }
      const K kind = factors.size() <= 1 ? K::Cyclic(n) : K::Abelian(factors);
      corpus.push_back(Builtin(name, kind, n, aut));
    }
  }

  // |Aut(D_{2n})| = n phi(n) for n >= 3.
  for (std::size_t n = 3; n <= 32; ++n) {
    corpus.push_back(Builtin("D" + std::to_string(2 * n), K::Dihedral(n), 2 * n,
                             n * EulerPhi(n)));
  }
  // |Aut(Dic_n)| = 2n phi(2n) for n >= 3; Q8 is the exception.
  corpus.push_back(Builtin("Q8", K::Quaternion8(), 8, 24));
  for (std::size_t n = 3; n <= 16; ++n) {
    corpus.push_back(Builtin("Dic" + std::to_string(n), K::Dicyclic(n), 4 * n,
                             2 * n * EulerPhi(2 * n)));
  }
  for (std::size_t n : {16, 32, 64}) {
    corpus.push_back(Builtin("SD" + std::to_string(n), K::Semidihedral(n), n));
  }

  corpus.push_back(Builtin("S1", K::Symmetric(1), 1, 1));
  corpus.push_back(Builtin("S2", K::Symmetric(2), 2, 1));
  corpus.push_back(Generators("S3", 3, {{1, 2, 0}, {1, 0, 2}}, 6, 6));
  corpus.push_back(Generators("S4", 4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, 24, 24));
  corpus.push_back(Generators("A4", 4, {{1, 2, 0, 3}, {0, 2, 3, 1}}, 12, 24));

  const K s3 = K::Symmetric(3);
  corpus.push_back(Builtin("C2xS3", K::Product(K::Cyclic(2), s3), 12, 12));
  corpus.push_back(Builtin("C3xS3", K::Product(K::Cyclic(3), s3), 18));
  corpus.push_back(Builtin("C4xS3", K::Product(K::Cyclic(4), s3), 24));
  corpus.push_back(Builtin("C5xS3", K::Product(K::Cyclic(5), s3), 30));
  corpus.push_back(Builtin("S3xS3", K::Product(s3, s3), 36, 72));
  corpus.push_back(Builtin("C2xC2xS3", K::Product(K::Abelian({2, 2}), s3), 24));
  corpus.push_back(Builtin("C2xQ8", K::Product(K::Cyclic(2), K::Quaternion8()), 16));
  corpus.push_back(Builtin("C2xD8", K::Product(K::Cyclic(2), K::Dihedral(4)), 16));
  corpus.push_back(Builtin("C3xQ8", K::Product(K::Cyclic(3), K::Quaternion8()), 24));
  corpus.push_back(Builtin("C3xD8", K::Product(K::Cyclic(3), K::Dihedral(4)), 24));
  corpus.push_back(Builtin("C2xDic3", K::Product(K::Cyclic(2), K::Dicyclic(3)), 24));
  corpus.push_back(Builtin("C2xA4", K::Product(K::Cyclic(2), K::Alternating(4)), 24));
  corpus.push_back(Builtin("C3xA4", K::Product(K::Cyclic(3), K::Alternating(4)), 36));
  corpus.push_back(Builtin("C2xS4", K::Product(K::Cyclic(2), K::Symmetric(4)), 48));
  corpus.push_back(Builtin("C4xD8", K::Product(K::Cyclic(4), K::Dihedral(4)), 32));
  corpus.push_back(Builtin("C4xQ8", K::Product(K::Cyclic(4), K::Quaternion8()), 32));
  corpus.push_back(Builtin("D8xC2xC2", K::Product(K::Dihedral(4), K::Abelian({2, 2})), 32));
  return corpus;
}

const CatalogRecord* FindRecord(const std::vector<CatalogRecord>& records,
                                std::string_view name) {
  for (const auto& record : records) {
    if (record.name == name) return &record;
  }
  return nullptr;
}

std::vector<ClassificationEntry> ClassifyByAut(const std::vector<CatalogRecord>& corpus,
                                               std::uint64_t max_aut) {
  struct Candidate {
    std::uint64_t aut_order;
    std::uint64_t group_order;
    std::string name;
    GroupPtr group;
  };
  std::vector<Candidate> candidates;
  for (const auto& record : corpus) {
    GroupPtr group = Realize(record);
    // Inn(G) <= Aut(G) gives a free lower bound.
    if (group->order() / Center(group).order() > max_aut) continue;
    const std::uint64_t aut_order = CountAutomorphisms(group).order;
    if (aut_order > max_aut) continue;
    candidates.push_back({aut_order, group->order(), record.name, std::move(group)});
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    return std::tie(a.aut_order, a.group_order, a.name) <
           std::tie(b.aut_order, b.group_order, b.name);
  });

  std::vector<ClassificationEntry> table;
  std::vector<GroupPtr> representatives;
  for (const auto& c : candidates) {
    bool duplicate = false;
    for (std::size_t i = table.size(); i-- > 0;) {
      if (table[i].aut_order != c.aut_order || table[i].group_order != c.group_order) break;
      if (FindIsomorphism(representatives[i], c.group)) {
        table[i].isomorphic_duplicates.push_back(c.name);
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    table.push_back({c.aut_order, c.group_order, c.name, {}});
    representatives.push_back(c.group);
  }
  return table;
}

}  // namespace autbound
