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

#include "autbound/verify.h"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "autbound/abelian.h"
#include "autbound/aut.h"
#include "autbound/bounds.h"
#include "autbound/errors.h"
#include "autbound/number_theory.h"
#include "autbound/oracles.h"
#include "autbound/subgroups.h"

namespace autbound {
namespace {

constexpr std::size_t kDetailBits = 256;

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome Pass(std::string detail = {}) { return {true, std::move(detail)}; }
Outcome Fail(std::string detail) { return {false, std::move(detail)}; }
Outcome Expect(bool ok, std::string detail) { return {ok, std::move(detail)}; }

std::string Str(std::uint64_t v) { return std::to_string(v); }

// Collects rows for one (group, suite) pair. Exceptions thrown by a check
// are reported as a failed row for that check.
class RowSink {
 public:
  RowSink(VerifyReport& report, std::string group, Suite suite)
      : report_(report), group_(std::move(group)), suite_(SuiteName(suite)) {}

  void Add(std::string check, Outcome outcome) {
    report_.rows.push_back(
        {group_, suite_, std::move(check), outcome.passed, std::move(outcome.detail)});
  }

  void Run(const std::string& check, const std::function<Outcome()>& body) {
    try {
      Add(check, body());
    } catch (const std::exception& e) {
      Add(check, Fail(std::string("exception: ") + e.what()));
    }
  }

 private:
  VerifyReport& report_;
  std::string group_;
  std::string suite_;
};

// Lazily computed per-group data shared between suites.
class GroupContext {
 public:
  explicit GroupContext(GroupPtr group) : group_(std::move(group)) {}

  const GroupPtr& group() const { return group_; }
  const FiniteGroup& g() const { return *group_; }

  const AutGroup& aut() {
    if (!aut_) aut_ = CountAutomorphisms(group_);
    return *aut_;
  }
  const Subgroup& center() {
    if (!center_) center_ = Center(group_);
    return *center_;
  }
  const Subgroup& derived() {
    if (!derived_) derived_ = CommutatorSubgroup(group_);
    return *derived_;
  }

 private:
  GroupPtr group_;
  std::optional<AutGroup> aut_;
  std::optional<Subgroup> center_;
  std::optional<Subgroup> derived_;
};

void CoreSuite(GroupContext& ctx, RowSink& sink, const VerifyOptions& options) {
  const FiniteGroup& g = ctx.g();
  const std::size_t n = g.order();
  const auto all = [n](auto&& pred) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!pred(static_cast<Element>(x))) return false;
    }
    return true;
  };

  sink.Run("axioms", [&] {
    const std::string problem = ValidateGroupAxioms(g);
    return Expect(problem.empty(), problem.empty() ? "order " + Str(n) : problem);
  });

  if (n <= options.identity_max_order) {
    sink.Run("commutator_conjugation", [&] {
      const bool ok = all([&](Element x) {
        return all([&](Element y) {
          return all([&](Element c) {
            return g.conj(c, Commutator(g, x, y)) ==
                   Commutator(g, g.conj(c, x), g.conj(c, y));
          });
        });
      });
      return Expect(ok, "g[x,y]g^-1 = [gxg^-1,gyg^-1] over all triples");
    });
    sink.Run("commutator_square", [&] {
      const bool ok = all([&](Element x) {
        return all([&](Element y) {
          const Element lhs = Commutator(g, x, g.mul(y, y));
          const Element rhs = g.mul(Commutator(g, x, y), Commutator(g, g.conj(y, x), y));
          return lhs == rhs;
        });
      });
      return Expect(ok, "[x,y^2] = [x,y][yxy^-1,y] over all pairs");
    });
  }

  sink.Run("center_subgroup", [&] {
    const Subgroup& z = ctx.center();
    const bool central = std::all_of(z.members().begin(), z.members().end(), [&](Element c) {
      return all([&](Element x) { return g.mul(c, x) == g.mul(x, c); });
    });
    return Expect(IsSubgroup(g, z.mask()) && central, "|Z| = " + Str(z.order()));
  });

  sink.Run("commutator_subgroup_normal", [&] {
    const Subgroup& d = ctx.derived();
    return Expect(IsSubgroup(g, d.mask()) && IsNormal(d), "|G'| = " + Str(d.order()));
  });

  sink.Run("abelianization_abelian", [&] {
    const auto q = Quotient(ctx.derived());
    return Expect(q.group->is_abelian(), "|G/G'| = " + Str(q.group->order()));
  });

  sink.Run("lagrange", [&] {
    const bool ok = n % ctx.center().order() == 0 && n % ctx.derived().order() == 0 &&
                    all([&](Element x) { return n % ElementOrder(g, x) == 0; });
    return Expect(ok, "|Z|, |G'| and element orders divide " + Str(n));
  });

  const std::size_t d = MinGeneratingSize(ctx.group());
  sink.Run("d_le_log2", [&] {
    const bool ok = d < 64 && (std::uint64_t{1} << d) <= n;
    return Expect(ok, "d = " + Str(d) + ", 2^d <= " + Str(n));
  });

  if (g.is_abelian()) {
    sink.Run("order_le_exp_pow_d", [&] {
      const BigExpr rhs = BigExpr::Power(Exponent(g), d);
      return Expect(rhs.IsAtLeast(n), Str(n) + " <= " + rhs.ToString(kDetailBits));
    });
  }
}

Outcome CheckCyclicSplits(const GroupPtr& group) {
  const Subgroup whole = WholeGroup(group);
  std::size_t count = 0;
  for (std::size_t x = 0; x < group->order(); ++x) {
    const auto a = static_cast<Element>(x);
    if (!IsPrime(ElementOrder(*group, a))) continue;
    const CyclicSplit split = SplitCyclicContaining(group, a);
    const bool cyclic = split.cyclic.order() == split.factor.order &&
                        SubgroupGenerated(group, {split.factor.generator}) == split.cyclic;
    if (!split.cyclic.contains(a) || !cyclic ||
        !IsInternalDirectProduct(split.cyclic, split.complement, whole)) {
      return Fail("element " + Str(a));
    }
    ++count;
  }
  return Pass(Str(count) + " prime-order elements");
}

Outcome CheckSubgroupSplits(const GroupPtr& group) {
  const Subgroup whole = WholeGroup(group);
  const auto subgroups = AllSubgroups(group);
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    const Subgroup& b = subgroups[i];
    const SubgroupSplit split = SplitOverSubgroup(group, b);
    const bool contained = b.mask().is_subset_of(split.c.mask());
    const std::size_t dc = MinGeneratingSize(AsGroup(split.c).group);
    if (!contained || !IsInternalDirectProduct(split.c, split.d, whole) || dc > b.order()) {
      return Fail("subgroup #" + Str(i) + " of order " + Str(b.order()));
    }
  }
  return Pass(Str(subgroups.size()) + " subgroups");
}

Outcome CheckDecomposition(const AbelianDecomposition& decomposition, const Subgroup& target) {
  std::string orders;
  for (const auto o : decomposition.factor_orders()) {
    orders += (orders.empty() ? "" : ",") + Str(o);
  }
  return Expect(IsPrimaryDecompositionOf(decomposition, target), "factors [" + orders + "]");
}

void AbelianSuite(GroupContext& ctx, RowSink& sink, const VerifyOptions& options) {
  const GroupPtr& group = ctx.group();
  if (!ctx.g().is_abelian()) {
    sink.Run("abelianization_decomposition", [&] {
      const GroupPtr q = Quotient(ctx.derived()).group;
      return CheckDecomposition(PrimaryDecomposition(q), WholeGroup(q));
    });
    return;
  }
  sink.Run("primary_decomposition", [&] {
    return CheckDecomposition(PrimaryDecomposition(group), WholeGroup(group));
  });
  if (ctx.g().order() <= options.split_max_order) {
    sink.Run("split_cyclic_containing", [&] { return CheckCyclicSplits(group); });
    sink.Run("split_over_subgroup", [&] { return CheckSubgroupSplits(group); });
  }
}

std::uint64_t BooleanAutOrder(std::size_t d) {
  std::uint64_t order = 1;
  for (std::size_t k = 0; k < d; ++k) order *= (std::uint64_t{1} << d) - (std::uint64_t{1} << k);
  return order;
}

void AutSuite(GroupContext& ctx, const CatalogRecord& record, RowSink& sink,
              const VerifyOptions& options) {
  const GroupPtr& group = ctx.group();
  const FiniteGroup& g = ctx.g();
  const std::size_t n = g.order();
  const std::uint64_t count = ctx.aut().order;

  if (record.expected_aut_order) {
    sink.Add("expected_aut", Expect(count == *record.expected_aut_order,
                                    Str(count) + " vs expected " +
                                        Str(*record.expected_aut_order)));
  }
  if (n <= options.naive_oracle_max_order) {
    sink.Run("naive_oracle", [&] {
      const auto naive = NaiveAutomorphismCount(group);
      return Expect(naive == count, Str(count) + " vs all-bijections " + Str(naive));
    });
  }
  if (n <= options.unpruned_oracle_max_order) {
    sink.Run("unpruned_oracle", [&] {
      const auto unpruned = UnprunedAutomorphismCount(group);
      return Expect(unpruned == count, Str(count) + " vs generator images " + Str(unpruned));
    });
  }

  const AutGroup inner = InnerAutomorphismGroup(group);
  if (count <= options.enumerate_max_aut) {
    sink.Run("enumeration", [&] {
      const AutGroup full = AutomorphismGroup(group);
      if (full.order != count || full.elements.size() != count) {
        return Fail("enumerated " + Str(full.order) + ", counted " + Str(count));
      }
      if (count * n * n <= 50'000'000) {
        for (const auto& alpha : full.elements) {
          if (!IsAutomorphism(alpha)) return Fail("invalid enumerated map");
        }
      }
      for (const auto& alpha : inner.elements) {
        if (!std::binary_search(full.elements.begin(), full.elements.end(), alpha,
                                [](const auto& a, const auto& b) { return a.map < b.map; })) {
          return Fail("inner automorphism missing from Aut");
        }
      }
      return Pass(Str(count) + " automorphisms, Inn contained");
    });
  }
  sink.Run("inner_order", [&] {
    const bool valid = std::all_of(inner.elements.begin(), inner.elements.end(),
                                   [](const auto& a) { return IsAutomorphism(a); });
    const bool order_ok = inner.order * ctx.center().order() == n;
    return Expect(valid && order_ok && inner.order <= count,
                  "|Inn| = " + Str(inner.order) + ", |G/Z| = " + Str(n / ctx.center().order()));
  });

  if (n > 1 && Exponent(g) == 2) {
    sink.Run("boolean_gl_order", [&] {
      const std::size_t d = MinGeneratingSize(group);
      const auto expected = BooleanAutOrder(d);
      return Expect(count == expected, Str(count) + " vs GL(" + Str(d) + ",2) " + Str(expected));
    });
  }

  if (g.is_abelian()) {
    sink.Run("primitive_root_automorphisms", [&] {
      const auto decomposition = PrimaryDecomposition(group);
      std::size_t built = 0;
      for (std::size_t i = 0; i < decomposition.factors.size(); ++i) {
        const auto p = PrimeDivisors(decomposition.factors[i].order).front();
        if (p == 2) continue;
        const Automorphism alpha = PrimitiveRootAutomorphism(decomposition, i);
        if (!IsAutomorphism(alpha) || AutomorphismOrder(alpha) % (p - 1) != 0) {
          return Fail("factor " + Str(i));
        }
        ++built;
      }
      return Pass(Str(built) + " built");
    });
    sink.Run("factor_mixing_automorphisms", [&] {
      const auto decomposition = PrimaryDecomposition(group);
      const auto& factors = decomposition.factors;
      std::size_t built = 0;
      for (std::size_t t = 0; t < factors.size(); ++t) {
        for (std::size_t s = 0; s < factors.size(); ++s) {
          if (s == t || factors[t].order < factors[s].order ||
              PrimeDivisors(factors[t].order) != PrimeDivisors(factors[s].order)) {
            continue;
          }
          if (!IsAutomorphism(FactorMixingAutomorphism(decomposition, t, s))) {
            return Fail("target " + Str(t) + ", source " + Str(s));
          }
          ++built;
        }
      }
      return Pass(Str(built) + " built");
    });
  }

  sink.Run("stretch_automorphism", [&] {
    const StretchResult stretch = StretchAutomorphism(group);
    if (!IsAutomorphism(stretch.alpha)) return Fail("not an automorphism");
    const Element image = Power(stretch.alpha, count)(stretch.g);
    return Expect(image == stretch.g, "alpha^" + Str(count) + " fixes g = " + Str(stretch.g) +
                                          ", N = " + Str(stretch.n_factor));
  });
}

Outcome CheckCosetInvariance(GroupContext& ctx) {
  const FiniteGroup& g = ctx.g();
  const auto& z = ctx.center().members();
  std::vector<Element> rep(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    Element least = static_cast<Element>(x);
    for (const Element c : z) least = std::min(least, g.mul(static_cast<Element>(x), c));
    rep[x] = least;
  }
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t y = 0; y < g.order(); ++y) {
      const auto a = static_cast<Element>(x);
      const auto b = static_cast<Element>(y);
      if (Commutator(g, a, b) != Commutator(g, rep[x], rep[y])) {
        return Fail("[" + Str(a) + "," + Str(b) + "]");
      }
    }
  }
  return Pass("[g,h] depends only on gZ, hZ");
}

void BoundsSuite(GroupContext& ctx, RowSink& sink, const VerifyOptions& options) {
  const GroupPtr& group = ctx.group();
  BoundOptions bound_options;
  bound_options.end_max_order = options.end_max_order;
  const BoundReport report = MakeBoundReport(group, ctx.aut(), bound_options);
  for (const auto& entry : report.entries) {
    sink.Add(entry.bound_id, Expect(entry.holds, entry.lhs.str() + " <= " +
                                                     entry.rhs.ToString(kDetailBits)));
  }
  sink.Run("equality_classifier", [&] {
    const auto c = ClassifyEquality(ctx.g(), report);
    return Expect(c.agree, std::string("reverse equality ") +
                               (c.reverse_equality ? "yes" : "no") + ", prime order " +
                               (c.prime_order ? "yes" : "no") + ", boolean " +
                               (c.boolean ? "yes" : "no"));
  });
  sink.Run("schur_data", [&] {
    const SchurData s = ComputeSchurData(group);
    const bool ok = s.commutator_set_size <= s.m * s.m && s.width <= s.m * s.m * s.m;
    return Expect(ok, "|Gamma| = " + Str(s.commutator_set_size) + ", width = " +
                          Str(s.width) + ", m = " + Str(s.m));
  });
  sink.Run("schur_coset_invariance", [&] { return CheckCosetInvariance(ctx); });
  for (const auto& f : CheckExponentFactors(group, ctx.aut().order)) {
    sink.Add("exp_factor:" + Str(f.factor_index),
             Expect(f.fixed_by_power && f.divides,
                    "ord(gG') = " + Str(f.coset_order) + (f.fixed_by_power ? "" : ", not fixed")));
  }
  const Subgroup whole = WholeGroup(group);
  for (const auto p : PrimeDivisors(ctx.g().order())) {
    sink.Run("central_complement:" + Str(p), [&] {
      const bool hypothesis = PPart(ctx.g().order(), p) == PPart(ctx.center().order(), p);
      const auto found = CentralPComplement(group, p);
      if (!hypothesis) return Expect(!found, "hypothesis fails, none returned");
      if (!found) return Fail("no complement found");
      return Expect(IsInternalDirectProduct(found->central_part, found->complement, whole),
                    "G = Z_p x Q with |Q| = " + Str(found->complement.order()));
    });
  }
}

void TheoremASuite(GroupContext& ctx, RowSink& sink) {
  const TheoremAWitness witness = MakeTheoremAWitness(ctx.group(), ctx.aut());
  for (const auto& check : witness.checks) {
    sink.Add(check.check_id, Expect(check.passed, check.detail));
  }
}

void ConjecturesSuite(GroupContext& ctx, RowSink& sink, const VerifyOptions& options) {
  const std::size_t n = ctx.g().order();
  sink.Run("deaconescu", [&] {
    const auto phi = EulerPhi(n);
    return Expect(phi <= ctx.aut().order, Str(phi) + " <= " + Str(ctx.aut().order));
  });
  if (n <= options.end_max_order) {
    sink.Run("end_conj", [&] {
      const auto end = EndomorphismCount(ctx.group(), options.end_max_order);
      return Expect(n <= end, Str(n) + " <= " + Str(end));
    });
  }
}

}  // namespace

std::string_view SuiteName(Suite suite) {
  switch (suite) {
    case Suite::kCore: return "core";
    case Suite::kAbelian: return "abelian";
    case Suite::kAut: return "aut";
    case Suite::kBounds: return "bounds";
    case Suite::kTheoremA: return "theorem_a";
    case Suite::kConjectures: return "conjectures";
  }
  return "unknown";
}

std::optional<Suite> ParseSuite(std::string_view name) {
  for (const Suite s : AllSuites()) {
    if (SuiteName(s) == name) return s;
  }
  return std::nullopt;
}

std::set<Suite> AllSuites() {
  return {Suite::kCore,   Suite::kAbelian,  Suite::kAut,
          Suite::kBounds, Suite::kTheoremA, Suite::kConjectures};
}

std::set<Suite> ParseSuiteList(std::string_view list) {
  std::set<Suite> suites;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    const std::string_view id = list.substr(start, comma - start);
    start = comma + 1;
    if (id.empty()) continue;
    if (id == "all") {
      suites = AllSuites();
      continue;
    }
    const auto suite = ParseSuite(id);
    if (!suite) {
      throw GroupError(ErrorKind::kInvalidArgument, "unknown suite '" + std::string(id) + "'");
    }
    suites.insert(*suite);
  }
  return suites;
}

bool VerifyReport::AllPassed() const { return FailureCount() == 0; }

std::size_t VerifyReport::FailureCount() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.passed; }));
}

VerifyReport VerifySuite(const std::vector<CatalogRecord>& corpus, const std::set<Suite>& suites,
                         const VerifyOptions& options) {
  VerifyReport report;
  if (suites.empty()) return report;
  for (const auto& record : corpus) {
    GroupContext ctx(Realize(record));
    for (const Suite suite : suites) {
      RowSink sink(report, record.name, suite);
      try {
        switch (suite) {
          case Suite::kCore: CoreSuite(ctx, sink, options); break;
          case Suite::kAbelian: AbelianSuite(ctx, sink, options); break;
          case Suite::kAut: AutSuite(ctx, record, sink, options); break;
          case Suite::kBounds: BoundsSuite(ctx, sink, options); break;
          case Suite::kTheoremA: TheoremASuite(ctx, sink); break;
          case Suite::kConjectures: ConjecturesSuite(ctx, sink, options); break;
        }
      } catch (const std::exception& e) {
        sink.Add("suite_aborted", Fail(std::string("exception: ") + e.what()));
      }
    }
  }
  return report;
}

}  // namespace autbound
