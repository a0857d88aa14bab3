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

#include "autbound/abelian.h"
#include "autbound/bounds.h"
#include "autbound/errors.h"
#include "autbound/number_theory.h"
#include "autbound/oracles.h"
#include "test_util.h"

namespace autbound {
namespace {

using testing::AllElements;
using testing::BruteCenter;
using testing::BruteDerived;
using testing::BruteIsomorphic;
using testing::Std;
using K = StandardKind;

BoundReport ReportFor(const GroupPtr& g) { return MakeBoundReport(g, CountAutomorphisms(g)); }

bool BruteDirect(const FiniteGroup& a, const std::vector<Element>& x,
                 const std::vector<Element>& y) {
  std::set<Element> products;
  for (const Element u : x) {
    for (const Element v : y) products.insert(a.mul(u, v));
  }
  return products.size() == a.order() && x.size() * y.size() == a.order();
}

TEST(BigExprTest, ExactComparisonAgainstHugePowers) {
  const BigExpr huge = BigExpr::Power(24, 27648);
  EXPECT_TRUE(huge.IsAtLeast(BigInt(1) << 100000));
  EXPECT_EQ(huge.ToString(), "24^27648");
  EXPECT_EQ(BigExpr::Power(3, 4).Minus(1).ToString(), "80");
  EXPECT_EQ(BigExpr::Power(3, 4).Minus(1).CompareWith(80), 0);
  EXPECT_EQ(BigExpr::Power(3, 4).Minus(1).CompareWith(81), 1);
  EXPECT_EQ(BigExpr::Power(3, 4).Minus(1).CompareWith(79), -1);
  EXPECT_EQ((BigExpr::Power(2, 3) * BigExpr(BigInt(5))).CompareWith(40), 0);
  EXPECT_EQ(BigExpr::Power(0, 0).CompareWith(1), 0);
}

TEST(BigExprTest, MaterializeRespectsBitLimit) {
  const BigExpr e = BigExpr::Power(2, 100);
  EXPECT_FALSE(e.Materialize(64));
  ASSERT_TRUE(e.Materialize(128));
  EXPECT_EQ(*e.Materialize(128), BigInt(1) << 100);
}

TEST(BoundReportTest, CyclicThreeEasyBoundIsTight) {
  const auto r = ReportFor(Std(K::Cyclic(3)));
  const BoundEntry* easy = r.Find("easy");
  ASSERT_NE(easy, nullptr);
  EXPECT_EQ(easy->lhs, 2);
  EXPECT_EQ(easy->rhs.CompareWith(2), 0);
  EXPECT_TRUE(easy->equality);
}

TEST(BoundReportTest, BooleanReverseEquality) {
  const auto r = ReportFor(Std(K::ElementaryAbelian(2, 3)));
  const BoundEntry* reverse = r.Find("reverse");
  ASSERT_NE(reverse, nullptr);
  EXPECT_EQ(reverse->lhs, 168);
  EXPECT_EQ(reverse->rhs.CompareWith(7 * 6 * 4), 0);
  EXPECT_TRUE(reverse->equality);
}

TEST(BoundReportTest, QuaternionReverseAndDeaconescu) {
  const GroupPtr q8 = Std(K::Quaternion8());
  ASSERT_EQ(NaiveAutomorphismCount(q8), 24u);
  const auto r = ReportFor(q8);
  const BoundEntry* reverse = r.Find("reverse");
  ASSERT_NE(reverse, nullptr);
  EXPECT_EQ(reverse->lhs, 24);
  EXPECT_EQ(reverse->rhs.CompareWith(42), 0);
  EXPECT_TRUE(reverse->holds);
  EXPECT_FALSE(reverse->equality);
  const BoundEntry* deaconescu = r.Find("deaconescu");
  ASSERT_NE(deaconescu, nullptr);
  EXPECT_EQ(deaconescu->lhs, 4);
  EXPECT_EQ(deaconescu->rhs.CompareWith(24), 0);
  EXPECT_EQ(r.phi_value, 4u);
}

TEST(BoundReportTest, RowLayout) {
  const auto abelian = ReportFor(Std(K::Abelian({4, 9})));
  EXPECT_NE(abelian.Find("dG"), nullptr);
  EXPECT_NE(abelian.Find("herstein_adney:2"), nullptr);
  EXPECT_NE(abelian.Find("herstein_adney:3"), nullptr);
  EXPECT_NE(abelian.Find("aut_prime:3"), nullptr);
  EXPECT_NE(abelian.Find("primes:2"), nullptr);

  const auto s3 = ReportFor(Std(K::Symmetric(3)));
  EXPECT_EQ(s3.Find("dG"), nullptr);
  EXPECT_EQ(s3.Find("herstein_adney:2"), nullptr);
  for (const char* id : {"easy", "inn", "schur", "width", "exp_bound", "reverse",
                         "reverse_refined", "log2_d", "deaconescu", "end_conj"}) {
    EXPECT_NE(s3.Find(id), nullptr) << id;
  }
  ASSERT_TRUE(s3.end_count);
  EXPECT_EQ(*s3.end_count, 10u);

  // End(G) is only counted at small orders.
  EXPECT_EQ(ReportFor(Std(K::Cyclic(25))).Find("end_conj"), nullptr);
}

TEST(BoundReportTest, SchurBoundIsExactOnHugeRightHandSide) {
  // |G'| <= n^(2n^3) with n = 24 for Q8: a 27648-power, never truncated.
  const auto r = ReportFor(Std(K::Quaternion8()));
  const BoundEntry* schur = r.Find("schur");
  ASSERT_NE(schur, nullptr);
  EXPECT_EQ(schur->lhs, 2);
  EXPECT_EQ(schur->rhs.ToString(), "24^27648");
  EXPECT_TRUE(schur->holds);
}

TEST(BoundReportTest, EveryEntryHoldsOnCorpus) {
  for (const auto& record : BundledCorpus()) {
    const auto r = ReportFor(Realize(record));
    for (const auto& e : r.entries) {
      EXPECT_TRUE(e.holds) << record.name << " " << e.bound_id;
      EXPECT_EQ(e.holds, e.rhs.IsAtLeast(e.lhs));
      EXPECT_EQ(e.equality, e.rhs.CompareWith(e.lhs) == 0);
    }
  }
}

TEST(BoundReportTest, HersteinAdneyDivisibilityOnCorpus) {
  for (const auto& record : BundledCorpus()) {
    const GroupPtr g = Realize(record);
    const auto n = CountAutomorphisms(g).order;
    for (const auto p : PrimeDivisors(g->order())) {
      if (g->order() % (p * p) == 0) EXPECT_EQ(n % p, 0u) << record.name << " p=" << p;
    }
  }
}

TEST(EqualityClassifierTest, Examples) {
  const GroupPtr trivial = Std(K::Cyclic(1));
  auto c = ClassifyEquality(*trivial, ReportFor(trivial));
  EXPECT_TRUE(c.reverse_equality && c.boolean && c.agree);

  const GroupPtr c7 = Std(K::Cyclic(7));
  c = ClassifyEquality(*c7, ReportFor(c7));
  EXPECT_TRUE(c.reverse_equality && c.prime_order && c.agree);

  const GroupPtr c4 = Std(K::Cyclic(4));
  ASSERT_EQ(NaiveAutomorphismCount(c4), 2u);
  c = ClassifyEquality(*c4, ReportFor(c4));
  EXPECT_FALSE(c.reverse_equality || c.prime_order || c.boolean);
  EXPECT_TRUE(c.agree);
}

TEST(EqualityClassifierTest, EqualityExactlyForPrimeOrBooleanOnCorpus) {
  for (const auto& record : BundledCorpus()) {
    const GroupPtr g = Realize(record);
    const auto c = ClassifyEquality(*g, ReportFor(g));
    EXPECT_TRUE(c.agree) << record.name;
    EXPECT_EQ(c.reverse_equality, IsPrime(g->order()) || Exponent(*g) <= 2) << record.name;
  }
}

TEST(SchurDataTest, Examples) {
  const auto abelian = ComputeSchurData(Std(K::Abelian({2, 4})));
  EXPECT_EQ(abelian.commutator_set_size, 1u);
  EXPECT_EQ(abelian.width, 0u);

  const GroupPtr s3 = Std(K::Symmetric(3));
  const auto s = ComputeSchurData(s3);
  EXPECT_EQ(s.commutator_set_size, 3u);
  EXPECT_EQ(s.commutators, BruteDerived(*s3));
  EXPECT_EQ(s.width, 1u);
  EXPECT_EQ(s.m, 6u);

  const GroupPtr q8 = Std(K::Quaternion8());
  const auto q = ComputeSchurData(q8);
  EXPECT_EQ(q.commutators, BruteCenter(*q8));
  EXPECT_EQ(q.width, 1u);
  EXPECT_EQ(q.m, 4u);
}

TEST(SchurDataTest, GammaMatchesAllCommutatorsOnCorpus) {
  for (const auto& record : BundledCorpus()) {
    const GroupPtr g = Realize(record);
    std::set<Element> gamma;
    for (const Element x : AllElements(*g)) {
      for (const Element y : AllElements(*g)) gamma.insert(Commutator(*g, x, y));
    }
    const auto s = ComputeSchurData(g);
    EXPECT_EQ(std::vector<Element>(gamma.begin(), gamma.end()), s.commutators) << record.name;
    EXPECT_LE(s.commutator_set_size, s.m * s.m);
    EXPECT_LE(s.width, s.m * s.m * s.m);
  }
}

TEST(CentralPComplementTest, Examples) {
  const GroupPtr c5s3 = Std(K::Product(K::Cyclic(5), K::Symmetric(3)));
  const auto found = CentralPComplement(c5s3, 5);
  ASSERT_TRUE(found);
  EXPECT_EQ(found->central_part.order(), 5u);
  EXPECT_TRUE(BruteIsomorphic(*AsGroup(found->complement).group, *Std(K::Symmetric(3))));
  EXPECT_TRUE(
      BruteDirect(*c5s3, found->central_part.members(), found->complement.members()));

  EXPECT_FALSE(CentralPComplement(Std(K::Quaternion8()), 2));

  const GroupPtr a = Std(K::Abelian({2, 12}));
  for (const std::uint64_t p : {2u, 3u}) {
    const auto split = CentralPComplement(a, p);
    ASSERT_TRUE(split);
    EXPECT_EQ(split->central_part, PrimaryComponent(a, p));
    EXPECT_EQ(split->complement.order(), a->order() / PPart(a->order(), p));
  }
}

TEST(CentralPComplementTest, Errors) {
  try {
    CentralPComplement(Std(K::Cyclic(6)), 4);
    FAIL();
  } catch (const GroupError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotPrime);
  }
}

TEST(CentralPComplementTest, FoundWheneverHypothesisHoldsOnCorpus) {
  for (const auto& record : BundledCorpus()) {
    const GroupPtr g = Realize(record);
    const auto z = BruteCenter(*g).size();
    for (const auto p : PrimeDivisors(g->order())) {
      const auto found = CentralPComplement(g, p);
      EXPECT_EQ(found.has_value(), PPart(g->order(), p) == PPart(z, p))
          << record.name << " p=" << p;
      if (found) {
        EXPECT_TRUE(
            BruteDirect(*g, found->central_part.members(), found->complement.members()))
            << record.name;
      }
    }
  }
}

TEST(ExponentFactorsTest, EveryFactorDividesOnCorpus) {
  for (const auto& record : BundledCorpus()) {
    const GroupPtr g = Realize(record);
    for (const auto& f : CheckExponentFactors(g, CountAutomorphisms(g).order)) {
      EXPECT_TRUE(f.fixed_by_power && f.divides) << record.name << " factor " << f.factor_index;
    }
  }
}

TEST(FinitenessWitnessTest, Examples) {
  const GroupPtr c4 = Std(K::Cyclic(4));
  const auto w4 = MakeTheoremAWitness(c4, CountAutomorphisms(c4));
  EXPECT_EQ(w4.m, 1u);
  EXPECT_TRUE(w4.u.is_trivial());
  EXPECT_TRUE(w4.c.is_trivial());
  EXPECT_EQ(w4.d.order(), 4u);
  EXPECT_TRUE(w4.AllPassed());

  const GroupPtr s3 = Std(K::Symmetric(3));
  const auto w3 = MakeTheoremAWitness(s3, CountAutomorphisms(s3));
  EXPECT_TRUE(w3.d.is_trivial());
  EXPECT_EQ(w3.u.order(), 6u);
  EXPECT_TRUE(w3.AllPassed());

  const GroupPtr c2s3 = Std(K::Product(K::Cyclic(2), K::Symmetric(3)));
  const auto w = MakeTheoremAWitness(c2s3, CountAutomorphisms(c2s3));
  EXPECT_TRUE(w.AllPassed());
  EXPECT_LE(w.d.order(), 2u);
  // UC x D = G, checked independently of the library.
  std::vector<Element> uc;
  for (const Element u : w.u.members()) {
    for (const Element c : w.c.members()) uc.push_back(c2s3->mul(u, c));
  }
  std::sort(uc.begin(), uc.end());
  uc.erase(std::unique(uc.begin(), uc.end()), uc.end());
  EXPECT_TRUE(BruteDirect(*c2s3, uc, w.d.members()));
}

TEST(FinitenessWitnessTest, AllChecksPassOnCorpus) {
  const std::vector<std::string> ids = {"d_U_quotient_le_n", "U_order_bound", "Z_splits",
                                        "product_split", "D_abelian_bounded"};
  for (const auto& record : BundledCorpus()) {
    const GroupPtr g = Realize(record);
    const auto w = MakeTheoremAWitness(g, CountAutomorphisms(g));
    std::vector<std::string> seen;
    for (const auto& c : w.checks) {
      EXPECT_TRUE(c.passed) << record.name << " " << c.check_id << ": " << c.detail;
      seen.push_back(c.check_id);
    }
    EXPECT_EQ(seen, ids) << record.name;
  }
}

}  // namespace
}  // namespace autbound
