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
#include "autbound/aut.h"
#include "autbound/errors.h"
#include "autbound/oracles.h"
#include "test_util.h"

namespace autbound {
namespace {

using testing::AllElements;
using testing::BruteCenter;
using testing::CorpusGroup;
using testing::Std;
using K = StandardKind;

// Oracle: order of a map by iterating it until it returns to the identity.
std::uint64_t BruteMapOrder(const std::vector<Element>& map) {
  std::vector<Element> current = map;
  std::uint64_t k = 1;
  while (true) {
    bool identity = true;
    for (std::size_t x = 0; x < current.size(); ++x) identity = identity && current[x] == x;
    if (identity) return k;
    for (auto& v : current) v = map[v];
    ++k;
  }
}

TEST(AutomorphismGroupTest, Examples) {
  EXPECT_EQ(AutomorphismGroup(Std(K::Cyclic(5))).order, 4u);
  EXPECT_EQ(AutomorphismGroup(Std(K::ElementaryAbelian(2, 3))).order, 168u);
  const GroupPtr s3 = Std(K::Symmetric(3));
  const GroupPtr q8 = Std(K::Quaternion8());
  EXPECT_EQ(NaiveAutomorphismCount(s3), 6u);
  EXPECT_EQ(NaiveAutomorphismCount(q8), 24u);
  EXPECT_EQ(AutomorphismGroup(s3).order, 6u);
  EXPECT_EQ(AutomorphismGroup(q8).order, 24u);
}

TEST(AutomorphismGroupTest, ElementsAreClosedSortedAutomorphisms) {
  for (const auto& kind : {K::Symmetric(3), K::Quaternion8(), K::Dihedral(4), K::Abelian({2, 4}),
                           K::Alternating(4)}) {
    const GroupPtr g = Std(kind);
    const AutGroup aut = AutomorphismGroup(g);
    ASSERT_EQ(aut.elements.size(), aut.order);
    EXPECT_TRUE(std::is_sorted(aut.elements.begin(), aut.elements.end(),
                               [](const auto& a, const auto& b) { return a.map < b.map; }));
    EXPECT_TRUE(aut.elements.front().is_identity());
    std::set<std::vector<Element>> maps;
    for (const auto& a : aut.elements) {
      EXPECT_TRUE(IsAutomorphism(a));
      maps.insert(a.map);
    }
    for (const auto& a : aut.elements) {
      EXPECT_TRUE(maps.count(Inverse(a).map));
      for (const auto& b : aut.elements) ASSERT_TRUE(maps.count(Compose(a, b).map));
    }
  }
}

TEST(AutomorphismGroupTest, CapIsEnforced) {
  AutOptions options;
  options.max_group_order = 10;
  try {
    AutomorphismGroup(Std(K::Cyclic(11)), options);
    FAIL();
  } catch (const GroupError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kOrderTooLarge);
  }
}

TEST(AutomorphismGroupTest, NaiveOracleUpToOrderEight) {
  for (const auto& record : BundledCorpus()) {
    const GroupPtr g = Realize(record);
    if (g->order() > 8) continue;
    const auto naive = NaiveAutomorphismCount(g);
    EXPECT_EQ(AutomorphismGroup(g).order, naive) << record.name;
    EXPECT_EQ(CountAutomorphisms(g).order, naive) << record.name;
  }
}

TEST(AutomorphismGroupTest, UnprunedOracleUpToOrderSixteen) {
  for (const auto& record : BundledCorpus()) {
    const GroupPtr g = Realize(record);
    if (g->order() > 16) continue;
    const auto unpruned = UnprunedAutomorphismCount(g);
    EXPECT_EQ(AutomorphismGroup(g).order, unpruned) << record.name;
    EXPECT_EQ(CountAutomorphisms(g).order, unpruned) << record.name;
  }
}

TEST(AutomorphismGroupTest, BooleanGroupsMatchGeneralLinearOrder) {
  for (std::size_t d = 1; d <= 4; ++d) {
    std::uint64_t expected = 1;
    for (std::size_t k = 0; k < d; ++k) expected *= (1u << d) - (1u << k);
    EXPECT_EQ(AutomorphismGroup(Std(K::ElementaryAbelian(2, d))).order, expected) << d;
  }
  // Counting goes further than enumeration.
  EXPECT_EQ(CountAutomorphisms(Std(K::ElementaryAbelian(2, 6))).order, 20'158'709'760u);
}

TEST(AutomorphismGroupTest, CountMatchesEnumerationOnCorpus) {
  for (const auto& record : BundledCorpus()) {
    const GroupPtr g = Realize(record);
    const auto count = CountAutomorphisms(g).order;
    if (count > 50000) continue;
    EXPECT_EQ(AutomorphismGroup(g).order, count) << record.name;
  }
}

TEST(InnerAutomorphismGroupTest, Examples) {
  EXPECT_EQ(InnerAutomorphismGroup(Std(K::Abelian({2, 6}))).order, 1u);
  const GroupPtr s3 = Std(K::Symmetric(3));
  EXPECT_EQ(InnerAutomorphismGroup(s3).order, s3->order() / BruteCenter(*s3).size());
  EXPECT_EQ(InnerAutomorphismGroup(s3).order, 6u);
  const GroupPtr q8 = Std(K::Quaternion8());
  EXPECT_EQ(InnerAutomorphismGroup(q8).order, q8->order() / BruteCenter(*q8).size());
  EXPECT_EQ(InnerAutomorphismGroup(q8).order, 4u);
}

TEST(InnerAutomorphismGroupTest, SubsetOfAutOnCorpus) {
  for (const auto& record : BundledCorpus()) {
    const GroupPtr g = Realize(record);
    const AutGroup inner = InnerAutomorphismGroup(g);
    EXPECT_EQ(inner.order * BruteCenter(*g).size(), g->order()) << record.name;
    if (g->order() > 16) continue;
    const AutGroup aut = AutomorphismGroup(g);
    for (const auto& f : inner.elements) {
      EXPECT_TRUE(std::find(aut.elements.begin(), aut.elements.end(), f) != aut.elements.end())
          << record.name;
    }
  }
}

TEST(EndomorphismCountTest, Examples) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const GroupPtr c = Std(K::Cyclic(n));
    EXPECT_EQ(NaiveEndomorphismCount(c), n);
    EXPECT_EQ(EndomorphismCount(c), n);
  }
  const GroupPtr s3 = Std(K::Symmetric(3));
  EXPECT_EQ(NaiveEndomorphismCount(s3), 10u);
  EXPECT_EQ(EndomorphismCount(s3), 10u);
}

TEST(EndomorphismCountTest, AgreesWithGeneratorImageOracle) {
  for (const auto& record : BundledCorpus()) {
    const GroupPtr g = Realize(record);
    if (g->order() > 16) continue;
    EXPECT_EQ(EndomorphismCount(g), UnprunedEndomorphismCount(g)) << record.name;
  }
}

TEST(EndomorphismCountTest, CapIsEnforced) {
  try {
    EndomorphismCount(Std(K::Cyclic(25)));
    FAIL();
  } catch (const GroupError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kOrderTooLarge);
  }
}

TEST(PrimitiveRootAutomorphismTest, Examples) {
  const GroupPtr c5 = Std(K::Cyclic(5));
  const Automorphism sq = PrimitiveRootAutomorphism(PrimaryDecomposition(c5), 0);
  EXPECT_TRUE(IsAutomorphism(sq));
  // Generator 1 goes to 2: the squaring map.
  for (const Element x : AllElements(*c5)) EXPECT_EQ(sq(x), c5->mul(x, x));
  EXPECT_EQ(BruteMapOrder(sq.map), 4u);

  const GroupPtr a = Std(K::Abelian({7, 2}));
  const auto d = PrimaryDecomposition(a);
  ASSERT_EQ(d.factor_orders(), (std::vector<std::uint64_t>{2, 7}));
  const Automorphism cube = PrimitiveRootAutomorphism(d, 1);
  EXPECT_TRUE(IsAutomorphism(cube));
  EXPECT_EQ(BruteMapOrder(cube.map), 6u);
  EXPECT_EQ(AutomorphismOrder(cube), 6u);
  EXPECT_EQ(cube(d.factors[0].generator), d.factors[0].generator);
  EXPECT_EQ(cube(d.factors[1].generator), a->pow(d.factors[1].generator, 3));

  const GroupPtr c3 = Std(K::Cyclic(3));
  const Automorphism inv = PrimitiveRootAutomorphism(PrimaryDecomposition(c3), 0);
  for (const Element x : AllElements(*c3)) EXPECT_EQ(inv(x), c3->inv(x));
  EXPECT_EQ(BruteMapOrder(inv.map), 2u);
}

TEST(PrimitiveRootAutomorphismTest, EvenPrimeIsRejected) {
  try {
    PrimitiveRootAutomorphism(PrimaryDecomposition(Std(K::Cyclic(4))), 0);
    FAIL();
  } catch (const GroupError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoPrimitiveRoot);
  }
}

TEST(StretchAutomorphismTest, CyclicFour) {
  const GroupPtr c4 = Std(K::Cyclic(4));
  const StretchResult s = StretchAutomorphism(c4);
  EXPECT_EQ(s.n_factor, 2u);
  for (const Element x : AllElements(*c4)) EXPECT_EQ(s.alpha(x), c4->pow(x, 3));
  EXPECT_TRUE(IsAutomorphism(s.alpha));
}

TEST(StretchAutomorphismTest, S3IsIdentity) {
  const StretchResult s = StretchAutomorphism(Std(K::Symmetric(3)));
  EXPECT_EQ(s.n_factor, 108u);
  EXPECT_TRUE(s.alpha.is_identity());
  EXPECT_EQ(s.coset_order, 2u);
}

TEST(StretchAutomorphismTest, TrivialGroup) {
  const StretchResult s = StretchAutomorphism(Std(K::Cyclic(1)));
  EXPECT_EQ(s.n_factor, 1u);
  EXPECT_TRUE(s.alpha.is_identity());
}

TEST(StretchAutomorphismTest, PowerFixesGeneratorOnCorpus) {
  for (const auto& record : BundledCorpus()) {
    const GroupPtr g = Realize(record);
    const auto n = CountAutomorphisms(g).order;
    for (std::size_t i = 0; i < std::max<std::size_t>(1, AbelianizationFactorCount(g)); ++i) {
      const StretchResult s =
          AbelianizationFactorCount(g) == 0 ? StretchAutomorphism(g) : StretchAutomorphism(g, i);
      ASSERT_TRUE(IsAutomorphism(s.alpha)) << record.name;
      EXPECT_EQ(Power(s.alpha, n)(s.g), s.g) << record.name;
    }
  }
}

TEST(FactorMixingAutomorphismTest, KleinTransvection) {
  const GroupPtr a = Std(K::ElementaryAbelian(2, 2));
  const auto d = PrimaryDecomposition(a);
  const Automorphism t = FactorMixingAutomorphism(d, 0, 1);
  EXPECT_TRUE(IsAutomorphism(t));
  EXPECT_EQ(t(d.factors[0].generator), a->mul(d.factors[0].generator, d.factors[1].generator));
  EXPECT_EQ(BruteMapOrder(t.map), 2u);
}

TEST(FactorMixingAutomorphismTest, C4xC2) {
  const GroupPtr a = Std(K::Abelian({4, 2}));
  const auto d = PrimaryDecomposition(a);
  ASSERT_EQ(d.factor_orders(), (std::vector<std::uint64_t>{4, 2}));
  const Automorphism t = FactorMixingAutomorphism(d, 0, 1);
  EXPECT_TRUE(IsAutomorphism(t));
  EXPECT_EQ(BruteMapOrder(t.map), 2u);
  try {
    FactorMixingAutomorphism(d, 1, 0);
    FAIL();
  } catch (const GroupError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBadFactorOrder);
  }
}

TEST(FactorMixingAutomorphismTest, DistinctSourcesGiveDistinctMaps) {
  const GroupPtr a = Std(K::Abelian({8, 4, 2, 2}));
  const auto d = PrimaryDecomposition(a);
  std::set<std::vector<Element>> maps;
  for (std::size_t l = 1; l < d.factors.size(); ++l) {
    const Automorphism t = FactorMixingAutomorphism(d, 0, l);
    EXPECT_TRUE(IsAutomorphism(t));
    maps.insert(t.map);
  }
  EXPECT_EQ(maps.size(), d.factors.size() - 1);
}

TEST(AutomorphismAlgebraTest, ComposeInversePower) {
  const GroupPtr d8 = CorpusGroup("D8");
  const AutGroup aut = AutomorphismGroup(d8);
  for (const auto& a : aut.elements) {
    EXPECT_TRUE(Compose(a, Inverse(a)).is_identity());
    EXPECT_TRUE(Power(a, AutomorphismOrder(a)).is_identity());
    EXPECT_EQ(AutomorphismOrder(a), BruteMapOrder(a.map));
    for (const Element x : AllElements(*d8)) {
      for (const auto& b : aut.elements) ASSERT_EQ(Compose(a, b)(x), a(b(x)));
    }
  }
}

}  // namespace
}  // namespace autbound
