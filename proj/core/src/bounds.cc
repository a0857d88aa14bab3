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

#include "autbound/bounds.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "autbound/abelian.h"
#include "autbound/errors.h"
#include "autbound/number_theory.h"
#include "autbound/subgroups.h"

namespace autbound {
namespace {

void Check(bool condition, const char* what) {
  if (!condition) throw std::logic_error(std::string("bounds: ") + what);
}

BoundEntry MakeEntry(std::string id, BigInt lhs, BigExpr rhs) {
  BoundEntry e{std::move(id), std::move(lhs), std::move(rhs), false, false};
  const int cmp = e.rhs.CompareWith(e.lhs);
  e.holds = cmp <= 0;
  e.equality = cmp == 0;
  return e;
}

BigInt Factorial(std::uint64_t k) {
  BigInt out = 1;
  for (std::uint64_t i = 2; i <= k; ++i) out *= i;
  return out;
}

std::uint64_t NFactor(const FiniteGroup& g, std::size_t center_order,
                      std::size_t derived_order) {
  std::uint64_t n_factor = (g.order() / center_order) * derived_order;
  for (std::uint64_t p : PrimeDivisors(g.order())) n_factor *= p;
  return n_factor;
}

std::size_t MinGens(const Subgroup& s) {
  return MinGeneratingSize(AsGroup(s).group);
}

std::string Ratio(std::uint64_t a, const char* rel, std::uint64_t b) {
  return std::to_string(a) + rel + std::to_string(b);
}

}  // namespace

const BoundEntry* BoundReport::Find(std::string_view bound_id) const {
  for (const BoundEntry& e : entries) {
    if (e.bound_id == bound_id) return &e;
  }
  return nullptr;
}

bool BoundReport::AllHold() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const BoundEntry& e) { return e.holds; });
}

SchurData ComputeSchurData(const GroupPtr& group) {
  const FiniteGroup& g = *group;
  const Subgroup center = Center(group);
  std::vector<Element> reps;
  std::vector<bool> covered(g.order(), false);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(static_cast<Element>(x));
    for (Element z : center.members()) covered[g.mul(static_cast<Element>(x), z)] = true;
  }
  SchurData out;
  out.m = reps.size();
  ElementSet gamma(g.order());
  for (Element a : reps) {
    for (Element b : reps) gamma.insert(Commutator(g, a, b));
  }
  out.commutators = gamma.to_vector();
  out.commutator_set_size = out.commutators.size();
  Check(out.commutator_set_size <= out.m * out.m, "|Gamma| > m^2");

  // Layer k holds the elements that are a product of exactly k commutators
  // and of no fewer.
  std::vector<int> depth(g.order(), -1);
  std::vector<Element> frontier{g.identity()};
  depth[g.identity()] = 0;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier) {
      for (Element c : out.commutators) {
        const Element y = g.mul(x, c);
        if (depth[y] != -1) continue;
        depth[y] = depth[x] + 1;
        out.width = std::max<std::size_t>(out.width, depth[y]);
        next.push_back(y);
        ++reached;
      }
    }
    frontier = std::move(next);
  }
  Check(reached == CommutatorSubgroup(group).order(), "Gamma does not generate G'");
  Check(out.width <= out.m * out.m * out.m, "commutator width > m^3");
  return out;
}

BoundReport MakeBoundReport(const GroupPtr& group, const AutGroup& aut,
                            const BoundOptions& options) {
  const FiniteGroup& g = *group;
  const std::uint64_t order = g.order();
  const std::uint64_t n = aut.order;
  const Subgroup center = Center(group);
  const Subgroup derived = CommutatorSubgroup(group);
  const std::uint64_t m = order / center.order();
  const std::uint64_t exponent = Exponent(g);
  const std::size_t d = MinGeneratingSize(group);
  const std::vector<std::uint64_t> primes = PrimeDivisors(order);

  BoundReport report;
  report.group = g.name();
  report.order = order;
  report.n = n;
  report.phi_value = EulerPhi(order);

  auto& rows = report.entries;
  rows.push_back(MakeEntry("easy", n, BigExpr(Factorial(order - 1))));
  rows.push_back(MakeEntry("inn", m, BigExpr(BigInt(n))));
  if (g.is_abelian()) {
    rows.push_back(MakeEntry("dG", order, BigExpr::Power(exponent, d)));
  }
  for (std::uint64_t p : primes) {
    rows.push_back(MakeEntry("aut_prime:" + std::to_string(p), p - 1, BigExpr(BigInt(n))));
  }
  const BigInt n_big = n;
  rows.push_back(
      MakeEntry("schur", derived.order(), BigExpr::Power(n_big, 2 * n_big * n_big * n_big)));
  const SchurData schur = ComputeSchurData(group);
  rows.push_back(MakeEntry("width", schur.width, BigExpr(BigInt(m) * m * m)));
  for (std::uint64_t p : primes) {
    rows.push_back(MakeEntry("primes:" + std::to_string(p), p, BigExpr(BigInt(n) + 1)));
  }
  for (std::uint64_t p : primes) {
    if (order % (p * p) != 0) continue;
    rows.push_back(MakeEntry("herstein_adney:" + std::to_string(p), n % p, BigExpr(BigInt(0))));
  }
  {
    const QuotientResult ab = Quotient(derived);
    const std::uint64_t n_factor = NFactor(g, center.order(), derived.order());
    rows.push_back(MakeEntry("exp_bound", Exponent(*ab.group),
                             BigExpr::Power(BigInt(n_factor) + 1, n_big).Minus(1)));
  }
  {
    BigInt rhs = 1;
    for (std::size_t k = 0; k < d; ++k) rhs *= BigInt(order) - (BigInt(1) << k);
    rows.push_back(MakeEntry("reverse", n, BigExpr(rhs)));
  }
  {
    const std::vector<std::uint64_t> factors = PrimeFactorsWithMultiplicity(order);
    BigInt rhs = 1;
    BigInt prefix = 1;  // p_1 ... p_k
    for (std::size_t k = 0; k < d; ++k) {
      if (k > 0) {
        if (k - 1 >= factors.size()) {
          rhs = 0;  // d(G) exceeds the number of prime factors
          break;
        }
        prefix *= factors[k - 1];
      }
      rhs *= BigInt(order) - prefix;
    }
    if (d > factors.size()) rhs = 0;
    rows.push_back(MakeEntry("reverse_refined", n, BigExpr(rhs)));
  }
  rows.push_back(MakeEntry("log2_d", BigInt(1) << d, BigExpr(BigInt(order))));
  rows.push_back(MakeEntry("deaconescu", report.phi_value, BigExpr(BigInt(n))));
  if (order <= options.end_max_order) {
    report.end_count = EndomorphismCount(group, options.end_max_order);
    rows.push_back(MakeEntry("end_conj", order, BigExpr(BigInt(*report.end_count))));
  }
  return report;
}

EqualityClassification ClassifyEquality(const FiniteGroup& group,
                                        const BoundReport& report) {
  const BoundEntry* reverse = report.Find("reverse");
  if (reverse == nullptr) {
    throw GroupError(ErrorKind::kInvalidArgument, "report has no reverse entry");
  }
  EqualityClassification out;
  out.reverse_equality = reverse->equality;
  out.prime_order = IsPrime(group.order());
  out.boolean = Exponent(group) <= 2;
  out.agree = out.reverse_equality == (out.prime_order || out.boolean);
  return out;
}

std::optional<CentralComplement> CentralPComplement(const GroupPtr& group,
                                                    std::uint64_t p) {
  if (!IsPrime(p)) {
    throw GroupError(ErrorKind::kNotPrime, std::to_string(p) + " is not prime");
  }
  const FiniteGroup& g = *group;
  if (g.order() % p != 0) {
    throw GroupError(ErrorKind::kInvalidArgument,
                     std::to_string(p) + " does not divide |G|");
  }
  const Subgroup center = Center(group);
  const std::uint64_t g_p = PPart(g.order(), p);
  if (PPart(center.order(), p) != g_p) return std::nullopt;

  Subgroup central_part = PrimaryComponent(center, p);
  const std::uint64_t target = g.order() / g_p;
  std::vector<Element> p_prime;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (g.element_order(static_cast<Element>(x)) % p != 0) {
      p_prime.push_back(static_cast<Element>(x));
    }
  }
  std::optional<Subgroup> complement;
  WalkSubgroupLattice(g, p_prime, [&](const LatticeNode& node, std::size_t) {
    if (node.members.count() != target) return true;
    Subgroup q(group, node.members);
    if (!IsInternalDirectProduct(central_part, q, WholeGroup(group))) return true;
    complement = std::move(q);
    return false;
  });
  Check(complement.has_value(), "no complement although |G|_p = |Z(G)|_p");
  return CentralComplement{std::move(central_part), std::move(*complement)};
}

std::vector<ExponentFactorCheck> CheckExponentFactors(const GroupPtr& group,
                                                      std::uint64_t n) {
  std::vector<ExponentFactorCheck> out;
  const std::size_t factors = AbelianizationFactorCount(group);
  for (std::size_t i = 0; i < factors; ++i) {
    const StretchResult s = StretchAutomorphism(group, i);
    ExponentFactorCheck row;
    row.factor_index = i;
    row.coset_order = s.coset_order;
    row.fixed_by_power = Power(s.alpha, n)(s.g) == s.g;
    // ord(gG') | (1+N)^n - 1  <=>  (1+N)^n = 1 mod ord(gG').
    row.divides = s.coset_order == 1 ||
                  ModPow((1 + s.n_factor) % s.coset_order, n, s.coset_order) == 1;
    out.push_back(row);
  }
  return out;
}

bool TheoremAWitness::AllPassed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const WitnessCheck& c) { return c.passed; });
}

TheoremAWitness MakeTheoremAWitness(const GroupPtr& group, const AutGroup& aut) {
  const FiniteGroup& g = *group;
  const std::uint64_t n = aut.order;
  const Subgroup center = Center(group);
  const Subgroup derived = CommutatorSubgroup(group);
  const Subgroup z_derived = Join(center, derived);

  // Least-index representatives of G / Z(G)G'.
  std::vector<Element> reps;
  std::vector<bool> covered(g.order(), false);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(static_cast<Element>(x));
    for (Element y : z_derived.members()) covered[g.mul(static_cast<Element>(x), y)] = true;
  }
  const std::size_t m = reps.size();
  const Subgroup u = Join(derived, reps);
  const Subgroup u_center = Intersection(u, center);
  SubgroupSplit split = SplitOverSubgroup(center, u_center);

  TheoremAWitness w{g.name(), m, u, split.c, split.d,
                    BigInt(NFactor(g, center.order(), derived.order())), {}};

  {
    const SubgroupAsGroup u_group = AsGroup(u);
    const Subgroup derived_local = u_group.Restrict(derived);
    const std::size_t d_quot = MinGeneratingSize(Quotient(derived_local).group);
    const std::uint64_t index_z = g.order() / center.order();
    const bool ok = d_quot <= m && m <= index_z && index_z <= n;
    w.checks.push_back({"d_U_quotient_le_n", ok,
                        "d(U/G')=" + std::to_string(d_quot) + " m=" + std::to_string(m) +
                            " |G:Z|=" + std::to_string(index_z) + " n=" + std::to_string(n)});
  }
  {
    const BigInt n_big = n;
    const BigExpr bound = BigExpr::Power(Exponent(g), n_big) *
                          BigExpr::Power(n_big, 2 * n_big * n_big * n_big);
    const bool ok = bound.IsAtLeast(u.order());
    w.checks.push_back({"U_order_bound", ok,
                        "|U|=" + std::to_string(u.order()) + " <= " + bound.ToString(256)});
  }
  {
    const bool direct = IsInternalDirectProduct(split.c, split.d, center);
    const bool contains = u_center.mask().is_subset_of(split.c.mask());
    const std::size_t d_c = MinGens(split.c);
    const bool small = d_c <= u_center.order();
    w.checks.push_back({"Z_splits", direct && contains && small,
                        "|C|=" + std::to_string(split.c.order()) + " |D|=" +
                            std::to_string(split.d.order()) + " " +
                            Ratio(d_c, "<=", u_center.order())});
  }
  {
    const Subgroup uc = Join(u, split.c);
    const bool trivial = Intersection(uc, split.d).is_trivial();
    const bool direct = IsInternalDirectProduct(uc, split.d, WholeGroup(group));
    w.checks.push_back({"product_split", trivial && direct,
                        "|UC|=" + std::to_string(uc.order()) + " |D|=" +
                            std::to_string(split.d.order())});
  }
  {
    const SubgroupAsGroup d_group = AsGroup(split.d);
    const AbelianDecomposition decomposition = PrimaryDecomposition(d_group.group);
    bool ok = true;
    std::string detail;
    for (std::uint64_t p : PrimeDivisors(split.d.order())) {
      std::vector<std::size_t> block;
      for (std::size_t i = 0; i < decomposition.factors.size(); ++i) {
        if (decomposition.factors[i].order % p == 0) block.push_back(i);
      }
      std::set<std::vector<Element>> maps;
      bool all_nontrivial = true;
      for (std::size_t j = 1; j < block.size(); ++j) {
        const Automorphism mix = FactorMixingAutomorphism(decomposition, block[0], block[j]);
        all_nontrivial = all_nontrivial && !mix.is_identity();
        maps.insert(mix.map);
      }
      const bool distinct = maps.size() + 1 == std::max<std::size_t>(block.size(), 1);
      const bool bounded = block.size() <= n;
      ok = ok && distinct && all_nontrivial && bounded;
      detail += "p=" + std::to_string(p) + ":k=" + std::to_string(block.size()) + " ";
    }
    detail += "n=" + std::to_string(n);
    w.checks.push_back({"D_abelian_bounded", ok, detail});
  }
  return w;
}

}  // namespace autbound
