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

#include "autbound/abelian.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "autbound/errors.h"
#include "autbound/number_theory.h"

namespace autbound {
namespace {

void RequireCommutative(const Subgroup& k) {
  if (!IsCommutative(k)) {
    throw GroupError(ErrorKind::kNotAbelian, "group is not abelian");
  }
}

void Check(bool condition, const char* what) {
  if (!condition) throw std::logic_error(std::string("abelian: ") + what);
}

Subgroup Cyclic(const GroupPtr& group, Element x) {
  return SubgroupGenerated(group, {x});
}

bool IsPPower(std::uint64_t n, std::uint64_t p) { return PPart(n, p) == n; }

// Splits the abelian p-subgroup `s` into cyclic factors of descending order:
// take x of maximal order (least index on ties), then grow a complement
// greedily among subgroups meeting <x> trivially. In an abelian p-group any
// subgroup maximal with that property complements a cyclic subgroup of
// maximal order, so the greedy pass is a complete search.
std::vector<CyclicFactor> DecomposePGroup(Subgroup s) {
  const GroupPtr& group = s.parent();
  const FiniteGroup& g = *group;
  std::vector<CyclicFactor> factors;
  while (!s.is_trivial()) {
    Element x = s.members().front();
    for (Element y : s.members()) {
      if (g.element_order(y) > g.element_order(x)) x = y;
    }
    const Subgroup cyc = Cyclic(group, x);
    Subgroup complement = TrivialSubgroup(group);
    for (Element y : s.members()) {
      if (complement.contains(y)) continue;
      const Element extra[] = {y};
      Subgroup grown = Join(complement, extra);
      if (Intersection(grown, cyc).is_trivial()) complement = std::move(grown);
    }
    Check(complement.order() * cyc.order() == s.order(),
          "greedy complement has the wrong order");
    factors.push_back({x, g.element_order(x)});
    s = std::move(complement);
  }
  return factors;
}

Subgroup PComponentUnchecked(const Subgroup& k, std::uint64_t p) {
  const FiniteGroup& g = *k.parent();
  ElementSet mask(g.order());
  for (Element x : k.members()) {
    if (IsPPower(g.element_order(x), p)) mask.insert(x);
  }
  return Subgroup(k.parent(), std::move(mask));
}

Subgroup PPrimeComponentUnchecked(const Subgroup& k, std::uint64_t p) {
  const FiniteGroup& g = *k.parent();
  ElementSet mask(g.order());
  for (Element x : k.members()) {
    if (g.element_order(x) % p != 0) mask.insert(x);
  }
  return Subgroup(k.parent(), std::move(mask));
}

Subgroup SpanOf(const GroupPtr& group, const std::vector<Element>& gens) {
  return SubgroupGenerated(group, gens);
}

}  // namespace

bool IsCommutative(const Subgroup& subgroup) {
  const FiniteGroup& g = *subgroup.parent();
  const auto& m = subgroup.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (g.mul(m[i], m[j]) != g.mul(m[j], m[i])) return false;
    }
  }
  return true;
}

std::uint64_t AbelianDecomposition::covered_order() const {
  std::uint64_t total = 1;
  for (const CyclicFactor& f : factors) total *= f.order;
  return total;
}

std::vector<std::uint64_t> AbelianDecomposition::factor_orders() const {
  std::vector<std::uint64_t> out;
  for (const CyclicFactor& f : factors) out.push_back(f.order);
  return out;
}

std::optional<DecompositionCoordinates> DecompositionCoordinates::Build(
    const AbelianDecomposition& decomposition) {
  const FiniteGroup& g = *decomposition.parent;
  DecompositionCoordinates coords;
  coords.parent_ = decomposition.parent;
  std::uint64_t total = 1;
  for (const CyclicFactor& f : decomposition.factors) {
    if (f.generator >= g.order() || g.element_order(f.generator) != f.order) {
      return std::nullopt;
    }
    coords.orders_.push_back(f.order);
    total *= f.order;
    if (total > g.order()) return std::nullopt;
  }
  coords.tuple_index_.assign(g.order(), kNone);
  coords.element_of_.resize(total);
  // Mixed radix with the first factor most significant; enumerate by
  // incrementing the last digit and multiplying by its generator.
  std::vector<std::uint64_t> digits(coords.orders_.size(), 0);
  Element current = g.identity();
  for (std::uint64_t index = 0; index < total; ++index) {
    if (coords.tuple_index_[current] != kNone) return std::nullopt;
    coords.tuple_index_[current] = static_cast<std::uint32_t>(index);
    coords.element_of_[index] = current;
    for (std::size_t pos = digits.size(); pos-- > 0;) {
      const Element gen = decomposition.factors[pos].generator;
      current = g.mul(current, gen);
      if (++digits[pos] < coords.orders_[pos]) break;
      digits[pos] = 0;  // gen^order = 1, so `current` already wrapped
    }
  }
  return coords;
}

std::vector<std::uint64_t> DecompositionCoordinates::exponents(Element x) const {
  if (x >= tuple_index_.size() || tuple_index_[x] == kNone) {
    throw GroupError(ErrorKind::kInvalidArgument,
                     "element " + std::to_string(x) + " is not covered by the decomposition");
  }
  std::vector<std::uint64_t> out(orders_.size());
  std::uint64_t index = tuple_index_[x];
  for (std::size_t pos = orders_.size(); pos-- > 0;) {
    out[pos] = index % orders_[pos];
    index /= orders_[pos];
  }
  return out;
}

Element DecompositionCoordinates::element(std::span<const std::uint64_t> exponents) const {
  std::uint64_t index = 0;
  for (std::size_t pos = 0; pos < orders_.size(); ++pos) {
    index = index * orders_[pos] + exponents[pos] % orders_[pos];
  }
  return element_of_[index];
}

Subgroup DecompositionCoordinates::covered() const {
  ElementSet mask(parent_->order());
  for (Element e : element_of_) mask.insert(e);
  return Subgroup(parent_, std::move(mask));
}

bool IsPrimaryDecompositionOf(const AbelianDecomposition& decomposition,
                              const Subgroup& target) {
  for (const CyclicFactor& f : decomposition.factors) {
    if (!IsPrimePower(f.order)) return false;
  }
  if (decomposition.covered_order() != target.order()) return false;
  const auto coords = DecompositionCoordinates::Build(decomposition);
  if (!coords) return false;
  for (const CyclicFactor& f : decomposition.factors) {
    if (!target.contains(f.generator)) return false;
  }
  return true;
}

AbelianDecomposition PrimaryDecomposition(const GroupPtr& group) {
  return PrimaryDecomposition(WholeGroup(group));
}

AbelianDecomposition PrimaryDecomposition(const Subgroup& abelian_subgroup) {
  RequireCommutative(abelian_subgroup);
  AbelianDecomposition out{abelian_subgroup.parent(), {}};
  for (std::uint64_t p : PrimeDivisors(abelian_subgroup.order())) {
    std::vector<CyclicFactor> part =
        DecomposePGroup(PComponentUnchecked(abelian_subgroup, p));
    out.factors.insert(out.factors.end(), part.begin(), part.end());
  }
  Check(IsPrimaryDecompositionOf(out, abelian_subgroup),
        "primary decomposition failed the bijection check");
  return out;
}

Subgroup PrimaryComponent(const GroupPtr& group, std::uint64_t p) {
  return PrimaryComponent(WholeGroup(group), p);
}

Subgroup PrimaryComponent(const Subgroup& abelian_subgroup, std::uint64_t p) {
  RequireCommutative(abelian_subgroup);
  if (!IsPrime(p)) {
    throw GroupError(ErrorKind::kNotPrime, std::to_string(p) + " is not prime");
  }
  Subgroup out = PComponentUnchecked(abelian_subgroup, p);
  Check(out.order() == PPart(abelian_subgroup.order(), p),
        "primary component has the wrong order");
  return out;
}

CyclicSplit SplitCyclicContaining(const GroupPtr& group, Element a) {
  return SplitCyclicContaining(WholeGroup(group), a);
}

CyclicSplit SplitCyclicContaining(const Subgroup& ambient, Element a) {
  RequireCommutative(ambient);
  const GroupPtr& group = ambient.parent();
  const FiniteGroup& g = *group;
  if (!ambient.contains(a)) {
    throw GroupError(ErrorKind::kInvalidArgument, "element outside the group");
  }
  const std::uint64_t p = g.element_order(a);
  if (!IsPrime(p)) {
    throw GroupError(ErrorKind::kNotPrimeOrder,
                     "element " + std::to_string(a) + " has order " + std::to_string(p));
  }

  // Work in the p-component with factors of orders p^alpha_1 >= ... .
  const Subgroup component = PComponentUnchecked(ambient, p);
  AbelianDecomposition decomposition{group, DecomposePGroup(component)};
  const auto coords = DecompositionCoordinates::Build(decomposition);
  Check(coords.has_value(), "p-component decomposition is not direct");
  const std::vector<std::uint64_t> e = coords->exponents(a);

  // a = prod x_i^(beta_i p^(alpha_i - 1)); factors with beta_i = 0 mod p
  // stay in the complement.
  std::vector<std::size_t> support;
  std::vector<std::uint64_t> beta(e.size(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::uint64_t step = decomposition.factors[i].order / p;
    Check(e[i] % step == 0, "coordinate of an order-p element is not a multiple");
    beta[i] = e[i] / step;
    if (beta[i] % p != 0) support.push_back(i);
  }
  Check(!support.empty(), "non-identity element with empty support");

  const std::size_t last = support.back();
  const std::uint64_t smallest = decomposition.factors[last].order;  // p^alpha_n
  std::vector<std::uint64_t> b_exponents(e.size(), 0);
  for (std::size_t i : support) {
    b_exponents[i] = beta[i] * (decomposition.factors[i].order / smallest);
  }
  const Element b = coords->element(b_exponents);

  std::vector<Element> complement_gens;
  for (std::size_t i = 0; i < decomposition.factors.size(); ++i) {
    if (i != last) complement_gens.push_back(decomposition.factors[i].generator);
  }
  Subgroup complement = SpanOf(group, complement_gens);
  complement = Join(complement, PPrimeComponentUnchecked(ambient, p));

  CyclicSplit split{{b, g.element_order(b)}, Cyclic(group, b), std::move(complement)};
  Check(split.cyclic.contains(a), "a is not in B");
  Check(split.factor.order == smallest, "B has unexpected order");
  Check(IsInternalDirectProduct(split.cyclic, split.complement, ambient),
        "A is not B x C");
  return split;
}

std::vector<Subgroup> MaximalSubgroupsOfAbelian(const Subgroup& abelian_subgroup) {
  const AbelianDecomposition decomposition = PrimaryDecomposition(abelian_subgroup);
  const auto coords = DecompositionCoordinates::Build(decomposition);
  Check(coords.has_value(), "decomposition is not direct");
  const GroupPtr& group = abelian_subgroup.parent();

  // Index-p subgroups are kernels of surjections onto C_p, one per nonzero
  // functional on the p-factors up to scaling.
  std::vector<Subgroup> out;
  std::vector<std::vector<std::uint64_t>> exps;
  for (Element x : abelian_subgroup.members()) exps.push_back(coords->exponents(x));
  for (std::uint64_t p : PrimeDivisors(abelian_subgroup.order())) {
    std::vector<std::size_t> block;
    for (std::size_t i = 0; i < decomposition.factors.size(); ++i) {
      if (decomposition.factors[i].order % p == 0) block.push_back(i);
    }
    std::vector<std::uint64_t> c(block.size(), 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < block.size(); ++i) total *= p;
    for (std::uint64_t code = 1; code < total; ++code) {
      std::uint64_t rest = code;
      for (std::size_t i = 0; i < block.size(); ++i) {
        c[i] = rest % p;
        rest /= p;
      }
      // Normalize: first nonzero coefficient must be 1.
      const auto first = std::find_if(c.begin(), c.end(), [](std::uint64_t v) { return v != 0; });
      if (*first != 1) continue;
      ElementSet mask(group->order());
      for (std::size_t k = 0; k < exps.size(); ++k) {
        std::uint64_t value = 0;
        for (std::size_t i = 0; i < block.size(); ++i) value += c[i] * exps[k][block[i]];
        if (value % p == 0) mask.insert(abelian_subgroup.members()[k]);
      }
      out.emplace_back(group, std::move(mask));
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.members() < b.members();
  });
  return out;
}

SubgroupSplit SplitOverSubgroup(const GroupPtr& group, const Subgroup& b) {
  return SplitOverSubgroup(WholeGroup(group), b);
}

SubgroupSplit SplitOverSubgroup(const Subgroup& ambient, const Subgroup& b) {
  RequireCommutative(ambient);
  const GroupPtr& group = ambient.parent();
  const FiniteGroup& g = *group;
  if (b.parent() != group || !b.mask().is_subset_of(ambient.mask()) ||
      !IsSubgroup(g, b.mask())) {
    throw GroupError(ErrorKind::kNotSubgroup, "B is not a subgroup of A");
  }
  if (b.is_trivial()) return {TrivialSubgroup(group), ambient};

  const Subgroup b0 = MaximalSubgroupsOfAbelian(b).front();
  const std::uint64_t p = b.order() / b0.order();
  SubgroupSplit inner = SplitOverSubgroup(ambient, b0);

  Element chosen = g.identity();
  for (Element x : b.members()) {
    if (!b0.contains(x)) {
      chosen = x;
      break;
    }
  }
  // chosen = c d with c in C0, d in D0.
  Element d = g.identity();
  bool found = false;
  for (Element c : inner.c.members()) {
    const Element candidate = g.mul(g.inv(c), chosen);
    if (inner.d.contains(candidate)) {
      d = candidate;
      found = true;
      break;
    }
  }
  Check(found, "element does not factor through C0 x D0");
  Check(g.pow(d, p) == g.identity(), "d^p != 1");

  SubgroupSplit out = inner;
  if (d != g.identity()) {
    CyclicSplit split = SplitCyclicContaining(inner.d, d);
    out.c = Join(inner.c, split.cyclic);
    out.d = std::move(split.complement);
  }
  Check(b.mask().is_subset_of(out.c.mask()), "B is not inside C");
  Check(IsInternalDirectProduct(out.c, out.d, ambient), "A is not C x D");
  return out;
}

}  // namespace autbound
