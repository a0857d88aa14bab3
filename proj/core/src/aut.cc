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

#include "autbound/aut.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "autbound/errors.h"
#include "autbound/hom_search.h"
#include "autbound/number_theory.h"

namespace autbound {
namespace {

void Check(bool condition, const char* what) {
  if (!condition) throw std::logic_error(std::string("aut: ") + what);
}

void RequireOrderAtMost(const FiniteGroup& g, std::size_t cap, const char* what) {
  if (g.order() > cap) {
    throw GroupError(ErrorKind::kOrderTooLarge,
                     std::string(what) + ": order " + std::to_string(g.order()) +
                         " exceeds cap " + std::to_string(cap));
  }
}

// prod_{k<d} (|G| - 2^k), saturating.
unsigned __int128 GeneratorImageBound(std::size_t order, std::size_t d) {
  unsigned __int128 bound = 1;
  for (std::size_t k = 0; k < d; ++k) {
    const unsigned __int128 factor = order - (std::size_t{1} << k);
    if (bound > (~static_cast<unsigned __int128>(0)) / (factor == 0 ? 1 : factor)) {
      return ~static_cast<unsigned __int128>(0);
    }
    bound *= factor;
  }
  return bound;
}

std::uint64_t CycleLcm(const std::vector<Element>& map) {
  std::vector<bool> seen(map.size(), false);
  std::uint64_t order = 1;
  for (std::size_t start = 0; start < map.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t length = 0;
    for (std::size_t x = start; !seen[x]; x = map[x]) {
      seen[x] = true;
      ++length;
    }
    order = std::lcm(order, length);
  }
  return order;
}

const DecompositionCoordinates WholeGroupCoordinates(const AbelianDecomposition& decomposition) {
  auto coords = DecompositionCoordinates::Build(decomposition);
  if (!coords || decomposition.covered_order() != decomposition.parent->order()) {
    throw GroupError(ErrorKind::kInvalidArgument,
                     "decomposition is not a direct decomposition of the whole group");
  }
  return std::move(*coords);
}

std::uint64_t FactorPrime(const CyclicFactor& f) {
  const std::vector<std::uint64_t> primes = PrimeDivisors(f.order);
  if (primes.size() != 1) {
    throw GroupError(ErrorKind::kInvalidArgument,
                     "factor order " + std::to_string(f.order) + " is not a prime power");
  }
  return primes.front();
}

}  // namespace

bool Automorphism::is_identity() const {
  for (std::size_t x = 0; x < map.size(); ++x) {
    if (map[x] != x) return false;
  }
  return true;
}

bool IsAutomorphism(const Automorphism& alpha) {
  const Homomorphism hom{alpha.group, alpha.group, alpha.map};
  return IsBijective(hom) && IsHomomorphism(hom);
}

Automorphism Compose(const Automorphism& a, const Automorphism& b) {
  Automorphism out{a.group, std::vector<Element>(b.map.size())};
  for (std::size_t x = 0; x < b.map.size(); ++x) out.map[x] = a.map[b.map[x]];
  return out;
}

Automorphism Inverse(const Automorphism& alpha) {
  Automorphism out{alpha.group, std::vector<Element>(alpha.map.size())};
  for (std::size_t x = 0; x < alpha.map.size(); ++x) {
    out.map[alpha.map[x]] = static_cast<Element>(x);
  }
  return out;
}

Automorphism IdentityAutomorphism(const GroupPtr& group) {
  Automorphism out{group, std::vector<Element>(group->order())};
  std::iota(out.map.begin(), out.map.end(), Element{0});
  return out;
}

Automorphism Power(const Automorphism& alpha, std::uint64_t k) {
  Automorphism result = IdentityAutomorphism(alpha.group);
  Automorphism base = alpha;
  while (k != 0) {
    if (k & 1u) result = Compose(result, base);
    base = Compose(base, base);
    k >>= 1;
  }
  return result;
}

std::uint64_t AutomorphismOrder(const Automorphism& alpha) {
  return CycleLcm(alpha.map);
}

AutGroup AutomorphismGroup(const GroupPtr& group, const AutOptions& options) {
  RequireOrderAtMost(*group, options.max_group_order, "automorphism_group");
  const std::vector<Element> gens = MinimalGeneratingSequence(group);
  HomomorphismSearch search(*group, *group, gens, HomSearchKind::kInjective);
  AutGroup out{group, {}, 0};
  search.ForEach([&](const std::vector<Element>& map) {
    if (out.elements.size() >= options.max_elements) {
      throw GroupError(ErrorKind::kOrderTooLarge,
                       "more than " + std::to_string(options.max_elements) +
                           " automorphisms; use CountAutomorphisms");
    }
    out.elements.push_back(Automorphism{group, map});
    return true;
  });
  Check(search.tuples_tried() <= GeneratorImageBound(group->order(), gens.size()),
        "search visited more tuples than prod(|G| - 2^k)");
  std::sort(out.elements.begin(), out.elements.end(),
            [](const Automorphism& a, const Automorphism& b) { return a.map < b.map; });
  out.order = out.elements.size();
  return out;
}

AutGroup CountAutomorphisms(const GroupPtr& group, const AutOptions& options) {
  RequireOrderAtMost(*group, options.max_group_order, "automorphism count");
  const std::vector<Element> gens = MinimalGeneratingSequence(group);
  HomomorphismSearch search(*group, *group, gens, HomSearchKind::kInjective);
  // Aut(G) acts regularly on valid image tuples, so the number of
  // completions of a valid prefix does not depend on the prefix. With the
  // first i generators fixed, the admissible images of generator i form the
  // orbit of g_i under the pointwise stabilizer.
  std::uint64_t order = 1;
  std::vector<Element> prefix;
  for (std::size_t level = 0; level < gens.size(); ++level) {
    std::uint64_t orbit = 0;
    prefix.push_back(0);
    for (std::size_t c = 0; c < group->order(); ++c) {
      if (!search.IsCandidate(level, static_cast<Element>(c))) continue;
      prefix.back() = static_cast<Element>(c);
      if (search.FindFirst(prefix)) ++orbit;
    }
    Check(orbit >= 1, "generator has an empty orbit");
    order *= orbit;
    prefix.back() = gens[level];
  }
  return AutGroup{group, {}, order};
}

AutGroup InnerAutomorphismGroup(const GroupPtr& group) {
  std::set<std::vector<Element>> maps;
  for (std::size_t g = 0; g < group->order(); ++g) {
    std::vector<Element> map(group->order());
    for (std::size_t x = 0; x < group->order(); ++x) {
      map[x] = group->conj(static_cast<Element>(g), static_cast<Element>(x));
    }
    maps.insert(std::move(map));
  }
  AutGroup out{group, {}, 0};
  for (const auto& map : maps) out.elements.push_back(Automorphism{group, map});
  out.order = out.elements.size();
  Check(out.order * Center(group).order() == group->order(),
        "|Inn(G)| != |G/Z(G)|");
  return out;
}

std::uint64_t EndomorphismCount(const GroupPtr& group, std::size_t max_group_order) {
  RequireOrderAtMost(*group, max_group_order, "endomorphism_count");
  HomomorphismSearch search(*group, *group, MinimalGeneratingSequence(group),
                            HomSearchKind::kHomomorphism);
  return search.Count();
}

Automorphism PrimitiveRootAutomorphism(const AbelianDecomposition& decomposition,
                                       std::size_t factor_index) {
  if (factor_index >= decomposition.factors.size()) {
    throw GroupError(ErrorKind::kInvalidArgument, "factor index out of range");
  }
  const DecompositionCoordinates coords = WholeGroupCoordinates(decomposition);
  const CyclicFactor& factor = decomposition.factors[factor_index];
  const std::uint64_t p = FactorPrime(factor);
  if (p == 2) {
    throw GroupError(ErrorKind::kNoPrimitiveRoot,
                     "p = 2: x -> x^r is the identity modulo 2");
  }
  const std::uint64_t r = LeastPrimitiveRoot(p);
  const GroupPtr& group = decomposition.parent;
  Automorphism alpha{group, std::vector<Element>(group->order())};
  for (std::size_t x = 0; x < group->order(); ++x) {
    std::vector<std::uint64_t> e = coords.exponents(static_cast<Element>(x));
    e[factor_index] = (e[factor_index] * r) % factor.order;
    alpha.map[x] = coords.element(e);
  }
  Check(IsAutomorphism(alpha), "x -> x^r is not an automorphism");
  Check(AutomorphismOrder(alpha) % (p - 1) == 0, "order not divisible by p - 1");
  return alpha;
}

Automorphism FactorMixingAutomorphism(const AbelianDecomposition& decomposition,
                                      std::size_t target, std::size_t source) {
  const std::size_t k = decomposition.factors.size();
  if (target >= k || source >= k || target == source) {
    throw GroupError(ErrorKind::kInvalidArgument, "factor indices out of range");
  }
  const CyclicFactor& t = decomposition.factors[target];
  const CyclicFactor& s = decomposition.factors[source];
  if (FactorPrime(t) != FactorPrime(s)) {
    throw GroupError(ErrorKind::kInvalidArgument, "factors belong to different primes");
  }
  if (t.order < s.order) {
    throw GroupError(ErrorKind::kBadFactorOrder,
                     "|x_target| = " + std::to_string(t.order) + " < |x_source| = " +
                         std::to_string(s.order));
  }
  const DecompositionCoordinates coords = WholeGroupCoordinates(decomposition);
  const GroupPtr& group = decomposition.parent;
  Automorphism alpha{group, std::vector<Element>(group->order())};
  for (std::size_t x = 0; x < group->order(); ++x) {
    std::vector<std::uint64_t> e = coords.exponents(static_cast<Element>(x));
    e[source] = (e[source] + e[target]) % s.order;
    alpha.map[x] = coords.element(e);
  }
  Check(IsAutomorphism(alpha), "x_1 -> x_1 x_l is not an automorphism");
  return alpha;
}

std::size_t AbelianizationFactorCount(const GroupPtr& group) {
  const QuotientResult q = Quotient(CommutatorSubgroup(group));
  return PrimaryDecomposition(q.group).factors.size();
}

StretchResult StretchAutomorphism(const GroupPtr& group,
                                  std::optional<std::size_t> factor_index) {
  const FiniteGroup& g = *group;
  const Subgroup center = Center(group);
  const Subgroup derived = CommutatorSubgroup(group);
  std::uint64_t n_factor = (g.order() / center.order()) * derived.order();
  for (std::uint64_t p : PrimeDivisors(g.order())) n_factor *= p;

  const QuotientResult q = Quotient(derived);
  if (q.group->order() == 1) {
    return {IdentityAutomorphism(group), n_factor, g.identity(), 1, WholeGroup(group)};
  }
  const AbelianDecomposition decomposition = PrimaryDecomposition(q.group);
  std::size_t chosen = 0;
  if (factor_index) {
    if (*factor_index >= decomposition.factors.size()) {
      throw GroupError(ErrorKind::kInvalidArgument, "factor index out of range");
    }
    chosen = *factor_index;
  } else {
    for (std::size_t i = 1; i < decomposition.factors.size(); ++i) {
      const CyclicFactor& f = decomposition.factors[i];
      const CyclicFactor& best = decomposition.factors[chosen];
      if (f.order > best.order ||
          (f.order == best.order && f.generator < best.generator)) {
        chosen = i;
      }
    }
  }
  const CyclicFactor factor = decomposition.factors[chosen];
  const Element gen = q.representatives[factor.generator];

  std::vector<Element> others;
  for (std::size_t i = 0; i < decomposition.factors.size(); ++i) {
    if (i != chosen) others.push_back(decomposition.factors[i].generator);
  }
  const Subgroup complement = SubgroupGenerated(q.group, others);
  ElementSet h_mask(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (complement.contains(q.projection.map[x])) h_mask.insert(static_cast<Element>(x));
  }
  Subgroup h(group, std::move(h_mask));

  Check(center.contains(g.pow(gen, n_factor)), "g^N is not central");

  const std::uint64_t ord = g.element_order(gen);
  const std::uint64_t stretch = (1 + n_factor) % ord;
  Automorphism alpha{group, std::vector<Element>(g.order())};
  const Element gen_inv = g.inv(gen);
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool assigned = false;
    Element hx = static_cast<Element>(x);  // x g^-i
    for (std::uint64_t i = 0; i < ord; ++i, hx = g.mul(hx, gen_inv)) {
      if (!h.contains(hx)) continue;
      const Element image = g.mul(hx, g.pow(gen, (i * stretch) % ord));
      if (!assigned) {
        alpha.map[x] = image;
        assigned = true;
      } else {
        Check(alpha.map[x] == image, "hg^i -> hg^(i(1+N)) is not well defined");
      }
    }
    Check(assigned, "G != H<g>");
  }
  Check(IsAutomorphism(alpha), "stretch map is not an automorphism");
  return {std::move(alpha), n_factor, gen, factor.order, std::move(h)};
}

}  // namespace autbound
