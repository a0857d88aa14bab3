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

#ifndef AUTBOUND_AUT_H_
#define AUTBOUND_AUT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "autbound/abelian.h"
#include "autbound/group.h"

namespace autbound {

struct Automorphism {
  GroupPtr group;
  std::vector<Element> map;

  Element operator()(Element x) const { return map[x]; }
  bool is_identity() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.group == b.group && a.map == b.map;
  }
};

// Homomorphism law (full table) plus bijectivity.
bool IsAutomorphism(const Automorphism& alpha);
// (a o b)(x) = a(b(x)).
Automorphism Compose(const Automorphism& a, const Automorphism& b);
Automorphism Inverse(const Automorphism& alpha);
Automorphism Power(const Automorphism& alpha, std::uint64_t k);
std::uint64_t AutomorphismOrder(const Automorphism& alpha);
Automorphism IdentityAutomorphism(const GroupPtr& group);

// The automorphism group. `elements` is filled by AutomorphismGroup and
// sorted lexicographically by map; CountAutomorphisms leaves it empty and
// only sets `order`.
struct AutGroup {
  GroupPtr group;
  std::vector<Automorphism> elements;
  std::uint64_t order = 0;

  bool enumerated() const { return !elements.empty(); }
};

struct AutOptions {
  std::size_t max_group_order = 256;
  // Enumeration refuses to materialize more automorphisms than this.
  std::size_t max_elements = 250000;
};

// Enumerates Aut(G) by backtracking over images of a minimal generating
// sequence. Throws kOrderTooLarge past either cap.
AutGroup AutomorphismGroup(const GroupPtr& group, const AutOptions& options = {});

// |Aut(G)| as the product of orbit lengths along the point-stabilizer chain
// of the generating sequence; no element list is stored.
AutGroup CountAutomorphisms(const GroupPtr& group, const AutOptions& options = {});

// {x -> g x g^-1}, deduplicated and sorted by map.
AutGroup InnerAutomorphismGroup(const GroupPtr& group);

inline constexpr std::size_t kDefaultEndomorphismMaxOrder = 24;

// Number of homomorphisms G -> G. Throws kOrderTooLarge past the cap.
std::uint64_t EndomorphismCount(const GroupPtr& group,
                                std::size_t max_group_order = kDefaultEndomorphismMaxOrder);

// Automorphism acting as x -> x^r on one factor of a primary decomposition
// of the whole group and fixing the others; r is the least primitive root
// modulo p. Throws kNoPrimitiveRoot for p = 2.
Automorphism PrimitiveRootAutomorphism(const AbelianDecomposition& decomposition,
                                       std::size_t factor_index);

// x_target -> x_target * x_source, other generators fixed. The factors must
// be p-power cyclic factors for the same p with |x_target| >= |x_source|.
// Throws kBadFactorOrder otherwise.
Automorphism FactorMixingAutomorphism(const AbelianDecomposition& decomposition,
                                      std::size_t target, std::size_t source);

struct StretchResult {
  Automorphism alpha;
  std::uint64_t n_factor = 1;   // |G/Z(G)| * |G'| * prod_{p | |G|} p
  Element g = 0;                // generator of the split-off factor mod G'
  std::uint64_t coset_order = 1;  // order of g G' in G/G'
  Subgroup h;                   // G = H <g>, H ∩ <g> <= G'
};

// hg^i -> hg^(i(1+N)). The direct factor <gG'> of G/G' is the largest
// factor of its primary decomposition (least coset index on ties), or the
// factor at `factor_index` when given. For perfect G returns the identity.
StretchResult StretchAutomorphism(const GroupPtr& group,
                                  std::optional<std::size_t> factor_index = std::nullopt);

// Number of factors in the primary decomposition of G/G'.
std::size_t AbelianizationFactorCount(const GroupPtr& group);

}  // namespace autbound

#endif  // AUTBOUND_AUT_H_
