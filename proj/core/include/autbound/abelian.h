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

#ifndef AUTBOUND_ABELIAN_H_
#define AUTBOUND_ABELIAN_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "autbound/group.h"

namespace autbound {

struct CyclicFactor {
  Element generator;
  std::uint64_t order;

  friend bool operator==(const CyclicFactor&, const CyclicFactor&) = default;
};

// Internal direct product <x_1> x ... x <x_k> inside `parent`. The factors
// may cover only a subgroup of the parent (e.g. one primary component).
struct AbelianDecomposition {
  GroupPtr parent;
  std::vector<CyclicFactor> factors;

  std::uint64_t covered_order() const;
  std::vector<std::uint64_t> factor_orders() const;
};

// Exponent coordinates with respect to a decomposition. Building it is the
// internal-direct-product check: the map from exponent tuples
// (0 <= e_i < order_i) to elements must be injective.
class DecompositionCoordinates {
 public:
  static std::optional<DecompositionCoordinates> Build(
      const AbelianDecomposition& decomposition);

  bool covers(Element x) const { return tuple_index_[x] != kNone; }
  // Throws kInvalidArgument if x is outside the covered subgroup.
  std::vector<std::uint64_t> exponents(Element x) const;
  Element element(std::span<const std::uint64_t> exponents) const;
  Subgroup covered() const;

 private:
  static constexpr std::uint32_t kNone = 0xFFFFFFFFu;

  GroupPtr parent_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint32_t> tuple_index_;  // element -> mixed-radix index
  std::vector<Element> element_of_;         // mixed-radix index -> element
};

// True if the factors form an internal direct product equal to `target`
// and every factor order is a prime power.
bool IsPrimaryDecompositionOf(const AbelianDecomposition& decomposition,
                              const Subgroup& target);

// Primary form, factors sorted by (prime, descending order). Throws
// kNotAbelian.
AbelianDecomposition PrimaryDecomposition(const GroupPtr& group);
AbelianDecomposition PrimaryDecomposition(const Subgroup& abelian_subgroup);

// Elements of p-power order. Throws kNotAbelian, kNotPrime.
Subgroup PrimaryComponent(const GroupPtr& group, std::uint64_t p);
Subgroup PrimaryComponent(const Subgroup& abelian_subgroup, std::uint64_t p);

struct CyclicSplit {
  CyclicFactor factor;  // B = <factor.generator>
  Subgroup cyclic;      // B
  Subgroup complement;  // C
};

// A = B x C with B cyclic and a in B, for a of prime order. Throws
// kNotAbelian, kNotPrimeOrder.
CyclicSplit SplitCyclicContaining(const GroupPtr& group, Element a);
CyclicSplit SplitCyclicContaining(const Subgroup& ambient, Element a);

struct SubgroupSplit {
  Subgroup c;
  Subgroup d;
};

// A = C x D with B <= C and d(C) <= |B|. Throws kNotAbelian, kNotSubgroup.
SubgroupSplit SplitOverSubgroup(const GroupPtr& group, const Subgroup& b);
SubgroupSplit SplitOverSubgroup(const Subgroup& ambient, const Subgroup& b);

// Maximal subgroups of an abelian subgroup, sorted by member list.
std::vector<Subgroup> MaximalSubgroupsOfAbelian(const Subgroup& abelian_subgroup);

bool IsCommutative(const Subgroup& subgroup);

}  // namespace autbound

#endif  // AUTBOUND_ABELIAN_H_
