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

#ifndef AUTBOUND_GROUP_H_
#define AUTBOUND_GROUP_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "autbound/element_set.h"

namespace autbound {

inline constexpr std::size_t kDefaultMaxOrder = 2000;

// Hard cap on group orders. AUTBOUND_MAX_ORDER overrides the default; the
// value is clamped to what 16-bit element indices can address.
std::size_t MaxOrder();

class Permutation {
 public:
  // Throws GroupError(kInvalidPermutation) unless `images` is a bijection on
  // {0..images.size()-1}.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation Identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  // (p * q)(x) = p(q(x)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

// A finite group given by its full multiplication table. Immutable once
// constructed; share it through GroupPtr.
class FiniteGroup {
 public:
  // Trusted constructor: `table` must already satisfy the group axioms.
  // Factories below validate their inputs before calling it.
  FiniteGroup(std::size_t order, std::vector<Element> table, Element identity,
              std::string name);

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  const std::string& name() const { return name_; }

  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element conj(Element g, Element x) const {  // g x g^-1
    return mul(mul(g, x), inverse_[g]);
  }
  // a^k for k >= 0.
  Element pow(Element a, std::uint64_t k) const;
  std::size_t element_order(Element a) const { return orders_[a]; }
  std::span<const Element> row(Element a) const {
    return {table_.data() + a * order_, order_};
  }
  const std::vector<Element>& table() const { return table_; }

  bool is_abelian() const;

  // Permutation realizing each element, when the group came from generators.
  const std::vector<Permutation>& permutations() const { return perms_; }

  std::shared_ptr<const FiniteGroup> renamed(std::string name) const;

 private:
  friend std::shared_ptr<const FiniteGroup> FromGenerators(
      const std::vector<Permutation>&, std::size_t, std::size_t);

  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> orders_;
  Element identity_;
  std::string name_;
  std::vector<Permutation> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A subset of a parent group known to be a subgroup. Construct through
// MakeSubgroup (validating) or the operations below.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, ElementSet members);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Element>& members() const { return members_; }
  const ElementSet& mask() const { return mask_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Element e) const { return mask_.contains(e); }
  bool is_trivial() const { return members_.size() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.mask_ == b.mask_;
  }

 private:
  GroupPtr parent_;
  ElementSet mask_;
  std::vector<Element> members_;
};

// Throws GroupError(kNotSubgroup) if `members` is not a subgroup of `parent`.
Subgroup MakeSubgroup(const GroupPtr& parent, const std::vector<Element>& members);
bool IsSubgroup(const FiniteGroup& group, const ElementSet& members);
bool IsNormal(const Subgroup& subgroup);
Subgroup TrivialSubgroup(const GroupPtr& group);
Subgroup WholeGroup(const GroupPtr& group);
Subgroup Intersection(const Subgroup& a, const Subgroup& b);

struct Homomorphism {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<Element> map;

  Element operator()(Element x) const { return map[x]; }
};

// Full table check of map[x*y] = map[x]*map[y].
bool IsHomomorphism(const Homomorphism& hom);
bool IsBijective(const Homomorphism& hom);

// ---------------------------------------------------------------------------
// Construction

// Closure of the given permutations. Elements are indexed in breadth-first
// discovery order from the identity, applying generators in input order.
// An empty generator list needs `degree` to know the permutation degree.
GroupPtr FromGenerators(const std::vector<Permutation>& generators,
                        std::size_t max_order);
GroupPtr FromGenerators(const std::vector<Permutation>& generators,
                        std::size_t degree, std::size_t max_order);

// Validates the group axioms exhaustively (associativity is O(n^3)).
GroupPtr FromCayleyTable(const std::vector<std::vector<std::size_t>>& table,
                         std::string name = {});

// Text format: "order <n>" followed by n rows of n indices.
GroupPtr ReadCayleyTable(const std::string& path);
std::string FormatCayleyTable(const FiniteGroup& group);

enum class Family {
  kCyclic,             // cyclic(n), order n
  kDihedral,           // dihedral(n), symmetries of an n-gon, order 2n
  kQuaternion8,        // quaternion8
  kDicyclic,           // dicyclic(n), order 4n; dicyclic(2) = Q8
  kSemidihedral,       // semidihedral(n), order n = 2^k >= 16
  kSymmetric,          // symmetric(n), order n!
  kAlternating,        // alternating(n), order n!/2
  kElementaryAbelian,  // elementary_abelian(p,k), order p^k
  kAbelian,            // abelian(n1,n2,...), product of cyclic groups
  kProduct,            // product(G,H)
};

struct StandardKind {
  Family family = Family::kCyclic;
  std::vector<std::size_t> params;
  std::vector<StandardKind> factors;  // kProduct only

  static StandardKind Cyclic(std::size_t n) { return {Family::kCyclic, {n}, {}}; }
  static StandardKind Dihedral(std::size_t n) { return {Family::kDihedral, {n}, {}}; }
  static StandardKind Quaternion8() { return {Family::kQuaternion8, {}, {}}; }
  static StandardKind Dicyclic(std::size_t n) { return {Family::kDicyclic, {n}, {}}; }
  static StandardKind Semidihedral(std::size_t n) {
    return {Family::kSemidihedral, {n}, {}};
  }
  static StandardKind Symmetric(std::size_t n) { return {Family::kSymmetric, {n}, {}}; }
  static StandardKind Alternating(std::size_t n) {
    return {Family::kAlternating, {n}, {}};
  }
  static StandardKind ElementaryAbelian(std::size_t p, std::size_t k) {
    return {Family::kElementaryAbelian, {p, k}, {}};
  }
  static StandardKind Abelian(std::vector<std::size_t> factors) {
    return {Family::kAbelian, std::move(factors), {}};
  }
  static StandardKind Product(StandardKind a, StandardKind b) {
    return {Family::kProduct, {}, {std::move(a), std::move(b)}};
  }
};

// Parses e.g. "cyclic(6)", "abelian(2,4)", "product(cyclic(5),symmetric(3))".
StandardKind ParseStandardKind(const std::string& text);
std::string FormatStandardKind(const StandardKind& kind);

// Element indexing per family:
//   cyclic/abelian: mixed radix, first factor most significant; cyclic(n)
//     index k is the k-th power of the generator.
//   dihedral(n): r^i s^j at index i + n*j.
//   dicyclic(n): a^i x^j at index i + 2n*j (x^2 = a^n, x a x^-1 = a^-1).
//   semidihedral(n): r^i s^j at index i + (n/2)*j, s r s = r^(n/4 - 1).
//   symmetric/alternating: breadth-first closure of fixed generators.
//   product: see DirectProduct.
GroupPtr StandardGroup(const StandardKind& kind);
GroupPtr StandardGroup(const StandardKind& kind, std::size_t max_order);

struct DirectProductResult {
  GroupPtr group;
  Homomorphism embed_first;
  Homomorphism embed_second;
};

// Pair (i, j) is indexed i*|H| + j.
DirectProductResult DirectProduct(const GroupPtr& g, const GroupPtr& h);

// ---------------------------------------------------------------------------
// Structure

std::size_t ElementOrder(const FiniteGroup& group, Element g);
std::uint64_t Exponent(const FiniteGroup& group);

Subgroup Center(const GroupPtr& group);
Element Commutator(const FiniteGroup& group, Element x, Element y);
Subgroup CommutatorSubgroup(const GroupPtr& group);

// Smallest subgroup containing `generators` (breadth-first closure).
Subgroup SubgroupGenerated(const GroupPtr& group,
                           std::span<const Element> generators);
Subgroup SubgroupGenerated(const GroupPtr& group,
                           std::initializer_list<Element> generators);
// Closure of `base` together with `extra`.
Subgroup Join(const Subgroup& base, std::span<const Element> extra);
Subgroup Join(const Subgroup& a, const Subgroup& b);

struct QuotientResult {
  GroupPtr group;
  Homomorphism projection;
  // Least member of each coset, indexed by coset.
  std::vector<Element> representatives;
};

// Cosets are indexed by increasing least member. Throws kNotNormal.
QuotientResult Quotient(const Subgroup& normal);

struct SubgroupAsGroup {
  GroupPtr group;
  // Inclusion into the parent; group element i is members()[i].
  Homomorphism embedding;
  // Parent element -> index in `group`, for members only.
  std::vector<Element> local_index;

  Subgroup Pullback(const Subgroup& inner) const;  // image in the parent
  Subgroup Restrict(const Subgroup& outer) const;  // outer ∩ subgroup, local
};

SubgroupAsGroup AsGroup(const Subgroup& subgroup);

// A shortest generating sequence; each element lies outside the subgroup
// generated by its predecessors.
std::vector<Element> MinimalGeneratingSequence(const GroupPtr& group);
std::size_t MinGeneratingSize(const GroupPtr& group);

// Internal direct product check: X ∩ Y = 1, |X||Y| = |whole|, X,Y ⊆ whole,
// and both are normal in `whole`.
bool IsInternalDirectProduct(const Subgroup& x, const Subgroup& y,
                             const Subgroup& whole);

// Count of elements per element order; index = order.
std::vector<std::size_t> OrderProfile(const FiniteGroup& group);

std::optional<Homomorphism> FindIsomorphism(const GroupPtr& g,
                                            const GroupPtr& h);

// Exhaustive associativity/identity/Latin-square validation. Returns an
// empty string when valid, otherwise a description of the first violation.
std::string ValidateGroupAxioms(const FiniteGroup& group);

}  // namespace autbound

#endif  // AUTBOUND_GROUP_H_
