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

#include "autbound/group.h"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "autbound/errors.h"
#include "autbound/hom_search.h"

namespace autbound {

std::size_t MaxOrder() {
  if (const char* env = std::getenv("AUTBOUND_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return static_cast<std::size_t>(std::min<unsigned long long>(value, 65535));
    }
  }
  return kDefaultMaxOrder;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const std::uint32_t v = images_[i];
    if (v >= images_.size() || seen[v]) {
      throw GroupError(ErrorKind::kInvalidPermutation,
                       "image list is not a bijection at position " +
                           std::to_string(i));
    }
    seen[v] = true;
  }
}

Permutation Permutation::Identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) {
    throw GroupError(ErrorKind::kInvalidArgument, "permutation degree mismatch");
  }
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = images_[rhs.images_[i]];
  Permutation p = Identity(0);
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[images_[i]] = static_cast<std::uint32_t>(i);
  Permutation p = Identity(0);
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table,
                         Element identity, std::string name)
    : order_(order),
      table_(std::move(table)),
      inverse_(order),
      orders_(order),
      identity_(identity),
      name_(std::move(name)) {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      if (table_[a * order_ + b] == identity_) {
        inverse_[a] = static_cast<Element>(b);
        break;
      }
    }
    std::uint32_t k = 1;
    Element x = static_cast<Element>(a);
    while (x != identity_) {
      x = mul(x, static_cast<Element>(a));
      ++k;
    }
    orders_[a] = k;
  }
}

Element FiniteGroup::pow(Element a, std::uint64_t k) const {
  k %= orders_[a];
  Element result = identity_;
  Element base = a;
  while (k != 0) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = a + 1; b < order_; ++b) {
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
    }
  }
  return true;
}

GroupPtr FiniteGroup::renamed(std::string name) const {
  auto copy = std::make_shared<FiniteGroup>(*this);
  copy->name_ = std::move(name);
  return copy;
}

// ---------------------------------------------------------------------------
// Subgroups and homomorphisms

Subgroup::Subgroup(GroupPtr parent, ElementSet members)
    : parent_(std::move(parent)),
      mask_(std::move(members)),
      members_(mask_.to_vector()) {}

bool IsSubgroup(const FiniteGroup& group, const ElementSet& members) {
  if (!members.contains(group.identity())) return false;
  const std::vector<Element> list = members.to_vector();
  for (Element a : list) {
    if (!members.contains(group.inv(a))) return false;
    for (Element b : list) {
      if (!members.contains(group.mul(a, b))) return false;
    }
  }
  return group.order() % list.size() == 0;
}

Subgroup MakeSubgroup(const GroupPtr& parent,
                      const std::vector<Element>& members) {
  ElementSet mask(parent->order());
  for (Element e : members) {
    if (e >= parent->order()) {
      throw GroupError(ErrorKind::kNotSubgroup, "element index out of range");
    }
    mask.insert(e);
  }
  if (!IsSubgroup(*parent, mask)) {
    throw GroupError(ErrorKind::kNotSubgroup,
                     "subset is not closed under the group operation");
  }
  return Subgroup(parent, std::move(mask));
}

bool IsNormal(const Subgroup& subgroup) {
  const FiniteGroup& g = *subgroup.parent();
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (Element n : subgroup.members()) {
      if (!subgroup.contains(g.conj(static_cast<Element>(x), n))) return false;
    }
  }
  return true;
}

Subgroup TrivialSubgroup(const GroupPtr& group) {
  ElementSet mask(group->order());
  mask.insert(group->identity());
  return Subgroup(group, std::move(mask));
}

Subgroup WholeGroup(const GroupPtr& group) {
  ElementSet mask(group->order());
  for (std::size_t i = 0; i < group->order(); ++i) mask.insert(static_cast<Element>(i));
  return Subgroup(group, std::move(mask));
}

Subgroup Intersection(const Subgroup& a, const Subgroup& b) {
  return Subgroup(a.parent(), a.mask().intersect(b.mask()));
}

bool IsHomomorphism(const Homomorphism& hom) {
  const FiniteGroup& d = *hom.domain;
  const FiniteGroup& c = *hom.codomain;
  if (hom.map.size() != d.order()) return false;
  for (Element v : hom.map) {
    if (v >= c.order()) return false;
  }
  for (std::size_t x = 0; x < d.order(); ++x) {
    for (std::size_t y = 0; y < d.order(); ++y) {
      const Element xy = d.mul(static_cast<Element>(x), static_cast<Element>(y));
      if (hom.map[xy] != c.mul(hom.map[x], hom.map[y])) return false;
    }
  }
  return hom.map[d.identity()] == c.identity();
}

bool IsBijective(const Homomorphism& hom) {
  if (hom.domain->order() != hom.codomain->order()) return false;
  std::vector<bool> hit(hom.codomain->order(), false);
  for (Element v : hom.map) {
    if (v >= hit.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Construction

GroupPtr FromGenerators(const std::vector<Permutation>& generators,
                        std::size_t max_order) {
  if (generators.empty()) {
    throw GroupError(ErrorKind::kInvalidArgument,
                     "empty generator list needs an explicit degree");
  }
  return FromGenerators(generators, generators.front().degree(), max_order);
}

GroupPtr FromGenerators(const std::vector<Permutation>& generators,
                        std::size_t degree, std::size_t max_order) {
  for (const Permutation& g : generators) {
    if (g.degree() != degree) {
      throw GroupError(ErrorKind::kInvalidPermutation,
                       "generators do not share one degree");
    }
  }
  std::vector<Permutation> elements{Permutation::Identity(degree)};
  std::map<Permutation, Element> index{{elements.front(), 0}};
  for (std::size_t pos = 0; pos < elements.size(); ++pos) {
    for (const Permutation& g : generators) {
      Permutation next = elements[pos] * g;
      if (index.contains(next)) continue;
      if (elements.size() >= max_order) {
        throw GroupError(ErrorKind::kClosureExceeded,
                         "closure exceeds " + std::to_string(max_order) +
                             " elements");
      }
      index.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = index.at(elements[a] * elements[b]);
    }
  }
  auto group = std::make_shared<FiniteGroup>(n, std::move(table), 0, "");
  group->perms_ = std::move(elements);
  return group;
}

std::string ValidateGroupAxioms(const FiniteGroup& group) {
  const std::size_t n = group.order();
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row_seen(n, false);
    std::vector<bool> col_seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      const Element r = group.mul(static_cast<Element>(a), static_cast<Element>(b));
      const Element c = group.mul(static_cast<Element>(b), static_cast<Element>(a));
      if (r >= n || row_seen[r]) return "row " + std::to_string(a) + " is not a permutation";
      if (c >= n || col_seen[c]) return "column " + std::to_string(a) + " is not a permutation";
      row_seen[r] = col_seen[c] = true;
    }
  }
  const Element e = group.identity();
  for (std::size_t a = 0; a < n; ++a) {
    if (group.mul(e, static_cast<Element>(a)) != a ||
        group.mul(static_cast<Element>(a), e) != a) {
      return "identity fails at element " + std::to_string(a);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Element ab = group.mul(static_cast<Element>(a), static_cast<Element>(b));
      for (std::size_t c = 0; c < n; ++c) {
        const Element bc = group.mul(static_cast<Element>(b), static_cast<Element>(c));
        if (group.mul(ab, static_cast<Element>(c)) != group.mul(static_cast<Element>(a), bc)) {
          return "associativity fails at (" + std::to_string(a) + "," +
                 std::to_string(b) + "," + std::to_string(c) + ")";
        }
      }
    }
  }
  return {};
}

GroupPtr FromCayleyTable(const std::vector<std::vector<std::size_t>>& table,
                         std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupError(ErrorKind::kNoIdentity, "empty table");
  if (n > MaxOrder()) {
    throw GroupError(ErrorKind::kOrderTooLarge,
                     "order " + std::to_string(n) + " exceeds the cap");
  }
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw GroupError(ErrorKind::kNotLatinSquare,
                       "row " + std::to_string(a) + " has wrong length");
    }
    std::vector<bool> seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t v = table[a][b];
      if (v >= n || seen[v]) {
        throw GroupError(ErrorKind::kNotLatinSquare,
                         "row " + std::to_string(a) + " repeats or leaves range at column " +
                             std::to_string(b));
      }
      seen[v] = true;
      flat[a * n + b] = static_cast<Element>(v);
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<bool> seen(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[table[a][b]]) {
        throw GroupError(ErrorKind::kNotLatinSquare,
                         "column " + std::to_string(b) + " repeats at row " +
                             std::to_string(a));
      }
      seen[table[a][b]] = true;
    }
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      ok = table[e][j] == j && table[j][e] == j;
    }
    if (ok) identity = e;
  }
  if (!identity) {
    throw GroupError(ErrorKind::kNoIdentity, "no two-sided identity row");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = flat[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (flat[ab * n + c] != flat[a * n + flat[b * n + c]]) {
          throw GroupError(ErrorKind::kNotAssociative,
                           "(" + std::to_string(a) + "," + std::to_string(b) +
                               "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return std::make_shared<FiniteGroup>(n, std::move(flat),
                                       static_cast<Element>(*identity),
                                       std::move(name));
}

GroupPtr ReadCayleyTable(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupError(ErrorKind::kIoError, "cannot open " + path);
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) -> GroupError {
    return GroupError(ErrorKind::kParseError,
                      path + ":" + std::to_string(line_no) + ": " + what);
  };
  std::size_t n = 0;
  bool have_header = false;
  std::vector<std::vector<std::size_t>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string word;
    if (!(tokens >> word)) continue;
    if (!have_header) {
      if (word != "order" || !(tokens >> n) || n == 0) {
        throw fail("expected 'order <n>'");
      }
      have_header = true;
      continue;
    }
    std::vector<std::size_t> row;
    std::istringstream values(line);
    std::string token;
    while (values >> token) {
      std::size_t consumed = 0;
      std::size_t v = 0;
      try {
        v = std::stoull(token, &consumed);
      } catch (const std::exception&) {
        consumed = 0;
      }
      if (consumed != token.size()) throw fail("bad index '" + token + "'");
      row.push_back(v);
    }
    if (row.size() != n) throw fail("expected " + std::to_string(n) + " entries");
    if (rows.size() == n) throw fail("more than " + std::to_string(n) + " rows");
    rows.push_back(std::move(row));
  }
  if (!have_header) throw fail("missing 'order' header");
  if (rows.size() != n) throw fail("expected " + std::to_string(n) + " rows");
  try {
    return FromCayleyTable(rows, path);
  } catch (const GroupError& e) {
    throw GroupError(e.kind(), path + ": " + e.what());
  }
}

std::string FormatCayleyTable(const FiniteGroup& group) {
  std::string out = "order " + std::to_string(group.order()) + "\n";
  for (std::size_t a = 0; a < group.order(); ++a) {
    for (std::size_t b = 0; b < group.order(); ++b) {
      if (b != 0) out += ' ';
      out += std::to_string(group.mul(static_cast<Element>(a), static_cast<Element>(b)));
    }
    out += '\n';
  }
  return out;
}

DirectProductResult DirectProduct(const GroupPtr& g, const GroupPtr& h) {
  const std::size_t ng = g->order();
  const std::size_t nh = h->order();
  const std::size_t n = ng * nh;
  if (n > MaxOrder()) {
    throw GroupError(ErrorKind::kOrderTooLarge,
                     "product order " + std::to_string(n) + " exceeds the cap");
  }
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Element a1 = static_cast<Element>(a / nh);
    const Element a2 = static_cast<Element>(a % nh);
    for (std::size_t b = 0; b < n; ++b) {
      const Element b1 = static_cast<Element>(b / nh);
      const Element b2 = static_cast<Element>(b % nh);
      table[a * n + b] = static_cast<Element>(g->mul(a1, b1) * nh + h->mul(a2, b2));
    }
  }
  const Element e = static_cast<Element>(g->identity() * nh + h->identity());
  auto product = std::make_shared<FiniteGroup>(n, std::move(table), e,
                                               g->name() + "x" + h->name());
  Homomorphism first{g, product, std::vector<Element>(ng)};
  for (std::size_t i = 0; i < ng; ++i) {
    first.map[i] = static_cast<Element>(i * nh + h->identity());
  }
  Homomorphism second{h, product, std::vector<Element>(nh)};
  for (std::size_t j = 0; j < nh; ++j) {
    second.map[j] = static_cast<Element>(g->identity() * nh + j);
  }
  return {product, std::move(first), std::move(second)};
}

// ---------------------------------------------------------------------------
// Structure

std::size_t ElementOrder(const FiniteGroup& group, Element g) {
  return group.element_order(g);
}

std::uint64_t Exponent(const FiniteGroup& group) {
  std::uint64_t e = 1;
  for (std::size_t x = 0; x < group.order(); ++x) {
    e = std::lcm(e, static_cast<std::uint64_t>(group.element_order(static_cast<Element>(x))));
  }
  return e;
}

Subgroup Center(const GroupPtr& group) {
  ElementSet mask(group->order());
  for (std::size_t z = 0; z < group->order(); ++z) {
    bool central = true;
    for (std::size_t x = 0; x < group->order() && central; ++x) {
      central = group->mul(static_cast<Element>(z), static_cast<Element>(x)) ==
                group->mul(static_cast<Element>(x), static_cast<Element>(z));
    }
    if (central) mask.insert(static_cast<Element>(z));
  }
  return Subgroup(group, std::move(mask));
}

Element Commutator(const FiniteGroup& group, Element x, Element y) {
  return group.mul(group.mul(x, y), group.mul(group.inv(x), group.inv(y)));
}

Subgroup CommutatorSubgroup(const GroupPtr& group) {
  ElementSet commutators(group->order());
  for (std::size_t x = 0; x < group->order(); ++x) {
    for (std::size_t y = 0; y < group->order(); ++y) {
      commutators.insert(Commutator(*group, static_cast<Element>(x), static_cast<Element>(y)));
    }
  }
  const std::vector<Element> gens = commutators.to_vector();
  return SubgroupGenerated(group, gens);
}

namespace {

ElementSet Closure(const FiniteGroup& group, ElementSet start,
                   std::span<const Element> generators) {
  std::vector<Element> queue = start.to_vector();
  if (!start.contains(group.identity())) {
    start.insert(group.identity());
    queue.push_back(group.identity());
  }
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    const Element x = queue[pos];
    for (Element s : generators) {
      const Element y = group.mul(x, s);
      if (start.insert(y)) queue.push_back(y);
    }
  }
  return start;
}

// Small generating set of an existing subgroup, chosen greedily by index.
std::vector<Element> GreedyGenerators(const Subgroup& sub) {
  const FiniteGroup& g = *sub.parent();
  std::vector<Element> gens;
  ElementSet current(g.order());
  current.insert(g.identity());
  for (Element x : sub.members()) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = Closure(g, std::move(current), gens);
  }
  return gens;
}

}  // namespace

Subgroup SubgroupGenerated(const GroupPtr& group,
                           std::span<const Element> generators) {
  ElementSet start(group->order());
  start.insert(group->identity());
  return Subgroup(group, Closure(*group, std::move(start), generators));
}

Subgroup SubgroupGenerated(const GroupPtr& group,
                           std::initializer_list<Element> generators) {
  return SubgroupGenerated(group, std::span<const Element>(generators.begin(), generators.size()));
}

Subgroup Join(const Subgroup& base, std::span<const Element> extra) {
  std::vector<Element> gens = GreedyGenerators(base);
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Subgroup(base.parent(), Closure(*base.parent(), base.mask(), gens));
}

Subgroup Join(const Subgroup& a, const Subgroup& b) {
  return Join(a, GreedyGenerators(b));
}

QuotientResult Quotient(const Subgroup& normal) {
  const GroupPtr& group = normal.parent();
  const FiniteGroup& g = *group;
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (Element n : normal.members()) {
      const Element c = g.conj(static_cast<Element>(x), n);
      if (!normal.contains(c)) {
        throw GroupError(ErrorKind::kNotNormal,
                         "conjugating " + std::to_string(n) + " by " +
                             std::to_string(x) + " leaves the subgroup");
      }
    }
  }
  constexpr Element kUnassigned = 0xFFFF;
  std::vector<Element> coset(g.order(), kUnassigned);
  std::vector<Element> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset[x] != kUnassigned) continue;
    const Element id = static_cast<Element>(reps.size());
    reps.push_back(static_cast<Element>(x));
    for (Element n : normal.members()) coset[g.mul(static_cast<Element>(x), n)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Element> table(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      table[a * q + b] = coset[g.mul(reps[a], reps[b])];
    }
  }
  auto quotient = std::make_shared<FiniteGroup>(
      q, std::move(table), coset[g.identity()], g.name() + "/N");
  return {quotient, Homomorphism{group, quotient, std::move(coset)},
          std::move(reps)};
}

SubgroupAsGroup AsGroup(const Subgroup& subgroup) {
  const FiniteGroup& g = *subgroup.parent();
  const std::vector<Element>& members = subgroup.members();
  const std::size_t k = members.size();
  std::vector<Element> local(g.order(), 0xFFFF);
  for (std::size_t i = 0; i < k; ++i) local[members[i]] = static_cast<Element>(i);
  std::vector<Element> table(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      table[a * k + b] = local[g.mul(members[a], members[b])];
    }
  }
  auto group = std::make_shared<FiniteGroup>(k, std::move(table),
                                             local[g.identity()], g.name() + "<sub>");
  return {group, Homomorphism{group, subgroup.parent(), members}, std::move(local)};
}

Subgroup SubgroupAsGroup::Pullback(const Subgroup& inner) const {
  ElementSet mask(embedding.codomain->order());
  for (Element e : inner.members()) mask.insert(embedding.map[e]);
  return Subgroup(embedding.codomain, std::move(mask));
}

Subgroup SubgroupAsGroup::Restrict(const Subgroup& outer) const {
  ElementSet mask(group->order());
  for (std::size_t i = 0; i < group->order(); ++i) {
    if (outer.contains(embedding.map[i])) mask.insert(static_cast<Element>(i));
  }
  return Subgroup(group, std::move(mask));
}

bool IsInternalDirectProduct(const Subgroup& x, const Subgroup& y,
                             const Subgroup& whole) {
  if (!x.mask().is_subset_of(whole.mask()) || !y.mask().is_subset_of(whole.mask())) {
    return false;
  }
  if (x.order() * y.order() != whole.order()) return false;
  if (x.mask().intersect(y.mask()).count() != 1) return false;
  const FiniteGroup& g = *whole.parent();
  for (Element w : whole.members()) {
    for (Element a : x.members()) {
      if (!x.contains(g.conj(w, a))) return false;
    }
    for (Element b : y.members()) {
      if (!y.contains(g.conj(w, b))) return false;
    }
  }
  return true;
}

std::vector<std::size_t> OrderProfile(const FiniteGroup& group) {
  std::vector<std::size_t> profile(group.order() + 1, 0);
  for (std::size_t x = 0; x < group.order(); ++x) {
    ++profile[group.element_order(static_cast<Element>(x))];
  }
  return profile;
}

std::optional<Homomorphism> FindIsomorphism(const GroupPtr& g,
                                            const GroupPtr& h) {
  if (g->order() != h->order()) return std::nullopt;
  if (OrderProfile(*g) != OrderProfile(*h)) return std::nullopt;
  if (g->is_abelian() != h->is_abelian()) return std::nullopt;
  HomomorphismSearch search(*g, *h, MinimalGeneratingSequence(g),
                            HomSearchKind::kInjective);
  auto map = search.FindFirst();
  if (!map) return std::nullopt;
  return Homomorphism{g, h, std::move(*map)};
}

}  // namespace autbound
