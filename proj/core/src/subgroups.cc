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

#include "autbound/subgroups.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>

#include "autbound/errors.h"

namespace autbound {
namespace {

ElementSet CloseUnder(const FiniteGroup& group, ElementSet members,
                      std::span<const Element> generators) {
  std::vector<Element> queue = members.to_vector();
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    const Element x = queue[pos];
    for (Element s : generators) {
      const Element y = group.mul(x, s);
      if (members.insert(y)) queue.push_back(y);
    }
  }
  return members;
}

// Drops candidates whose cyclic subgroup is already generated by a smaller
// candidate; <H, x> = <H, x^k> whenever gcd(k, ord x) = 1.
std::vector<Element> CyclicRepresentatives(const FiniteGroup& group,
                                           std::span<const Element> candidates) {
  ElementSet in_candidates(group.order());
  for (Element c : candidates) in_candidates.insert(c);
  std::vector<Element> reps;
  for (Element x : candidates) {
    const std::size_t ord = group.element_order(x);
    bool keep = true;
    for (std::size_t k = 2; k < ord && keep; ++k) {
      if (std::gcd(k, ord) != 1) continue;
      const Element y = group.pow(x, k);
      if (y < x && in_candidates.contains(y)) keep = false;
    }
    if (keep) reps.push_back(x);
  }
  return reps;
}

}  // namespace

void WalkSubgroupLattice(
    const FiniteGroup& group, std::span<const Element> candidates,
    const std::function<bool(const LatticeNode&, std::size_t level)>& visit) {
  const std::vector<Element> reps = CyclicRepresentatives(group, candidates);
  LatticeNode root{ElementSet(group.order()), {}};
  root.members.insert(group.identity());
  if (!visit(root, 0)) return;

  std::unordered_set<ElementSet, ElementSetHash> seen{root.members};
  std::vector<LatticeNode> current{std::move(root)};
  for (std::size_t level = 1; !current.empty(); ++level) {
    std::vector<LatticeNode> next;
    for (const LatticeNode& node : current) {
      std::vector<Element> gens = node.generators;
      gens.push_back(0);
      for (Element x : reps) {
        if (node.members.contains(x)) continue;
        gens.back() = x;
        ElementSet grown = CloseUnder(group, node.members, gens);
        if (!seen.insert(grown).second) continue;
        LatticeNode child{std::move(grown), gens};
        if (!visit(child, level)) return;
        next.push_back(std::move(child));
      }
    }
    current = std::move(next);
  }
}

std::vector<Element> MinimalGeneratingSequence(const GroupPtr& group) {
  std::vector<Element> all(group->order());
  std::iota(all.begin(), all.end(), Element{0});
  std::vector<Element> best;
  bool found = group->order() == 1;
  if (!found) {
    WalkSubgroupLattice(*group, all, [&](const LatticeNode& node, std::size_t) {
      if (node.members.count() == group->order()) {
        best = node.generators;
        found = true;
        return false;
      }
      return true;
    });
  }
  if (!found) {
    throw GroupError(ErrorKind::kInvalidArgument, "lattice walk did not reach the group");
  }
  // d(G) <= log2 |G|: each generator at least doubles the span.
  if ((std::size_t{1} << best.size()) > group->order()) {
    throw std::logic_error("generating sequence longer than log2 |G|");
  }
  return best;
}

std::size_t MinGeneratingSize(const GroupPtr& group) {
  return MinimalGeneratingSequence(group).size();
}

std::vector<Subgroup> AllSubgroups(const GroupPtr& group) {
  std::vector<Element> all(group->order());
  std::iota(all.begin(), all.end(), Element{0});
  std::vector<Subgroup> out;
  WalkSubgroupLattice(*group, all, [&](const LatticeNode& node, std::size_t) {
    out.emplace_back(group, node.members);
    return true;
  });
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return out;
}

}  // namespace autbound
