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

#ifndef AUTBOUND_SUBGROUPS_H_
#define AUTBOUND_SUBGROUPS_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "autbound/group.h"

namespace autbound {

struct LatticeNode {
  ElementSet members;
  std::vector<Element> generators;  // witness sequence, one per level
};

// Breadth-first walk of the subgroups generated by sequences drawn from
// `candidates`. Level k holds the distinct subgroups generated by k
// candidates (each new generator outside the previous span); duplicates are
// removed by membership. `visit` sees each subgroup once, at the first level
// where it appears, and returns false to stop the walk.
void WalkSubgroupLattice(const FiniteGroup& group,
                         std::span<const Element> candidates,
                         const std::function<bool(const LatticeNode&, std::size_t level)>& visit);

// Every subgroup, ordered by (order, sorted member list).
std::vector<Subgroup> AllSubgroups(const GroupPtr& group);

}  // namespace autbound

#endif  // AUTBOUND_SUBGROUPS_H_
