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

#ifndef AUTBOUND_HOM_SEARCH_H_
#define AUTBOUND_HOM_SEARCH_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "autbound/group.h"

namespace autbound {

enum class HomSearchKind {
  kHomomorphism,  // image order divides the generator order
  kInjective,     // image order equals the generator order, map injective
};

// Backtracking over images of a fixed generating sequence of the domain.
//
// The domain is laid out once as a breadth-first spanning tree whose i-th
// level is the subgroup K_i generated by the first i+1 generators. After an
// image is chosen for generator i the map is extended along the tree to K_i
// and every non-tree edge x -> x*g_j (j <= i) inside K_i is checked, so a
// partial assignment survives only if it is a homomorphism on K_i. Complete
// assignments are therefore homomorphisms on the whole domain.
class HomomorphismSearch {
 public:
  // `generators` must generate `domain`, each lying outside the subgroup
  // generated by its predecessors. Throws kInvalidArgument otherwise.
  HomomorphismSearch(const FiniteGroup& domain, const FiniteGroup& codomain,
                     std::vector<Element> generators, HomSearchKind kind);

  // Calls `visit` with each complete map (indexed by domain element) in
  // lexicographic order of generator images. `visit` returns false to stop.
  // `fixed_prefix` pins the images of the first generators.
  void ForEach(const std::function<bool(const std::vector<Element>&)>& visit,
               std::span<const Element> fixed_prefix = {});

  std::uint64_t Count(std::span<const Element> fixed_prefix = {});
  std::optional<std::vector<Element>> FindFirst(
      std::span<const Element> fixed_prefix = {});

  // Candidate images for generator `level` before consistency checks.
  bool IsCandidate(std::size_t level, Element image) const;

  const std::vector<Element>& generators() const { return generators_; }
  // Number of complete generator-image tuples tried by the last search.
  std::uint64_t tuples_tried() const { return tuples_tried_; }

 private:
  struct Edge {
    Element from;
    Element to;
    std::uint32_t generator;
  };

  bool Descend(std::size_t level, std::span<const Element> fixed_prefix,
               const std::function<bool(const std::vector<Element>&)>& visit);
  bool Extend(std::size_t level, Element image);
  void Retract(std::size_t level);

  const FiniteGroup& domain_;
  const FiniteGroup& codomain_;
  std::vector<Element> generators_;
  HomSearchKind kind_;

  // Spanning tree in discovery order; K_i = bfs_[0 .. level_end_[i]).
  std::vector<Element> bfs_;
  std::vector<Element> parent_;
  std::vector<std::uint32_t> via_;
  std::vector<std::size_t> level_end_;
  std::vector<std::vector<Edge>> level_edges_;

  std::vector<Element> images_;     // current generator images
  std::vector<Element> phi_;        // current partial map
  std::vector<int> image_owner_;    // codomain element -> level, or -1
  std::uint64_t tuples_tried_ = 0;
};

}  // namespace autbound

#endif  // AUTBOUND_HOM_SEARCH_H_
