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

#include "autbound/hom_search.h"

#include <algorithm>
#include <string>
#include <utility>

#include "autbound/errors.h"

namespace autbound {

HomomorphismSearch::HomomorphismSearch(const FiniteGroup& domain,
                                       const FiniteGroup& codomain,
                                       std::vector<Element> generators,
                                       HomSearchKind kind)
    : domain_(domain),
      codomain_(codomain),
      generators_(std::move(generators)),
      kind_(kind) {
  const std::size_t n = domain_.order();
  std::vector<bool> reached(n, false);
  parent_.assign(n, domain_.identity());
  via_.assign(n, 0);
  bfs_.reserve(n);
  bfs_.push_back(domain_.identity());
  reached[domain_.identity()] = true;

  level_edges_.resize(generators_.size());
  for (std::size_t level = 0; level < generators_.size(); ++level) {
    const Element g = generators_[level];
    if (g >= n) {
      throw GroupError(ErrorKind::kInvalidArgument,
                       "generator index out of range");
    }
    if (reached[g]) {
      throw GroupError(ErrorKind::kInvalidArgument,
                       "generator " + std::to_string(g) +
                           " lies in the span of its predecessors");
    }
    const std::size_t old_end = bfs_.size();
    for (std::size_t pos = 0; pos < bfs_.size(); ++pos) {
      const Element x = bfs_[pos];
      const std::size_t first_gen = pos < old_end ? level : 0;
      for (std::size_t j = first_gen; j <= level; ++j) {
        const Element y = domain_.mul(x, generators_[j]);
        if (!reached[y]) {
          reached[y] = true;
          parent_[y] = x;
          via_[y] = static_cast<std::uint32_t>(j);
          bfs_.push_back(y);
        } else {
          level_edges_[level].push_back(
              {x, y, static_cast<std::uint32_t>(j)});
        }
      }
    }
    level_end_.push_back(bfs_.size());
  }
  if (bfs_.size() != n) {
    throw GroupError(ErrorKind::kInvalidArgument,
                     "generators do not generate the domain");
  }
  images_.assign(generators_.size(), codomain_.identity());
  phi_.assign(n, codomain_.identity());
  image_owner_.assign(codomain_.order(), -1);
}

bool HomomorphismSearch::IsCandidate(std::size_t level, Element image) const {
  const std::size_t gen_order = domain_.element_order(generators_[level]);
  const std::size_t img_order = codomain_.element_order(image);
  if (kind_ == HomSearchKind::kInjective) return img_order == gen_order;
  return gen_order % img_order == 0;
}

bool HomomorphismSearch::Extend(std::size_t level, Element image) {
  images_[level] = image;
  const std::size_t begin = level == 0 ? 1 : level_end_[level - 1];
  const std::size_t end = level_end_[level];
  const bool injective = kind_ == HomSearchKind::kInjective;
  for (std::size_t pos = begin; pos < end; ++pos) {
    const Element x = bfs_[pos];
    const Element y = codomain_.mul(phi_[parent_[x]], images_[via_[x]]);
    phi_[x] = y;
    if (injective) {
      if (image_owner_[y] != -1) {
        // Release what this level claimed so far.
        for (std::size_t back = begin; back < pos; ++back) {
          image_owner_[phi_[bfs_[back]]] = -1;
        }
        return false;
      }
      image_owner_[y] = static_cast<int>(level);
    }
  }
  for (const Edge& edge : level_edges_[level]) {
    if (phi_[edge.to] !=
        codomain_.mul(phi_[edge.from], images_[edge.generator])) {
      Retract(level);
      return false;
    }
  }
  return true;
}

void HomomorphismSearch::Retract(std::size_t level) {
  if (kind_ != HomSearchKind::kInjective) return;
  const std::size_t begin = level == 0 ? 1 : level_end_[level - 1];
  for (std::size_t pos = begin; pos < level_end_[level]; ++pos) {
    image_owner_[phi_[bfs_[pos]]] = -1;
  }
}

bool HomomorphismSearch::Descend(
    std::size_t level, std::span<const Element> fixed_prefix,
    const std::function<bool(const std::vector<Element>&)>& visit) {
  if (level == generators_.size()) {
    if (generators_.empty()) ++tuples_tried_;
    return visit(phi_);
  }
  const bool injective = kind_ == HomSearchKind::kInjective;
  auto try_image = [&](Element c) -> bool {
    if (!IsCandidate(level, c)) return true;
    if (injective && image_owner_[c] != -1) return true;
    if (level + 1 == generators_.size()) ++tuples_tried_;
    if (!Extend(level, c)) return true;
    const bool keep_going = Descend(level + 1, fixed_prefix, visit);
    Retract(level);
    return keep_going;
  };
  if (level < fixed_prefix.size()) return try_image(fixed_prefix[level]);
  for (std::size_t c = 0; c < codomain_.order(); ++c) {
    if (!try_image(static_cast<Element>(c))) return false;
  }
  return true;
}

void HomomorphismSearch::ForEach(
    const std::function<bool(const std::vector<Element>&)>& visit,
    std::span<const Element> fixed_prefix) {
  tuples_tried_ = 0;
  std::fill(image_owner_.begin(), image_owner_.end(), -1);
  phi_[domain_.identity()] = codomain_.identity();
  if (kind_ == HomSearchKind::kInjective) {
    image_owner_[codomain_.identity()] = -2;
  }
  Descend(0, fixed_prefix, visit);
}

std::uint64_t HomomorphismSearch::Count(std::span<const Element> fixed_prefix) {
  std::uint64_t count = 0;
  ForEach(
      [&count](const std::vector<Element>&) {
        ++count;
        return true;
      },
      fixed_prefix);
  return count;
}

std::optional<std::vector<Element>> HomomorphismSearch::FindFirst(
    std::span<const Element> fixed_prefix) {
  std::optional<std::vector<Element>> found;
  ForEach(
      [&found](const std::vector<Element>& map) {
        found = map;
        return false;
      },
      fixed_prefix);
  return found;
}

}  // namespace autbound
