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

#include "autbound/oracles.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "autbound/errors.h"

namespace autbound {
namespace {

bool PreservesProducts(const FiniteGroup& group, const std::vector<Element>& map) {
  const std::size_t n = group.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ab = group.mul(static_cast<Element>(a), static_cast<Element>(b));
      if (map[ab] != group.mul(map[a], map[b])) return false;
    }
  }
  return true;
}

bool IsPermutationMap(const std::vector<Element>& map) {
  std::vector<bool> seen(map.size(), false);
  for (const Element x : map) {
    if (seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

// Extends generator images along words from the identity; empty if two
// words for the same element disagree.
std::optional<std::vector<Element>> ExtendAlongWords(const FiniteGroup& group,
                                                     const std::vector<Element>& gens,
                                                     const std::vector<Element>& images) {
  constexpr Element kUnset = 0xFFFF;
  std::vector<Element> map(group.order(), kUnset);
  map[group.identity()] = group.identity();
  std::vector<Element> queue = {group.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element y = group.mul(x, gens[i]);
      const Element image = group.mul(map[x], images[i]);
      if (map[y] == kUnset) {
        map[y] = image;
        queue.push_back(y);
      } else if (map[y] != image) {
        return std::nullopt;
      }
    }
  }
  return map;
}

std::uint64_t CountGeneratorImages(const GroupPtr& group, bool require_bijective) {
  const FiniteGroup& g = *group;
  const auto gens = MinimalGeneratingSequence(group);
  double tuples = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) tuples *= static_cast<double>(g.order());
  if (tuples > static_cast<double>(1u << 24)) {
    throw GroupError(ErrorKind::kOrderTooLarge, "too many generator-image tuples");
  }
  std::vector<Element> images(gens.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    if (const auto map = ExtendAlongWords(g, gens, images)) {
      if ((!require_bijective || IsPermutationMap(*map)) && PreservesProducts(g, *map)) {
        ++count;
      }
    }
    std::size_t i = 0;
    while (i < images.size() && ++images[i] == g.order()) images[i++] = 0;
    if (i == images.size()) break;
  }
  return count;
}

}  // namespace

std::uint64_t NaiveAutomorphismCount(const GroupPtr& group) {
  const FiniteGroup& g = *group;
  if (g.order() > 9) throw GroupError(ErrorKind::kOrderTooLarge, "naive oracle needs order <= 9");
  std::vector<Element> others;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (x != g.identity()) others.push_back(static_cast<Element>(x));
  }
  std::vector<Element> images = others;
  std::uint64_t count = 0;
  do {
    std::vector<Element> map(g.order());
    map[g.identity()] = g.identity();
    for (std::size_t i = 0; i < others.size(); ++i) map[others[i]] = images[i];
    if (PreservesProducts(g, map)) ++count;
  } while (std::next_permutation(images.begin(), images.end()));
  return count;
}

std::uint64_t UnprunedAutomorphismCount(const GroupPtr& group) {
  return CountGeneratorImages(group, true);
}

std::uint64_t UnprunedEndomorphismCount(const GroupPtr& group) {
  return CountGeneratorImages(group, false);
}

std::uint64_t NaiveEndomorphismCount(const GroupPtr& group) {
  const FiniteGroup& g = *group;
  if (g.order() > 7) throw GroupError(ErrorKind::kOrderTooLarge, "naive oracle needs order <= 7");
  std::vector<Element> map(g.order(), 0);
  std::uint64_t count = 0;
  while (true) {
    if (PreservesProducts(g, map)) ++count;
    std::size_t i = 0;
    while (i < map.size() && ++map[i] == g.order()) map[i++] = 0;
    if (i == map.size()) break;
  }
  return count;
}

}  // namespace autbound
