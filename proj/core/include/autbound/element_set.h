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

#ifndef AUTBOUND_ELEMENT_SET_H_
#define AUTBOUND_ELEMENT_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace autbound {

// Element indices into a Cayley table. Orders are capped well below 2^16.
using Element = std::uint16_t;

// Fixed-universe bitset over element indices. Used for subgroup membership
// and for deduplicating subgroups during lattice searches.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }

  bool contains(Element e) const {
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }
  // Returns true if the element was newly inserted.
  bool insert(Element e) {
    std::uint64_t& w = words_[e >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (e & 63);
    if (w & bit) return false;
    w |= bit;
    return true;
  }
  void erase(Element e) {
    words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  ElementSet intersect(const ElementSet& other) const {
    ElementSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      out.words_[i] = words_[i] & other.words_[i];
    }
    return out;
  }

  // Ascending list of members.
  std::vector<Element> to_vector() const {
    std::vector<Element> out;
    out.reserve(count());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        out.push_back(static_cast<Element>(i * 64 + bit));
        w &= w - 1;
      }
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t w : words_) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace autbound

#endif  // AUTBOUND_ELEMENT_SET_H_
