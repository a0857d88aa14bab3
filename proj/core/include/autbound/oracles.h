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

#ifndef AUTBOUND_ORACLES_H_
#define AUTBOUND_ORACLES_H_

#include <cstdint>

#include "autbound/group.h"

// Deliberately slow reference counts used to cross-check the search
// engines. None of them shares code with HomomorphismSearch.
namespace autbound {

// Tries every bijection fixing the identity. Throws kOrderTooLarge above
// order 9.
std::uint64_t NaiveAutomorphismCount(const GroupPtr& group);

// Tries every tuple of images of a generating sequence, extends each tuple
// along words and keeps those that define bijective homomorphisms. No
// order filter, no pruning. Throws kOrderTooLarge if |G|^d exceeds 2^24.
std::uint64_t UnprunedAutomorphismCount(const GroupPtr& group);

// Same enumeration as UnprunedAutomorphismCount without the bijectivity
// requirement.
std::uint64_t UnprunedEndomorphismCount(const GroupPtr& group);

// Tries every map G -> G. Throws kOrderTooLarge above order 7.
std::uint64_t NaiveEndomorphismCount(const GroupPtr& group);

}  // namespace autbound

#endif  // AUTBOUND_ORACLES_H_
