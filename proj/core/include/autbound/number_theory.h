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

#ifndef AUTBOUND_NUMBER_THEORY_H_
#define AUTBOUND_NUMBER_THEORY_H_

#include <cstdint>
#include <utility>
#include <vector>

namespace autbound {

bool IsPrime(std::uint64_t n);

// Prime factorization by trial division, ascending, with multiplicity.
std::vector<std::uint64_t> PrimeFactorsWithMultiplicity(std::uint64_t n);
// Distinct prime divisors, ascending.
std::vector<std::uint64_t> PrimeDivisors(std::uint64_t n);

// Largest power of p dividing n.
std::uint64_t PPart(std::uint64_t n, std::uint64_t p);
bool IsPrimePower(std::uint64_t n);

std::uint64_t EulerPhi(std::uint64_t n);
std::uint64_t ModPow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Least positive primitive root modulo a prime p (1 for p = 2).
std::uint64_t LeastPrimitiveRoot(std::uint64_t p);

}  // namespace autbound

#endif  // AUTBOUND_NUMBER_THEORY_H_
