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

#include "autbound/number_theory.h"

#include <stdexcept>

namespace autbound {

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> PrimeFactorsWithMultiplicity(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> PrimeDivisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : PrimeFactorsWithMultiplicity(n)) {
    if (out.empty() || out.back() != p) out.push_back(p);
  }
  return out;
}

std::uint64_t PPart(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n != 0 && n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

bool IsPrimePower(std::uint64_t n) { return PrimeDivisors(n).size() == 1; }

std::uint64_t EulerPhi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p : PrimeDivisors(n)) result = result / p * (p - 1);
  return result;
}

std::uint64_t ModPow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp != 0) {
    if (exp & 1u) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t LeastPrimitiveRoot(std::uint64_t p) {
  if (!IsPrime(p)) throw std::invalid_argument("LeastPrimitiveRoot: not a prime");
  if (p == 2) return 1;
  const std::vector<std::uint64_t> qs = PrimeDivisors(p - 1);
  for (std::uint64_t r = 2; r < p; ++r) {
    bool primitive = true;
    for (std::uint64_t q : qs) {
      if (ModPow(r, (p - 1) / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return r;
  }
  throw std::logic_error("no primitive root found");
}

}  // namespace autbound
