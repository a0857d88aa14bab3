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

#ifndef AUTBOUND_BIG_EXPR_H_
#define AUTBOUND_BIG_EXPR_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace autbound {

using BigInt = boost::multiprecision::cpp_int;

// An exact non-negative integer kept in the form
//   base_1^exp_1 * ... * base_k^exp_k - offset.
// Right-hand sides such as n^(2n^3) are far too large to materialize, yet
// comparisons against a small left-hand side only need to multiply until
// the running product clears it.
class BigExpr {
 public:
  BigExpr() : BigExpr(BigInt(0)) {}
  explicit BigExpr(BigInt value);

  static BigExpr Power(BigInt base, BigInt exponent);

  BigExpr operator*(const BigExpr& rhs) const;
  // Subtracts from a product; the result must stay non-negative.
  BigExpr Minus(BigInt offset) const;

  // Sign of (lhs - value): -1, 0 or +1. Exact.
  int CompareWith(const BigInt& lhs) const;
  bool IsAtLeast(const BigInt& lhs) const { return CompareWith(lhs) <= 0; }

  // Base-2 logarithm estimate of the value (before subtracting offset).
  double Log2Estimate() const;
  // Exact value when it has at most `max_bits` bits.
  std::optional<BigInt> Materialize(std::size_t max_bits) const;

  // Decimal when the value fits in `max_bits`, otherwise the power form,
  // e.g. "24^27648" or "3^24*24^27648-1".
  std::string ToString(std::size_t max_bits = kDefaultMaterializeBits) const;

  static constexpr std::size_t kDefaultMaterializeBits = 4096;

 private:
  struct Factor {
    BigInt base;
    BigInt exponent;
  };
  std::vector<Factor> factors_;
  BigInt offset_ = 0;
};

}  // namespace autbound

#endif  // AUTBOUND_BIG_EXPR_H_
