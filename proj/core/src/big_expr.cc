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

#include "autbound/big_expr.h"

#include <cmath>
#include <stdexcept>

namespace autbound {
namespace {

// min(base^exponent, cap), computed without exceeding cap by much.
BigInt CappedPow(const BigInt& base, const BigInt& exponent, const BigInt& cap) {
  if (exponent == 0) return 1;
  if (base <= 1) return base;
  BigInt acc = 1;
  for (BigInt k = 0; k < exponent; ++k) {
    acc *= base;
    if (acc >= cap) return cap;
  }
  return acc;
}

}  // namespace

BigExpr::BigExpr(BigInt value) {
  if (value < 0) throw std::invalid_argument("BigExpr: negative value");
  factors_.push_back({std::move(value), 1});
}

BigExpr BigExpr::Power(BigInt base, BigInt exponent) {
  if (base < 0 || exponent < 0) throw std::invalid_argument("BigExpr: negative power");
  BigExpr out;
  out.factors_.clear();
  out.factors_.push_back({std::move(base), std::move(exponent)});
  return out;
}

BigExpr BigExpr::operator*(const BigExpr& rhs) const {
  if (offset_ != 0 || rhs.offset_ != 0) {
    throw std::invalid_argument("BigExpr: product of differences");
  }
  BigExpr out = *this;
  out.factors_.insert(out.factors_.end(), rhs.factors_.begin(), rhs.factors_.end());
  return out;
}

BigExpr BigExpr::Minus(BigInt offset) const {
  BigExpr out = *this;
  out.offset_ += offset;
  if (out.CompareWith(0) > 0) throw std::invalid_argument("BigExpr: negative result");
  return out;
}

int BigExpr::CompareWith(const BigInt& lhs) const {
  // cap = lhs + offset + 1: once the product reaches it, value > lhs.
  const BigInt cap = lhs + offset_ + 1;
  BigInt product = 1;
  for (const Factor& f : factors_) {
    product *= CappedPow(f.base, f.exponent, cap);
    if (product >= cap) product = cap;
  }
  if (product >= cap) return -1;
  const BigInt value = product - offset_;
  if (lhs < value) return -1;
  return lhs == value ? 0 : 1;
}

double BigExpr::Log2Estimate() const {
  double total = 0.0;
  for (const Factor& f : factors_) {
    if (f.base == 0 && f.exponent != 0) return 0.0;
    if (f.exponent == 0 || f.base <= 1) continue;
    // Upper estimate for huge bases; Materialize re-checks the exact size.
    const double log_base =
        f.base < (BigInt(1) << 52)
            ? std::log2(static_cast<double>(f.base))
            : static_cast<double>(boost::multiprecision::msb(f.base) + 1);
    total += log_base * static_cast<double>(f.exponent);
  }
  return total;
}

std::optional<BigInt> BigExpr::Materialize(std::size_t max_bits) const {
  if (Log2Estimate() > static_cast<double>(max_bits) + 1.0) return std::nullopt;
  BigInt value = 1;
  for (const Factor& f : factors_) {
    value *= boost::multiprecision::pow(f.base, static_cast<unsigned>(f.exponent));
  }
  value -= offset_;
  if (value != 0 && boost::multiprecision::msb(value) + 1 > max_bits) return std::nullopt;
  return value;
}

std::string BigExpr::ToString(std::size_t max_bits) const {
  if (auto value = Materialize(max_bits)) return value->str();
  std::string out;
  for (const Factor& f : factors_) {
    if (!out.empty()) out += "*";
    out += f.base.str();
    if (f.exponent != 1) out += "^" + f.exponent.str();
  }
  if (offset_ != 0) out += "-" + offset_.str();
  return out;
}

}  // namespace autbound
