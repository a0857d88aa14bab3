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

#ifndef AUTBOUND_BOUNDS_H_
#define AUTBOUND_BOUNDS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autbound/aut.h"
#include "autbound/big_expr.h"
#include "autbound/group.h"

namespace autbound {

// One inequality lhs <= rhs. Divisibility facts are encoded the same way:
// herstein_adney rows carry lhs = n mod p and rhs = 0.
struct BoundEntry {
  std::string bound_id;
  BigInt lhs;
  BigExpr rhs;
  bool holds = false;     // lhs <= rhs
  bool equality = false;  // lhs == rhs
};

struct BoundReport {
  std::string group;
  std::uint64_t order = 0;
  std::uint64_t n = 0;  // |Aut(G)|
  std::vector<BoundEntry> entries;
  std::uint64_t phi_value = 0;
  std::optional<std::uint64_t> end_count;

  const BoundEntry* Find(std::string_view bound_id) const;
  bool AllHold() const;
};

struct BoundOptions {
  // |End(G)| is only counted up to this order; above it end_conj is omitted.
  std::size_t end_max_order = kDefaultEndomorphismMaxOrder;
};

// Rows, in order: easy, inn, dG (abelian only), aut_prime:<p>, schur, width,
// primes:<p>, herstein_adney:<p> (p^2 | |G|), exp_bound, reverse,
// reverse_refined, log2_d, deaconescu, end_conj.
BoundReport MakeBoundReport(const GroupPtr& group, const AutGroup& aut,
                            const BoundOptions& options = {});

struct EqualityClassification {
  bool reverse_equality = false;
  bool prime_order = false;
  bool boolean = false;  // exp(G) <= 2
  bool agree = false;
};

EqualityClassification ClassifyEquality(const FiniteGroup& group,
                                        const BoundReport& report);

struct SchurData {
  std::size_t commutator_set_size = 0;  // |Gamma|
  std::size_t width = 0;                // 0 when G' = 1
  std::size_t m = 0;                    // |G/Z(G)|
  std::vector<Element> commutators;     // Gamma, ascending
};

// Gamma from pairs of coset representatives of G/Z(G); width by
// breadth-first layering of G' under right multiplication by Gamma.
SchurData ComputeSchurData(const GroupPtr& group);

struct CentralComplement {
  Subgroup central_part;  // Z(G)_p
  Subgroup complement;    // Q with G = Z(G)_p x Q
};

// Empty when |G|_p != |Z(G)|_p. Throws kNotPrime, kInvalidArgument when p
// does not divide |G|.
std::optional<CentralComplement> CentralPComplement(const GroupPtr& group,
                                                    std::uint64_t p);

struct ExponentFactorCheck {
  std::size_t factor_index = 0;
  std::uint64_t coset_order = 0;  // ord(gG')
  bool fixed_by_power = false;    // alpha^n(g) = g
  bool divides = false;           // ord(gG') | (1+N)^n - 1
};

// One row per cyclic factor of the primary decomposition of G/G'.
std::vector<ExponentFactorCheck> CheckExponentFactors(const GroupPtr& group,
                                                      std::uint64_t n);

struct WitnessCheck {
  std::string check_id;
  bool passed = false;
  std::string detail;
};

struct TheoremAWitness {
  std::string group;
  std::size_t m = 0;  // |G : Z(G)G'|
  Subgroup u;
  Subgroup c;
  Subgroup d;
  BigInt n_factor;  // N
  std::vector<WitnessCheck> checks;

  bool AllPassed() const;
};

// Runs the finiteness argument on one group: U from coset representatives
// of G/Z(G)G', the split Z(G) = C x D over U ∩ Z(G), the decomposition
// G = UC x D, and the factor-mixing count on D. Check ids:
// d_U_quotient_le_n, U_order_bound, Z_splits, product_split,
// D_abelian_bounded.
TheoremAWitness MakeTheoremAWitness(const GroupPtr& group, const AutGroup& aut);

}  // namespace autbound

#endif  // AUTBOUND_BOUNDS_H_
