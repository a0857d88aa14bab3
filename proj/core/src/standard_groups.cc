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

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "autbound/errors.h"
#include "autbound/group.h"
#include "autbound/number_theory.h"

namespace autbound {
namespace {

GroupError BadKind(const std::string& what) {
  return GroupError(ErrorKind::kInvalidArgument, what);
}

std::size_t RequireParam(const StandardKind& kind, std::size_t count) {
  if (kind.params.size() != count) throw BadKind("wrong number of parameters");
  return count;
}

// Order of the requested group, or 0 when it would exceed `cap`.
std::size_t PlannedOrder(const StandardKind& kind, std::size_t cap) {
  auto capped_mul = [cap](std::size_t a, std::size_t b) -> std::size_t {
    if (a == 0 || b == 0) return 0;
    if (a > cap / b) return 0;
    return a * b;
  };
  switch (kind.family) {
    case Family::kCyclic:
      RequireParam(kind, 1);
      if (kind.params[0] == 0) throw BadKind("cyclic(0)");
      return kind.params[0] <= cap ? kind.params[0] : 0;
    case Family::kDihedral:
      RequireParam(kind, 1);
      if (kind.params[0] == 0) throw BadKind("dihedral(0)");
      return capped_mul(2, kind.params[0]);
    case Family::kQuaternion8:
      return 8 <= cap ? 8 : 0;
    case Family::kDicyclic:
      RequireParam(kind, 1);
      if (kind.params[0] < 2) throw BadKind("dicyclic(n) needs n >= 2");
      return capped_mul(4, kind.params[0]);
    case Family::kSemidihedral: {
      RequireParam(kind, 1);
      const std::size_t n = kind.params[0];
      if (n < 16 || (n & (n - 1)) != 0) {
        throw BadKind("semidihedral(n) needs n a power of two >= 16");
      }
      return n <= cap ? n : 0;
    }
    case Family::kSymmetric:
    case Family::kAlternating: {
      RequireParam(kind, 1);
      const std::size_t n = kind.params[0];
      if (n == 0) throw BadKind("degree 0");
      std::size_t order = 1;
      for (std::size_t k = 2; k <= n; ++k) {
        order = capped_mul(order, k);
        if (order == 0) return 0;
      }
      if (kind.family == Family::kAlternating && n >= 2) order /= 2;
      return order;
    }
    case Family::kElementaryAbelian: {
      RequireParam(kind, 2);
      if (!IsPrime(kind.params[0])) throw BadKind("elementary_abelian needs a prime");
      std::size_t order = 1;
      for (std::size_t i = 0; i < kind.params[1]; ++i) {
        order = capped_mul(order, kind.params[0]);
        if (order == 0) return 0;
      }
      return order;
    }
    case Family::kAbelian: {
      std::size_t order = 1;
      for (std::size_t f : kind.params) {
        if (f == 0) throw BadKind("abelian factor 0");
        order = capped_mul(order, f);
        if (order == 0) return 0;
      }
      return order;
    }
    case Family::kProduct: {
      if (kind.factors.size() != 2) throw BadKind("product needs two factors");
      return capped_mul(PlannedOrder(kind.factors[0], cap),
                        PlannedOrder(kind.factors[1], cap));
    }
  }
  return 0;
}

template <class Mul>
GroupPtr FromRule(std::size_t n, std::string name, Mul mul) {
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = static_cast<Element>(mul(a, b));
    }
  }
  return std::make_shared<FiniteGroup>(n, std::move(table), 0, std::move(name));
}

std::string AbelianName(const std::vector<std::size_t>& factors) {
  std::string name;
  for (std::size_t f : factors) {
    if (!name.empty()) name += "x";
    name += "C" + std::to_string(f);
  }
  return name.empty() ? "C1" : name;
}

GroupPtr AbelianGroup(const std::vector<std::size_t>& factors, std::string name) {
  std::size_t n = 1;
  for (std::size_t f : factors) n *= f;
  // Mixed radix, first factor most significant.
  return FromRule(n, std::move(name), [&](std::size_t a, std::size_t b) {
    std::size_t result = 0;
    std::size_t stride = n;
    for (std::size_t f : factors) {
      stride /= f;
      const std::size_t da = (a / stride) % f;
      const std::size_t db = (b / stride) % f;
      result += ((da + db) % f) * stride;
    }
    return result;
  });
}

Permutation Cycle(std::size_t degree, const std::vector<std::uint32_t>& points) {
  Permutation id = Permutation::Identity(degree);
  std::vector<std::uint32_t> images = id.images();
  for (std::size_t i = 0; i < points.size(); ++i) {
    images[points[i]] = points[(i + 1) % points.size()];
  }
  return Permutation(std::move(images));
}

GroupPtr Build(const StandardKind& kind, std::size_t cap) {
  switch (kind.family) {
    case Family::kCyclic: {
      const std::size_t n = kind.params[0];
      return AbelianGroup({n}, "C" + std::to_string(n));
    }
    case Family::kDihedral: {
      const std::size_t n = kind.params[0];
      return FromRule(2 * n, "D" + std::to_string(2 * n), [n](std::size_t a, std::size_t b) {
        const std::size_t i = a % n, s = a / n, j = b % n, t = b / n;
        const std::size_t rot = s == 0 ? (i + j) % n : (i + n - j) % n;
        return rot + n * ((s + t) % 2);
      });
    }
    case Family::kQuaternion8:
    case Family::kDicyclic: {
      const std::size_t n = kind.family == Family::kQuaternion8 ? 2 : kind.params[0];
      const std::size_t m = 2 * n;  // order of a
      std::string name = kind.family == Family::kQuaternion8
                             ? "Q8"
                             : "Dic" + std::to_string(n);
      return FromRule(2 * m, std::move(name), [n, m](std::size_t a, std::size_t b) {
        const std::size_t i = a % m, s = a / m, j = b % m, t = b / m;
        std::size_t rot = s == 0 ? (i + j) % m : (i + m - j) % m;
        if (s == 1 && t == 1) rot = (rot + n) % m;
        return rot + m * ((s + t) % 2);
      });
    }
    case Family::kSemidihedral: {
      const std::size_t n = kind.params[0];
      const std::size_t m = n / 2;           // order of r
      const std::size_t twist = m / 2 - 1;   // s r s = r^twist
      return FromRule(n, "SD" + std::to_string(n), [m, twist](std::size_t a, std::size_t b) {
        const std::size_t i = a % m, s = a / m, j = b % m, t = b / m;
        const std::size_t jj = s == 0 ? j : (j * twist) % m;
        return (i + jj) % m + m * ((s + t) % 2);
      });
    }
    case Family::kSymmetric:
    case Family::kAlternating: {
      const std::size_t n = kind.params[0];
      std::vector<Permutation> gens;
      if (kind.family == Family::kSymmetric) {
        if (n >= 2) {
          std::vector<std::uint32_t> all(n);
          for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<std::uint32_t>(i);
          if (n >= 3) gens.push_back(Cycle(n, all));
          gens.push_back(Cycle(n, {0, 1}));
        }
      } else {
        for (std::uint32_t k = 2; k < n; ++k) gens.push_back(Cycle(n, {0, 1, k}));
      }
      GroupPtr g = FromGenerators(gens, n, cap);
      return g->renamed((kind.family == Family::kSymmetric ? "S" : "A") + std::to_string(n));
    }
    case Family::kElementaryAbelian: {
      std::vector<std::size_t> factors(kind.params[1], kind.params[0]);
      return AbelianGroup(factors, "C" + std::to_string(kind.params[0]) + "^" +
                                       std::to_string(kind.params[1]));
    }
    case Family::kAbelian:
      return AbelianGroup(kind.params, AbelianName(kind.params));
    case Family::kProduct: {
      GroupPtr a = Build(kind.factors[0], cap);
      GroupPtr b = Build(kind.factors[1], cap);
      return DirectProduct(a, b).group;
    }
  }
  throw BadKind("unknown family");
}

struct KindParser {
  const std::string& text;
  std::size_t pos = 0;

  void SkipSpace() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  GroupError Fail(const std::string& what) const {
    return GroupError(ErrorKind::kParseError,
                      "group kind '" + text + "' at offset " + std::to_string(pos) + ": " + what);
  }
  void Expect(char c) {
    SkipSpace();
    if (pos >= text.size() || text[pos] != c) throw Fail(std::string("expected '") + c + "'");
    ++pos;
  }
  std::string Word() {
    SkipSpace();
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (start == pos) throw Fail("expected a name");
    return text.substr(start, pos - start);
  }
  std::size_t Number() {
    SkipSpace();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw Fail("expected a number");
    return std::stoull(text.substr(start, pos - start));
  }
  std::vector<std::size_t> Numbers() {
    std::vector<std::size_t> out;
    Expect('(');
    SkipSpace();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      return out;
    }
    out.push_back(Number());
    SkipSpace();
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      out.push_back(Number());
      SkipSpace();
    }
    Expect(')');
    return out;
  }

  StandardKind Kind() {
    const std::string name = Word();
    if (name == "quaternion8") {
      SkipSpace();
      if (pos < text.size() && text[pos] == '(') Expect('('), Expect(')');
      return StandardKind::Quaternion8();
    }
    if (name == "product") {
      Expect('(');
      StandardKind a = Kind();
      Expect(',');
      StandardKind b = Kind();
      Expect(')');
      return StandardKind::Product(std::move(a), std::move(b));
    }
    std::vector<std::size_t> params = Numbers();
    auto one = [&]() {
      if (params.size() != 1) throw Fail(name + " takes one parameter");
      return params[0];
    };
    if (name == "cyclic") return StandardKind::Cyclic(one());
    if (name == "dihedral") return StandardKind::Dihedral(one());
    if (name == "dicyclic") return StandardKind::Dicyclic(one());
    if (name == "semidihedral") return StandardKind::Semidihedral(one());
    if (name == "symmetric") return StandardKind::Symmetric(one());
    if (name == "alternating") return StandardKind::Alternating(one());
    if (name == "elementary_abelian") {
      if (params.size() != 2) throw Fail("elementary_abelian takes (p,k)");
      return StandardKind::ElementaryAbelian(params[0], params[1]);
    }
    if (name == "abelian") return StandardKind::Abelian(std::move(params));
    throw Fail("unknown family '" + name + "'");
  }
};

std::string JoinNumbers(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

GroupPtr StandardGroup(const StandardKind& kind) {
  return StandardGroup(kind, MaxOrder());
}

GroupPtr StandardGroup(const StandardKind& kind, std::size_t max_order) {
  if (PlannedOrder(kind, max_order) == 0) {
    throw GroupError(ErrorKind::kOrderTooLarge,
                     FormatStandardKind(kind) + " exceeds order cap " +
                         std::to_string(max_order));
  }
  return Build(kind, max_order);
}

StandardKind ParseStandardKind(const std::string& text) {
  KindParser parser{text};
  StandardKind kind = parser.Kind();
  parser.SkipSpace();
  if (parser.pos != text.size()) throw parser.Fail("trailing characters");
  return kind;
}

std::string FormatStandardKind(const StandardKind& kind) {
  switch (kind.family) {
    case Family::kCyclic: return "cyclic(" + JoinNumbers(kind.params) + ")";
    case Family::kDihedral: return "dihedral(" + JoinNumbers(kind.params) + ")";
    case Family::kQuaternion8: return "quaternion8";
    case Family::kDicyclic: return "dicyclic(" + JoinNumbers(kind.params) + ")";
    case Family::kSemidihedral: return "semidihedral(" + JoinNumbers(kind.params) + ")";
    case Family::kSymmetric: return "symmetric(" + JoinNumbers(kind.params) + ")";
    case Family::kAlternating: return "alternating(" + JoinNumbers(kind.params) + ")";
    case Family::kElementaryAbelian:
      return "elementary_abelian(" + JoinNumbers(kind.params) + ")";
    case Family::kAbelian: return "abelian(" + JoinNumbers(kind.params) + ")";
    case Family::kProduct:
      return "product(" + FormatStandardKind(kind.factors.at(0)) + "," +
             FormatStandardKind(kind.factors.at(1)) + ")";
  }
  return "?";
}

}  // namespace autbound
