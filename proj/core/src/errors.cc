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

#include "autbound/errors.h"

namespace autbound {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidPermutation: return "InvalidPermutation";
    case ErrorKind::kClosureExceeded: return "ClosureExceeded";
    case ErrorKind::kNotAssociative: return "NotAssociative";
    case ErrorKind::kNoIdentity: return "NoIdentity";
    case ErrorKind::kNotLatinSquare: return "NotLatinSquare";
    case ErrorKind::kOrderTooLarge: return "OrderTooLarge";
    case ErrorKind::kNotNormal: return "NotNormal";
    case ErrorKind::kNotAbelian: return "NotAbelian";
    case ErrorKind::kNotPrime: return "NotPrime";
    case ErrorKind::kNotPrimeOrder: return "NotPrimeOrder";
    case ErrorKind::kNotSubgroup: return "NotSubgroup";
    case ErrorKind::kNoPrimitiveRoot: return "NoPrimitiveRoot";
    case ErrorKind::kBadFactorOrder: return "BadFactorOrder";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kDuplicateName: return "DuplicateName";
    case ErrorKind::kExpectationMismatch: return "ExpectationMismatch";
    case ErrorKind::kIoError: return "IoError";
  }
  return "Unknown";
}

GroupError::GroupError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + detail),
      kind_(kind) {}

}  // namespace autbound
