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

#ifndef AUTBOUND_ERRORS_H_
#define AUTBOUND_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace autbound {

enum class ErrorKind {
  kInvalidPermutation,
  kClosureExceeded,
  kNotAssociative,
  kNoIdentity,
  kNotLatinSquare,
  kOrderTooLarge,
  kNotNormal,
  kNotAbelian,
  kNotPrime,
  kNotPrimeOrder,
  kNotSubgroup,
  kNoPrimitiveRoot,
  kBadFactorOrder,
  kInvalidArgument,
  kParseError,
  kDuplicateName,
  kExpectationMismatch,
  kIoError,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every recoverable failure in the library is reported through this type.
// The message always starts with the kind name, e.g. "NotAssociative: ...".
class GroupError : public std::runtime_error {
 public:
  GroupError(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace autbound

#endif  // AUTBOUND_ERRORS_H_
