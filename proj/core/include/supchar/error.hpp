// Copyright 2026 The supchar Authors
//
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

#ifndef SUPCHAR_ERROR_HPP_
#define SUPCHAR_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace supchar {

enum class ErrorCode {
  // scalars
  kNotPrime,
  kDegreeTooLarge,
  kNotPrimitive,
  kDivisionByZero,
  kLogOfZero,
  kOrderMismatch,
  kBadOrder,
  // algebra-core
  kMalformedSpec,
  kNotAssociative,
  kBadUnit,
  kBadIdempotents,
  kRadicalNotNilpotent,
  kNotDirectSum,
  kSNotCommutative,
  kNotInvertible,
  kNotInRadical,
  kSpaceTooLarge,
  kOrbitNotClosed,
  // superclass-engine
  kGroupTooLarge,
  kNotInH,
  kReductionFailed,
  kLabelCollision,
  // supercharacter-engine
  kNotRegular,
  kNotInStabilizer,
  kNotConstantOnSuperclass,
  kPartitionMismatch,
  // triangular
  kBadSize,
  kTableTooLarge,
  kLabelMismatch,
};

std::string_view error_name(ErrorCode code);

// All library failures are reported through this exception. `path()` names
// the offending input location (a JSON pointer for algebra specs) when one
// exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string path = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& path() const noexcept { return path_; }
  // The message without the error name and path decorations.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string path_;
  std::string detail_;
};

}  // namespace supchar

#endif  // SUPCHAR_ERROR_HPP_
