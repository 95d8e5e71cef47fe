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

#include "supchar/error.hpp"

namespace supchar {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kDegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::kNotPrimitive: return "NotPrimitive";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kLogOfZero: return "LogOfZero";
    case ErrorCode::kOrderMismatch: return "OrderMismatch";
    case ErrorCode::kBadOrder: return "BadOrder";
    case ErrorCode::kMalformedSpec: return "MalformedSpec";
    case ErrorCode::kNotAssociative: return "NotAssociative";
    case ErrorCode::kBadUnit: return "BadUnit";
    case ErrorCode::kBadIdempotents: return "BadIdempotents";
    case ErrorCode::kRadicalNotNilpotent: return "RadicalNotNilpotent";
    case ErrorCode::kNotDirectSum: return "NotDirectSum";
    case ErrorCode::kSNotCommutative: return "SNotCommutative";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kNotInRadical: return "NotInRadical";
    case ErrorCode::kSpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::kOrbitNotClosed: return "OrbitNotClosed";
    case ErrorCode::kGroupTooLarge: return "GroupTooLarge";
    case ErrorCode::kNotInH: return "NotInH";
    case ErrorCode::kReductionFailed: return "ReductionFailed";
    case ErrorCode::kLabelCollision: return "LabelCollision";
    case ErrorCode::kNotRegular: return "NotRegular";
    case ErrorCode::kNotInStabilizer: return "NotInStabilizer";
    case ErrorCode::kNotConstantOnSuperclass: return "NotConstantOnSuperclass";
    case ErrorCode::kPartitionMismatch: return "PartitionMismatch";
    case ErrorCode::kBadSize: return "BadSize";
    case ErrorCode::kTableTooLarge: return "TableTooLarge";
    case ErrorCode::kLabelMismatch: return "LabelMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string path)
    : std::runtime_error(std::string(error_name(code)) + ": " + message +
                         (path.empty() ? std::string() : " at " + path)),
      code_(code),
      path_(std::move(path)),
      detail_(message) {}

}  // namespace supchar
