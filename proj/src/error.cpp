// Copyright 2026 The pkr Authors.
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

#include "pkr/error.hpp"

namespace pkr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kAsymmetryError: return "AsymmetryError";
    case ErrorKind::kTriangleViolation: return "TriangleViolation";
    case ErrorKind::kZeroOffDiagonal: return "ZeroOffDiagonal";
    case ErrorKind::kNegativeDistance: return "NegativeDistance";
    case ErrorKind::kNonZeroDiagonal: return "NonZeroDiagonal";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kDuplicateLabel: return "DuplicateLabel";
    case ErrorKind::kNonFiniteValue: return "NonFiniteValue";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kSpaceMismatch: return "SpaceMismatch";
    case ErrorKind::kNonZeroCharge: return "NonZeroCharge";
    case ErrorKind::kNumericalFailure: return "NumericalFailure";
    case ErrorKind::kNegativeLambda: return "NegativeLambda";
    case ErrorKind::kInvalidP: return "InvalidP";
    case ErrorKind::kInvalidQ: return "InvalidQ";
    case ErrorKind::kToleranceNotMet: return "ToleranceNotMet";
    case ErrorKind::kDivergenceMismatch: return "DivergenceMismatch";
    case ErrorKind::kConjugacyError: return "ConjugacyError";
    case ErrorKind::kOrderError: return "OrderError";
    case ErrorKind::kTooManyAtoms: return "TooManyAtoms";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kSchemaError: return "SchemaError";
    case ErrorKind::kIoError: return "IoError";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace pkr
