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

#ifndef PKR_ERROR_HPP_
#define PKR_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pkr {

enum class ErrorKind {
  // Metric validation.
  kAsymmetryError,
  kTriangleViolation,
  kZeroOffDiagonal,
  kNegativeDistance,
  kNonZeroDiagonal,
  kDimensionMismatch,
  kDuplicateLabel,
  kNonFiniteValue,
  // Measures and functions.
  kIndexOutOfRange,
  kSpaceMismatch,
  kNonZeroCharge,
  // Solvers.
  kNumericalFailure,
  kNegativeLambda,
  kInvalidP,
  kInvalidQ,
  kToleranceNotMet,
  // Certificates.
  kDivergenceMismatch,
  kConjugacyError,
  kOrderError,
  // Reference solvers.
  kTooManyAtoms,
  kTooLarge,
  // Input handling.
  kSchemaError,
  kIoError,
  kInvalidArgument,
};

// Stable name used in machine-readable error payloads, e.g. "TriangleViolation".
std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace pkr

#endif  // PKR_ERROR_HPP_
