// Copyright 2026 The Authors.
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

#ifndef ARITHMAT_ERROR_HPP
#define ARITHMAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace arithmat {

enum class ErrorCode {
  // polynomial engine
  non_unit_coefficient_at_negative_exponent,
  negative_exponent_substitution,
  zero_at_negative_exponent,
  non_integral_result,
  // matroids and constructors
  underlying_matroid_mismatch,
  rank_exceeds_size,
  height_mismatch,
  not_a_matroid,
  nonpositive_multiplicity,
  ground_set_too_large,
  // document parsing
  malformed_document,
  unknown_kind,
  bad_subset_key,
  table_size_mismatch,
  // anything else that violates a documented precondition
  invalid_argument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::non_unit_coefficient_at_negative_exponent:
      return "NonUnitCoefficientAtNegativeExponent";
    case ErrorCode::negative_exponent_substitution:
      return "NegativeExponentSubstitution";
    case ErrorCode::zero_at_negative_exponent:
      return "ZeroAtNegativeExponent";
    case ErrorCode::non_integral_result:
      return "NonIntegralResult";
    case ErrorCode::underlying_matroid_mismatch:
      return "UnderlyingMatroidMismatch";
    case ErrorCode::rank_exceeds_size:
      return "RankExceedsSize";
    case ErrorCode::height_mismatch:
      return "HeightMismatch";
    case ErrorCode::not_a_matroid:
      return "NotAMatroid";
    case ErrorCode::nonpositive_multiplicity:
      return "NonpositiveMultiplicity";
    case ErrorCode::ground_set_too_large:
      return "GroundSetTooLarge";
    case ErrorCode::malformed_document:
      return "MalformedDocument";
    case ErrorCode::unknown_kind:
      return "UnknownKind";
    case ErrorCode::bad_subset_key:
      return "BadSubsetKey";
    case ErrorCode::table_size_mismatch:
      return "TableSizeMismatch";
    case ErrorCode::invalid_argument:
      return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace arithmat

#endif  // ARITHMAT_ERROR_HPP
