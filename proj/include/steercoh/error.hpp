// Copyright 2026 The steercoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steercoh {

enum class ErrorCode {
  kNotHermitian,
  kNotUnitTrace,
  kNotPSD,
  kNotBipartite,
  kWrongDimension,
  kDimensionMismatch,
  kNonUnitAxis,
  kInvalidPovmElement,
  kZeroProbability,
  kSingularDenominator,
  kSingularMarginal,
  kTrivialProductState,
  kDimensionTooLarge,
  kRankDeficientSchmidt,
  kParameterOutOfRange,
  kIncompletePovm,
  kWeightsInvalid,
  kGeometryViolation,
  kRadialSegment,
  kRankDeficient,
  kParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this type. The message
// names the violated tolerance and the measured value where one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace steercoh
