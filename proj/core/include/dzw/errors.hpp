// Copyright 2026 The dzw Authors.
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dzw {

enum class ErrorCode {
  kInvalidArgument,
  kDegenerateOrbit,
  kMissingTrace,
  kIndexOutOfRange,
  kBadDimension,
  kInvariantError,
  kConvergenceDomain,
  kDiverging,
  kSingularFactor,
  kMissingPoincare,
  kPoleAtZero,
  kPoleHit,
  kBranchCut,
  kUnsupportedModel,
  kFitFailure,
  kZeroMode,
  kNonAcyclic,
  kSchemaError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI error column) can react without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDegenerateOrbit: return "DegenerateOrbit";
    case ErrorCode::kMissingTrace: return "MissingTrace";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kBadDimension: return "BadDimension";
    case ErrorCode::kInvariantError: return "InvariantError";
    case ErrorCode::kConvergenceDomain: return "ConvergenceDomain";
    case ErrorCode::kDiverging: return "Diverging";
    case ErrorCode::kSingularFactor: return "SingularFactor";
    case ErrorCode::kMissingPoincare: return "MissingPoincare";
    case ErrorCode::kPoleAtZero: return "PoleAtZero";
    case ErrorCode::kPoleHit: return "PoleHit";
    case ErrorCode::kBranchCut: return "BranchCut";
    case ErrorCode::kUnsupportedModel: return "UnsupportedModel";
    case ErrorCode::kFitFailure: return "FitFailure";
    case ErrorCode::kZeroMode: return "ZeroMode";
    case ErrorCode::kNonAcyclic: return "NonAcyclic";
    case ErrorCode::kSchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace dzw
