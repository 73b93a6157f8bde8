// Copyright 2026 The hangar-planner Authors
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

#ifndef HANGAR_ERROR_HPP_
#define HANGAR_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hangar {

enum class ErrorCode {
  kMalformedSource,
  kUnsupportedCommand,
  kDegeneratePolygon,
  kSelfIntersecting,
  kZeroExtent,
  kEmptyGrid,
  kInvalidArgument,
  kNonPositiveInput,
  kNonPositiveFrameRate,
  kMissingColumn,
  kNonPositiveValue,
  kDuplicateId,
  kEmptyInput,
  kNoFeasiblePair,
  kNonPositiveFootprint,
  kUncoverablePoint,
  kInfeasible,
  kTimeBudgetExceeded,
  kNonPositiveQuantity,
  kIo,
};

inline constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedSource: return "MalformedSource";
    case ErrorCode::kUnsupportedCommand: return "UnsupportedCommand";
    case ErrorCode::kDegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::kSelfIntersecting: return "SelfIntersecting";
    case ErrorCode::kZeroExtent: return "ZeroExtent";
    case ErrorCode::kEmptyGrid: return "EmptyGrid";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNonPositiveInput: return "NonPositiveInput";
    case ErrorCode::kNonPositiveFrameRate: return "NonPositiveFrameRate";
    case ErrorCode::kMissingColumn: return "MissingColumn";
    case ErrorCode::kNonPositiveValue: return "NonPositiveValue";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kNoFeasiblePair: return "NoFeasiblePair";
    case ErrorCode::kNonPositiveFootprint: return "NonPositiveFootprint";
    case ErrorCode::kUncoverablePoint: return "UncoverablePoint";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kTimeBudgetExceeded: return "TimeBudgetExceeded";
    case ErrorCode::kNonPositiveQuantity: return "NonPositiveQuantity";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class PlannerError : public std::runtime_error {
 public:
  PlannerError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw PlannerError(code, message);
}

}  // namespace hangar

#endif  // HANGAR_ERROR_HPP_
