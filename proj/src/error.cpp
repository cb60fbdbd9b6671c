// Copyright 2026 The rcsbr Authors
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

#include "rcsbr/error.hpp"

namespace rcsbr {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kDanglingChild: return "DanglingChild";
    case ErrorCode::kInfoSetActionMismatch: return "InfoSetActionMismatch";
    case ErrorCode::kPerfectRecallViolation: return "PerfectRecallViolation";
    case ErrorCode::kEmptyActionSet: return "EmptyActionSet";
    case ErrorCode::kBadPayoffArity: return "BadPayoffArity";
    case ErrorCode::kChainRuleViolation: return "ChainRuleViolation";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kSelfMassNotOne: return "SelfMassNotOne";
    case ErrorCode::kUnknownConditioningEvent: return "UnknownConditioningEvent";
    case ErrorCode::kUnknownInfoSet: return "UnknownInfoSet";
    case ErrorCode::kNotStatic: return "NotStatic";
    case ErrorCode::kNotAnFsbrs: return "NotAnFsbrs";
    case ErrorCode::kUnknownType: return "UnknownType";
    case ErrorCode::kMismatchedStateSpace: return "MismatchedStateSpace";
    case ErrorCode::kTargetNotInFamily: return "TargetNotInFamily";
    case ErrorCode::kEmptyTarget: return "EmptyTarget";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownPlayer: return "UnknownPlayer";
    case ErrorCode::kUnknownStrategy: return "UnknownStrategy";
    case ErrorCode::kEnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace rcsbr
