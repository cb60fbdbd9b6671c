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

#ifndef RCSBR_ERROR_HPP_
#define RCSBR_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rcsbr {

enum class ErrorCode {
  // Game validation.
  kNotATree,
  kDanglingChild,
  kInfoSetActionMismatch,
  kPerfectRecallViolation,
  kEmptyActionSet,
  kBadPayoffArity,
  // CPS axioms.
  kChainRuleViolation,
  kNotNormalized,
  kSelfMassNotOne,
  kUnknownConditioningEvent,
  kUnknownInfoSet,
  // Solution concepts and structures.
  kNotStatic,
  kNotAnFsbrs,
  kUnknownType,
  kMismatchedStateSpace,
  kTargetNotInFamily,
  kEmptyTarget,
  // Input plumbing.
  kParseError,
  kUnknownPlayer,
  kUnknownStrategy,
  kEnumerationTooLarge,
  // A postcondition checked by re-running the engine did not hold.
  kVerificationFailed,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace rcsbr

#endif  // RCSBR_ERROR_HPP_
