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

#ifndef RCSBR_TOOLS_COMMANDS_HPP_
#define RCSBR_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <string>

#include "report.hpp"

namespace rcsbr::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitAssertion = 2;
inline constexpr int kExitUsage = 3;

struct GlobalOptions {
  bool json = false;
  bool certify = false;
  std::uint64_t seed = 0;
};

struct ValidateArgs {
  std::string path;
  std::string game;  // set when `path` is a type structure or state space
};

struct SolveArgs {
  std::string which;  // sr | fsbrs | mfsbrs | p-infinity | fbrs
  std::string game;
};

struct RcsbrArgs {
  std::string game;
  std::string structure;  // empty with `random` > 0
  bool rcbr = false;
  int random = 0;
};

struct RealArgs {
  std::string game;
  std::string state;  // empty with `random` > 0
  std::string closures = "minimal";  // or "file"
  bool classify = false;
  bool verify_prop1 = false;
  int random = 0;
};

struct ConstructArgs {
  std::string game;
  std::string target;    // inline JSON or a file
  std::string quadrant;  // e.g. "degenerate/common"
  std::string out;
};

// Each fills the report and returns an exit code; library errors propagate.
int cmd_validate(const GlobalOptions& g, const ValidateArgs& a, Report& r);
int cmd_solve(const GlobalOptions& g, const SolveArgs& a, Report& r);
int cmd_rcsbr(const GlobalOptions& g, const RcsbrArgs& a, Report& r);
int cmd_real(const GlobalOptions& g, const RealArgs& a, Report& r);
int cmd_construct(const GlobalOptions& g, const ConstructArgs& a, Report& r);

// "degenerate/common", "non-degenerate/non-common", ... in either order.
Quadrant parse_quadrant(const std::string& text);

// Exit code for a library error.
int exit_code_for(const Error& e);

}  // namespace rcsbr::cli

#endif  // RCSBR_TOOLS_COMMANDS_HPP_
