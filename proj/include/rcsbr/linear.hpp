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

#ifndef RCSBR_LINEAR_HPP_
#define RCSBR_LINEAR_HPP_

#include <optional>
#include <vector>

#include "rcsbr/rational.hpp"

namespace rcsbr {

enum class Relation { kGreaterEq, kLessEq, kEqual };

struct LinearRow {
  std::vector<Rational> coef;
  Relation rel = Relation::kGreaterEq;
  Rational rhs = 0;
};

// Exact feasibility: a point x >= 0 with every row satisfied, or nullopt.
// Phase-one simplex over rationals with Bland's rule, so it terminates and
// the returned point is a deterministic function of the input.
std::optional<std::vector<Rational>> find_nonnegative_solution(
    int num_vars, const std::vector<LinearRow>& rows);

}  // namespace rcsbr

#endif  // RCSBR_LINEAR_HPP_
