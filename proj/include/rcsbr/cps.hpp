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

#ifndef RCSBR_CPS_HPP_
#define RCSBR_CPS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rcsbr/error.hpp"
#include "rcsbr/index_set.hpp"
#include "rcsbr/rational.hpp"

namespace rcsbr {

// A probability measure on {0..n-1}, stored densely.
using Measure = std::vector<Rational>;

Measure dirac(int domain_size, int atom);
Measure uniform_on(int domain_size, const IndexSet& support);
IndexSet support(const Measure& m);
Rational mass(const Measure& m, const IndexSet& event);

// Conditional probability system on a finite domain. family[0] is the whole
// domain; conditionals[k] is the measure given family[k].
struct Cps {
  int domain_size = 0;
  std::vector<IndexSet> family;
  std::vector<Measure> conditionals;
  std::vector<std::string> event_ids;  // optional, for reports

  int find_event(const IndexSet& event) const;  // -1 if absent
  const Measure& given(const IndexSet& event) const;  // kUnknownConditioningEvent
};

struct CpsViolation {
  ErrorCode code = ErrorCode::kNotNormalized;
  int event = -1;  // C
  int inner = -1;  // B (chain rule only)
  int atom = -1;   // A = {atom} (chain rule only)
  std::string message;
};

// Checks A1-A3; the chain rule is checked on singletons, which suffices by
// additivity.
std::optional<CpsViolation> validate_cps(const Cps& cps);
void require_valid_cps(const Cps& cps);  // throws on the first violation

// Levels with pairwise disjoint supports covering the domain.
using Lps = std::vector<Measure>;

// Conditional on C: renormalized restriction of the first level charging C.
Cps lps_to_cps(const Lps& lps, const std::vector<IndexSet>& family);

bool conditionally_believes(const Cps& cps, const IndexSet& given, const IndexSet& event);
bool strongly_believes(const Cps& cps, const IndexSet& event);

}  // namespace rcsbr

#endif  // RCSBR_CPS_HPP_
