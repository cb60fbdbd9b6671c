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

#ifndef RCSBR_FORMAT_HPP_
#define RCSBR_FORMAT_HPP_

#include <string>
#include <vector>

#include "rcsbr/epistemic.hpp"
#include "rcsbr/solution.hpp"

namespace rcsbr {

// "{Stop, Go}"; "∅" for the empty set.
std::string format_set(const Game& game, int i, const IndexSet& s);
// "{Out} × {Stop, Go}"; "∅" for the empty product.
std::string format_product(const Game& game, const ProductSet& p);
// "{(In-Across, t_a), (Out, t'_a)}".
std::string format_event(const Game& game, const TypeStructure& ts, int i, const Event& e);
std::string format_event_profile(const Game& game, const TypeStructure& ts, const EventProfile& e);
std::string format_measure(const Game& game, int i, const Measure& m);
// Conditionals of a CPS over S_{-i}, one "event: measure" entry per line.
std::vector<std::string> format_cps(const Game& game, int i, const Cps& cps);

std::vector<std::string> labels(const Game& game, int i, const IndexSet& s);
IndexSet strategies_from_labels(const Game& game, int i, const std::vector<std::string>& names);

}  // namespace rcsbr

#endif  // RCSBR_FORMAT_HPP_
