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

#ifndef RCSBR_RANDOM_HPP_
#define RCSBR_RANDOM_HPP_

#include <random>

#include "rcsbr/separating.hpp"

namespace rcsbr {

// Each type's belief comes from a random LPS over S_{-i} × T_{-i} whose
// levels are uniform on their blocks (Dirac on singletons).
TypeStructure random_type_structure(const Game& game, std::mt19937_64& rng, int max_types = 3);

// Nonempty random real-type sets.
StateSpace random_state_space(const Game& game, const TypeStructure& host, std::mt19937_64& rng);

}  // namespace rcsbr

#endif  // RCSBR_RANDOM_HPP_
