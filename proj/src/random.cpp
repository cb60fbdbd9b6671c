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

#include "rcsbr/random.hpp"

#include <algorithm>

namespace rcsbr {
namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

TypeStructure random_type_structure(const Game& game, std::mt19937_64& rng, int max_types) {
  TypeStructure ts;
  const int n = game.num_players();
  ts.types.resize(n);
  ts.beliefs.resize(n);
  for (int j = 0; j < n; ++j) {
    const int count = uniform_int(rng, 1, max_types);
    for (int t = 0; t < count; ++t) ts.types[j].push_back("t" + std::to_string(t) + "_" + game.player_name(j));
  }
  const auto counts = ts.type_counts();
  for (int i = 0; i < n; ++i) {
    const Cps skeleton = lifted_skeleton(game, counts, i);
    const int size = skeleton.domain_size;
    for (int t = 0; t < ts.num_types(i); ++t) {
      std::vector<int> atoms = full_set(size);
      std::shuffle(atoms.begin(), atoms.end(), rng);
      Lps lps;
      IndexSet block;
      for (int k = 0; k < size; ++k) {
        block.push_back(atoms[k]);
        if (k + 1 == size || uniform_int(rng, 0, 2) != 0) {
          lps.push_back(uniform_on(size, make_set(block)));
          block.clear();
        }
      }
      Cps b = lps_to_cps(lps, skeleton.family);
      b.event_ids = skeleton.event_ids;
      ts.beliefs[i].push_back(std::move(b));
    }
  }
  return ts;
}

StateSpace random_state_space(const Game& game, const TypeStructure& host, std::mt19937_64& rng) {
  StateSpace ss;
  for (int j = 0; j < game.num_players(); ++j) {
    IndexSet real;
    while (real.empty()) {
      for (int t = 0; t < host.num_types(j); ++t) {
        if (uniform_int(rng, 0, 1)) real.push_back(t);
      }
    }
    ss.real.push_back(std::move(real));
  }
  return ss;
}

}  // namespace rcsbr
