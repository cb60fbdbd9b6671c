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

#include "rcsbr/solution.hpp"

#include <algorithm>
#include <functional>

#include "rcsbr/linear.hpp"

namespace rcsbr {

bool SetFamily::contains(const ProductSet& p) const {
  return std::binary_search(members.begin(), members.end(), p);
}

bool PlayerFamily::contains(const IndexSet& s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

bool in_product(const std::vector<PlayerFamily>& families, const ProductSet& p) {
  for (std::size_t j = 0; j < families.size(); ++j) {
    if (!families[j].contains(p.parts.at(j))) return false;
  }
  return true;
}

namespace {

template <typename T>
void canonicalize(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Supersets of `base` within {0..n-1}, in increasing bitmask order.
std::vector<IndexSet> supersets(const IndexSet& base, int n) {
  std::vector<IndexSet> out;
  for (const IndexSet& s : all_subsets(n)) {
    if (is_subset(base, s)) out.push_back(s);
  }
  return out;
}

void check_enumerable(const Game& game) {
  for (int j = 0; j < game.num_players(); ++j) {
    if (game.num_strategies(j) > kMaxEnumeratedStrategies) {
      throw Error(ErrorCode::kEnumerationTooLarge,
                  "player '" + game.player_name(j) + "' has " + std::to_string(game.num_strategies(j)) +
                      " strategies; pass explicit candidate sets instead");
    }
  }
}

std::vector<ProductSet> products_of(const std::vector<std::vector<IndexSet>>& choices) {
  std::vector<ProductSet> out;
  std::vector<IndexSet> cur(choices.size());
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == choices.size()) {
      out.emplace_back(cur);
      return;
    }
    for (const IndexSet& s : choices[j]) {
      cur[j] = s;
      rec(j + 1);
    }
  };
  rec(0);
  canonicalize(out);
  return out;
}

}  // namespace

SrResult strong_rationalizability(const Game& game) {
  SrResult result;
  ProductSet cur = ProductSet::full(game);
  result.sequence.push_back(cur);
  while (true) {
    std::vector<IndexSet> next(game.num_players());
    for (int i = 0; i < game.num_players(); ++i) {
      for (int s : cur[i]) {
        if (find_justifying_cps(game, i, s, cur)) next[i].push_back(s);
      }
    }
    ProductSet step(std::move(next));
    if (step == cur) break;
    result.sequence.push_back(step);
    cur = std::move(step);
  }
  result.limit = cur;
  return result;
}

Verdict is_fsbrs(const Game& game, const ProductSet& f) {
  Verdict v;
  Certificate cert;
  cert.witness = f;
  cert.cps.resize(game.num_players());
  if (!f.empty()) {
    for (int i = 0; i < game.num_players(); ++i) {
      for (int s : f[i]) {
        auto cps = find_justifying_cps(game, i, s, f, f[i]);
        if (!cps) return v;
        cert.cps[i].emplace(s, std::move(*cps));
      }
    }
  }
  v.holds = true;
  v.certificate = std::move(cert);
  return v;
}

std::vector<ProductSet> candidate_products(const Game& game) {
  check_enumerable(game);
  std::vector<std::vector<IndexSet>> choices;
  for (int j = 0; j < game.num_players(); ++j) choices.push_back(all_subsets(game.num_strategies(j)));
  return products_of(choices);
}

SetFamily enumerate_fsbrs(const Game& game) {
  SetFamily fam;
  fam.kind = FamilyKind::kFsbrs;
  for (const ProductSet& f : candidate_products(game)) {
    if (is_fsbrs(game, f).holds) fam.members.push_back(f);
  }
  return fam;
}

PlayerFamily player_specific(const SetFamily& family, int i) {
  PlayerFamily out;
  out.player = i;
  out.kind = family.kind == FamilyKind::kMfsbrs ? FamilyKind::kMfsbrsPlayer : FamilyKind::kFsbrsPlayer;
  for (const ProductSet& p : family.members) out.members.push_back(p.parts.at(i));
  canonicalize(out.members);
  return out;
}

PlayerFamily player_specific_fsbrs(const Game& game, int i) {
  return player_specific(enumerate_fsbrs(game), i);
}

namespace {

std::optional<Certificate> mfsbrs_within(const Game& game, const ProductSet& m, const ProductSet& f) {
  Certificate cert;
  cert.witness = f;
  cert.cps.resize(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    for (int s : m[i]) {
      auto cps = find_justifying_cps(game, i, s, f, m[i]);
      if (!cps) return std::nullopt;
      cert.cps[i].emplace(s, std::move(*cps));
    }
  }
  return cert;
}

}  // namespace

Verdict is_mfsbrs(const Game& game, const ProductSet& m, const SetFamily& fsbrs) {
  Verdict v;
  if (m.empty()) {
    v.holds = true;
    v.certificate = Certificate{m, std::vector<std::map<int, Cps>>(game.num_players())};
    return v;
  }
  for (const ProductSet& f : fsbrs.members) {
    if (f.empty() || !m.is_subset_of(f)) continue;
    if (auto cert = mfsbrs_within(game, m, f)) {
      v.holds = true;
      v.certificate = std::move(cert);
      return v;
    }
  }
  return v;
}

Verdict is_mfsbrs(const Game& game, const ProductSet& m) {
  Verdict v;
  if (m.empty()) return is_mfsbrs(game, m, SetFamily{});
  std::vector<std::vector<IndexSet>> choices;
  for (int j = 0; j < game.num_players(); ++j) choices.push_back(supersets(m[j], game.num_strategies(j)));
  for (const ProductSet& f : products_of(choices)) {
    if (!is_fsbrs(game, f).holds) continue;
    if (auto cert = mfsbrs_within(game, m, f)) {
      v.holds = true;
      v.certificate = std::move(cert);
      return v;
    }
  }
  return v;
}

SetFamily enumerate_mfsbrs(const Game& game, const SetFamily& fsbrs) {
  SetFamily fam;
  fam.kind = FamilyKind::kMfsbrs;
  for (const ProductSet& m : candidate_products(game)) {
    if (is_mfsbrs(game, m, fsbrs).holds) fam.members.push_back(m);
  }
  return fam;
}

SetFamily enumerate_mfsbrs(const Game& game) { return enumerate_mfsbrs(game, enumerate_fsbrs(game)); }

PlayerFamily player_specific_mfsbrs(const Game& game, int i) {
  return player_specific(enumerate_mfsbrs(game), i);
}

Families compute_families(const Game& game) {
  Families fam;
  fam.fsbrs = enumerate_fsbrs(game);
  fam.mfsbrs = enumerate_mfsbrs(game, fam.fsbrs);
  for (int i = 0; i < game.num_players(); ++i) {
    fam.fsbrs_i.push_back(player_specific(fam.fsbrs, i));
    fam.mfsbrs_i.push_back(player_specific(fam.mfsbrs, i));
  }
  return fam;
}

void require_static(const Game& game) {
  if (!game.is_static()) throw Error(ErrorCode::kNotStatic, "the game has moves after the root");
}

bool is_best_reply_to_some_belief(const Game& game, int i, int s_i, const IndexSet& opponents) {
  if (opponents.empty()) return false;
  const int n = static_cast<int>(opponents.size());
  std::vector<LinearRow> rows;
  LinearRow total;
  total.coef.assign(n, 1);
  total.rel = Relation::kEqual;
  total.rhs = 1;
  rows.push_back(total);
  for (int alt = 0; alt < game.num_strategies(i); ++alt) {
    if (alt == s_i) continue;
    LinearRow r;
    r.rel = Relation::kGreaterEq;
    r.rhs = 0;
    for (int y : opponents) r.coef.push_back(game.payoff_against(i, s_i, y) - game.payoff_against(i, alt, y));
    rows.push_back(std::move(r));
  }
  return find_nonnegative_solution(n, rows).has_value();
}

PInfinityResult correlated_rationalizability(const Game& game) {
  require_static(game);
  PInfinityResult result;
  ProductSet cur = ProductSet::full(game);
  result.sequence.push_back(cur);
  while (true) {
    std::vector<IndexSet> next(game.num_players());
    for (int i = 0; i < game.num_players(); ++i) {
      const IndexSet opp = cur.opponents(game, i);
      for (int s : cur[i]) {
        if (is_best_reply_to_some_belief(game, i, s, opp)) next[i].push_back(s);
      }
    }
    ProductSet step(std::move(next));
    if (step == cur) break;
    result.sequence.push_back(step);
    cur = std::move(step);
  }
  result.limit = cur;
  return result;
}

Verdict is_fbrs(const Game& game, const ProductSet& f) {
  require_static(game);
  return is_fsbrs(game, f);
}

SetFamily enumerate_fbrs(const Game& game) {
  require_static(game);
  SetFamily fam = enumerate_fsbrs(game);
  fam.kind = FamilyKind::kFbrs;
  return fam;
}

}  // namespace rcsbr
