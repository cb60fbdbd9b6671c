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

#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace rcsbr::oracle {
namespace {

using Row = std::vector<Rational>;

// Solves the square-or-taller system rows·x = rhs; nullopt unless the
// solution is unique.
std::optional<std::vector<Rational>> solve_unique(int n, std::vector<Row> rows) {
  int rank = 0;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[rank][col];
      for (int c = col; c <= n; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
    if (rows[r][n] != 0) return std::nullopt;
  }
  std::vector<Rational> x(n);
  for (int r = 0; r < n; ++r) x[r] = rows[r][n] / rows[r][r];
  return x;
}

Rational dot(const Row& row, const std::vector<Rational>& x) {
  Rational v = 0;
  for (std::size_t k = 0; k < x.size(); ++k) v += row[k] * x[k];
  return v;
}

bool feasible_point(const std::vector<Rational>& x, const std::vector<Row>& eq, const std::vector<Row>& ineq) {
  const std::size_t n = x.size();
  for (const auto& row : eq) {
    if (dot(row, x) != row[n]) return false;
  }
  for (const auto& row : ineq) {
    if (dot(row, x) < row[n]) return false;
  }
  return true;
}

int rank_of(int n, std::vector<Row> rows) {
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      const Rational factor = rows[r][col] / rows[rank][col];
      for (int c = col; c <= n; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

Rational utility_gap(const Game& game, int i, int s, int alt, int y) {
  return game.payoff_against(i, s, y) - game.payoff_against(i, alt, y);
}

int first_level(const std::vector<IndexSet>& blocks, const IndexSet& event) {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (intersects(blocks[b], event)) return static_cast<int>(b);
  }
  return -1;
}

// Row over the weights: Σ_{y ∈ B ∩ C} (u(s,y) - u(alt,y)) w_y, rhs 0.
Row comparison_row(const Game& game, int i, int s, int alt, const IndexSet& level_in_event) {
  const int n = game.num_opponent_profiles(i);
  Row row(n + 1, 0);
  for (int y : level_in_event) row[y] = utility_gap(game, i, s, alt, y);
  return row;
}

}  // namespace

std::string fixture(const std::string& name) { return std::string(RCSBR_FIXTURE_DIR) + "/" + name; }

std::vector<std::vector<IndexSet>> ordered_partitions(int n) {
  std::vector<std::vector<IndexSet>> out;
  std::vector<IndexSet> prefix;
  std::function<void(const IndexSet&)> rec = [&](const IndexSet& rest) {
    if (rest.empty()) {
      out.push_back(prefix);
      return;
    }
    const int m = static_cast<int>(rest.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      IndexSet block, remaining;
      for (int k = 0; k < m; ++k) ((mask >> k) & 1u ? block : remaining).push_back(rest[k]);
      prefix.push_back(block);
      rec(remaining);
      prefix.pop_back();
    }
  };
  rec(full_set(n));
  return out;
}

std::vector<std::vector<Rational>> vertices(int n, const std::vector<Row>& eq, const std::vector<Row>& ineq) {
  std::vector<Row> all_ineq = ineq;
  for (int k = 0; k < n; ++k) {
    Row row(n + 1, 0);
    row[k] = 1;
    all_ineq.push_back(row);
  }
  const int r = rank_of(n, eq);
  const int need = n - r;
  const int m = static_cast<int>(all_ineq.size());
  std::set<std::vector<Rational>> found;
  if (need > m) return {};
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + need, true);
  do {
    std::vector<Row> system = eq;
    for (int k = 0; k < m; ++k) {
      if (pick[k]) system.push_back(all_ineq[k]);
    }
    auto x = solve_unique(n, system);
    if (x && feasible_point(*x, eq, all_ineq)) found.insert(*x);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return {found.begin(), found.end()};
}

IndexSet best_replies(const Game& game, int i, const Cps& cps) {
  IndexSet out;
  for (int s = 0; s < game.num_strategies(i); ++s) {
    bool best = true;
    for (int h : game.own_infosets(i)) {
      if (!contains(game.allowing(i, h), s)) continue;
      const IndexSet event = game.opponent_event(i, h);
      const Measure* m = nullptr;
      for (std::size_t k = 0; k < cps.family.size(); ++k) {
        if (cps.family[k] == event) m = &cps.conditionals[k];
      }
      if (m == nullptr) return {};
      for (int alt : game.allowing(i, h)) {
        Rational gap = 0;
        for (int y = 0; y < game.num_opponent_profiles(i); ++y) gap += (*m)[y] * utility_gap(game, i, s, alt, y);
        if (gap < 0) best = false;
      }
    }
    if (best) out.push_back(s);
  }
  return out;
}

bool justifiable(const Game& game, int i, int s_star, const IndexSet& f_opp,
                 const std::optional<IndexSet>& fullness) {
  const int n = game.num_opponent_profiles(i);
  std::vector<IndexSet> events;
  for (const auto& ev : game.conditioning_family(i)) events.push_back(ev.event);

  // Per excluded strategy, the (information set, alternative) pairs that
  // could knock it out of ρ.
  std::vector<std::vector<std::pair<int, int>>> options;
  if (fullness) {
    for (int s = 0; s < game.num_strategies(i); ++s) {
      if (contains(*fullness, s)) continue;
      std::vector<std::pair<int, int>> opts;
      for (int h : game.own_infosets(i)) {
        if (!contains(game.allowing(i, h), s)) continue;
        for (int alt : game.allowing(i, h)) {
          if (alt != s) opts.emplace_back(h, alt);
        }
      }
      if (opts.empty()) return false;
      options.push_back(std::move(opts));
    }
  }
  std::vector<int> excluded;
  if (fullness) {
    for (int s = 0; s < game.num_strategies(i); ++s) {
      if (!contains(*fullness, s)) excluded.push_back(s);
    }
  }

  for (const auto& blocks : ordered_partitions(n)) {
    bool sb_ok = true;
    if (!f_opp.empty()) {
      for (const auto& c : events) {
        if (!intersects(c, f_opp)) continue;
        if (!is_subset(intersect(blocks[first_level(blocks, c)], c), f_opp)) sb_ok = false;
      }
    }
    if (!sb_ok) continue;

    auto level_in = [&](int h) {
      const IndexSet c = game.opponent_event(i, h);
      return intersect(blocks[first_level(blocks, c)], c);
    };
    std::vector<Row> eq;
    for (const auto& block : blocks) {
      Row row(n + 1, 0);
      for (int y : block) row[y] = 1;
      row[n] = 1;
      eq.push_back(row);
    }
    std::vector<Row> weak;
    for (int h : game.own_infosets(i)) {
      if (!contains(game.allowing(i, h), s_star)) continue;
      for (int alt : game.allowing(i, h)) weak.push_back(comparison_row(game, i, s_star, alt, level_in(h)));
    }

    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
      std::vector<Row> strict;
      for (std::size_t e = 0; e < options.size(); ++e) {
        const auto [h, alt] = options[e][pick[e]];
        strict.push_back(comparison_row(game, i, alt, excluded[e], level_in(h)));
      }
      std::vector<Row> closed = weak;
      closed.insert(closed.end(), strict.begin(), strict.end());
      const auto verts = vertices(n, eq, closed);
      if (!verts.empty()) {
        std::vector<Rational> center(n, 0);
        for (const auto& v : verts) {
          for (int k = 0; k < n; ++k) center[k] += v[k];
        }
        for (auto& c : center) c /= static_cast<long>(verts.size());
        bool open = std::all_of(center.begin(), center.end(), [](const Rational& c) { return c > 0; });
        for (const auto& row : strict) open = open && dot(row, center) > 0;
        if (open) return true;
      }
      std::size_t e = 0;
      while (e < pick.size() && ++pick[e] == options[e].size()) pick[e++] = 0;
      if (e == pick.size()) break;
    }
  }
  return false;
}

std::vector<IndexSet> correlated_rationalizable(const Game& game) {
  const int np = game.num_players();
  std::vector<IndexSet> alive(np);
  for (int j = 0; j < np; ++j) alive[j] = full_set(game.num_strategies(j));
  while (true) {
    std::vector<IndexSet> next(np);
    for (int i = 0; i < np; ++i) {
      const int n = game.num_opponent_profiles(i);
      const auto opp = game.opponents(i);
      IndexSet allowed;
      for (int y = 0; y < n; ++y) {
        const auto s = game.decode_opponents(i, y);
        bool ok = true;
        for (std::size_t q = 0; q < opp.size(); ++q) ok = ok && contains(alive[opp[q]], s[q]);
        if (ok) allowed.push_back(y);
      }
      for (int s : alive[i]) {
        std::vector<Row> eq;
        Row total(n + 1, 0);
        for (int y : allowed) total[y] = 1;
        total[n] = 1;
        eq.push_back(total);
        for (int y = 0; y < n; ++y) {
          if (contains(allowed, y)) continue;
          Row zero(n + 1, 0);
          zero[y] = 1;
          eq.push_back(zero);
        }
        std::vector<Row> ineq;
        for (int alt = 0; alt < game.num_strategies(i); ++alt) ineq.push_back(comparison_row(game, i, s, alt, allowed));
        if (!vertices(n, eq, ineq).empty()) next[i].push_back(s);
      }
    }
    if (next == alive) return alive;
    alive = next;
  }
}

}  // namespace rcsbr::oracle
