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

#include "rcsbr/best_reply.hpp"

#include <functional>
#include <map>
#include <utility>

#include "rcsbr/linear.hpp"

namespace rcsbr {

Cps cps_skeleton(const Game& game, int i) {
  Cps cps;
  cps.domain_size = game.num_opponent_profiles(i);
  for (const auto& ev : game.conditioning_family(i)) {
    cps.family.push_back(ev.event);
    cps.event_ids.push_back(ev.id);
    cps.conditionals.emplace_back(cps.domain_size, 0);
  }
  return cps;
}

Rational expected_payoff(const Game& game, int i, int s_i, const Measure& m) {
  Rational total = 0;
  for (std::size_t y = 0; y < m.size(); ++y) {
    if (m[y] != 0) total += game.payoff_against(i, s_i, static_cast<int>(y)) * m[y];
  }
  return total;
}

Rational expected_payoff(const Game& game, int i, int s_i, const IndexSet& given, const Measure& m) {
  if (mass(m, given) != 1) {
    throw Error(ErrorCode::kSelfMassNotOne, "measure is not concentrated on the conditioning event");
  }
  return expected_payoff(game, i, s_i, m);
}

IndexSet sequential_best_replies(const Game& game, int i, const Cps& cps) {
  const auto& fam = game.conditioning_family(i);
  std::vector<int> slot(fam.size(), -1);
  for (std::size_t k = 0; k < fam.size(); ++k) {
    slot[k] = cps.find_event(fam[k].event);
    if (slot[k] < 0) {
      throw Error(ErrorCode::kUnknownConditioningEvent,
                  "CPS lacks the conditioning event '" + fam[k].id + "'");
    }
  }
  const int n = game.num_strategies(i);
  std::vector<bool> ok(n, true);
  for (int h : game.own_infosets(i)) {
    const Measure& m = cps.conditionals[slot[game.event_of(i, h)]];
    const IndexSet& allowed = game.allowing(i, h);
    std::vector<Rational> value;
    Rational best;
    for (std::size_t k = 0; k < allowed.size(); ++k) {
      value.push_back(expected_payoff(game, i, allowed[k], m));
      if (k == 0 || value.back() > best) best = value.back();
    }
    for (std::size_t k = 0; k < allowed.size(); ++k) {
      if (value[k] < best) ok[allowed[k]] = false;
    }
  }
  IndexSet out;
  for (int s = 0; s < n; ++s) {
    if (ok[s]) out.push_back(s);
  }
  return out;
}

std::vector<std::vector<int>> ordered_partitions(int n) {
  if (n == 0) return {{}};  // the empty partition
  std::vector<std::vector<int>> out;
  std::vector<int> f(n);
  for (int k = 1; k <= n; ++k) {
    std::vector<int> used(k, 0);
    int distinct = 0;
    std::function<void(int)> rec = [&](int pos) {
      if (pos == n) {
        if (distinct == k) out.push_back(f);
        return;
      }
      for (int b = 0; b < k; ++b) {
        const int missing = k - distinct - (used[b] == 0 ? 1 : 0);
        if (missing > n - pos - 1) continue;
        f[pos] = b;
        if (used[b]++ == 0) ++distinct;
        rec(pos + 1);
        if (--used[b] == 0) --distinct;
      }
    };
    rec(0);
  }
  return out;
}

namespace {

// A sequential-rationality comparison: on conditioning event `event`,
// strategy `better` against strategy `worse`.
struct Comparison {
  int event;
  int better;
  int worse;
};

class JustificationSearch {
 public:
  JustificationSearch(const Game& game, int i, int s_star, const ProductSet& f,
                      const std::optional<IndexSet>& fullness)
      : game_(game), i_(i), n_(game.num_opponent_profiles(i)) {
    f_opp_ = f.opponents(game, i);
    for (const auto& ev : game.conditioning_family(i)) events_.push_back(ev.event);

    // s_star must be weakly best at every own set it allows.
    std::map<std::pair<int, int>, bool> seen;
    for (int h : game.own_infosets(i)) {
      const IndexSet& allowed = game.allowing(i, h);
      if (!contains(allowed, s_star)) continue;
      const int k = game.event_of(i, h);
      for (int s : allowed) {
        if (s != s_star && seen.emplace(std::make_pair(k, s), true).second) {
          weak_.push_back({k, s_star, s});
        }
      }
    }
    if (fullness) {
      if (!contains(*fullness, s_star)) {
        impossible_ = true;
        return;
      }
      // Each excluded strategy needs a strictly better alternative somewhere
      // it is evaluated.
      for (int s = 0; s < game.num_strategies(i); ++s) {
        if (contains(*fullness, s)) continue;
        std::vector<Comparison> options;
        std::map<std::pair<int, int>, bool> dup;
        for (int h : game.own_infosets(i)) {
          const IndexSet& allowed = game.allowing(i, h);
          if (!contains(allowed, s)) continue;
          const int k = game.event_of(i, h);
          for (int alt : allowed) {
            if (alt != s && dup.emplace(std::make_pair(k, alt), true).second) options.push_back({k, alt, s});
          }
        }
        if (options.empty()) impossible_ = true;
        witnesses_.push_back(std::move(options));
      }
    }
  }

  // Runs the search; with `all`, collects one certificate per partition.
  std::vector<Cps> run(bool all) {
    std::vector<Cps> found;
    if (impossible_) return found;
    for (const auto& part : ordered_partitions(n_)) {
      auto cps = solve_partition(part);
      if (!cps) continue;
      found.push_back(std::move(*cps));
      if (!all) break;
    }
    return found;
  }

 private:
  std::optional<Cps> solve_partition(const std::vector<int>& part) {
    // The level that first charges each event, and the event's atoms there.
    restricted_.assign(events_.size(), {});
    for (std::size_t k = 0; k < events_.size(); ++k) {
      int first = n_;
      for (int y : events_[k]) first = std::min(first, part[y]);
      for (int y : events_[k]) {
        if (part[y] == first) restricted_[k].push_back(y);
      }
    }
    if (!f_opp_.empty()) {
      for (std::size_t k = 0; k < events_.size(); ++k) {
        if (intersects(events_[k], f_opp_) && !is_subset(restricted_[k], f_opp_)) return std::nullopt;
      }
    }
    // Homogeneous system in the level weights w > 0; scaling turns strict
    // inequalities into ">= 1" and w > 0 into w >= 1. Substitute w = 1 + v.
    std::vector<LinearRow> rows;
    for (const Comparison& c : weak_) rows.push_back(row(c, 0));
    std::optional<std::vector<Rational>> solution;
    if (!dfs(0, rows, solution)) return std::nullopt;

    const int levels = *std::max_element(part.begin(), part.end()) + 1;
    Lps lps(levels, Measure(n_, 0));
    std::vector<Rational> level_mass(levels, 0);
    for (int y = 0; y < n_; ++y) {
      const Rational w = 1 + (*solution)[y];
      lps[part[y]][y] = w;
      level_mass[part[y]] += w;
    }
    for (int l = 0; l < levels; ++l) {
      for (auto& v : lps[l]) v /= level_mass[l];
    }
    Cps cps = lps_to_cps(lps, events_);
    for (const auto& ev : game_.conditioning_family(i_)) cps.event_ids.push_back(ev.id);
    return cps;
  }

  LinearRow row(const Comparison& c, int rhs) const {
    LinearRow r;
    r.coef.assign(n_, 0);
    r.rel = Relation::kGreaterEq;
    Rational total = 0;
    for (int y : restricted_[c.event]) {
      r.coef[y] = game_.payoff_against(i_, c.better, y) - game_.payoff_against(i_, c.worse, y);
      total += r.coef[y];
    }
    r.rhs = Rational(rhs) - total;
    return r;
  }

  bool dfs(std::size_t idx, std::vector<LinearRow>& rows, std::optional<std::vector<Rational>>& solution) {
    if (idx == witnesses_.size()) {
      solution = find_nonnegative_solution(n_, rows);
      return solution.has_value();
    }
    for (const Comparison& c : witnesses_[idx]) {
      bool positive = false;
      for (int y : restricted_[c.event]) {
        positive = positive || game_.payoff_against(i_, c.better, y) > game_.payoff_against(i_, c.worse, y);
      }
      if (!positive) continue;
      rows.push_back(row(c, 1));
      const bool feasible = find_nonnegative_solution(n_, rows).has_value();
      if (feasible && dfs(idx + 1, rows, solution)) {
        rows.pop_back();
        return true;
      }
      rows.pop_back();
    }
    return false;
  }

  const Game& game_;
  int i_;
  int n_;
  IndexSet f_opp_;
  std::vector<IndexSet> events_;
  std::vector<Comparison> weak_;
  std::vector<std::vector<Comparison>> witnesses_;
  std::vector<IndexSet> restricted_;
  bool impossible_ = false;
};

}  // namespace

std::optional<Cps> find_justifying_cps(const Game& game, int i, int s_star, const ProductSet& f,
                                       const std::optional<IndexSet>& fullness) {
  auto found = JustificationSearch(game, i, s_star, f, fullness).run(false);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::vector<Cps> find_all_justifying_cps(const Game& game, int i, int s_star, const ProductSet& f,
                                         const std::optional<IndexSet>& fullness) {
  return JustificationSearch(game, i, s_star, f, fullness).run(true);
}

}  // namespace rcsbr
