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

#include "rcsbr/linear.hpp"

#include <cassert>

namespace rcsbr {

std::optional<std::vector<Rational>> find_nonnegative_solution(
    int num_vars, const std::vector<LinearRow>& rows) {
  const int m = static_cast<int>(rows.size());
  if (m == 0) return std::vector<Rational>(num_vars, 0);

  // Columns: originals, one slack per inequality, one artificial per row
  // that lacks an obvious basic column.
  struct Prepared {
    std::vector<Rational> coef;
    Relation rel;
    Rational rhs;
  };
  std::vector<Prepared> prep;
  prep.reserve(m);
  int num_slack = 0;
  for (const LinearRow& r : rows) {
    Prepared p{r.coef, r.rel, r.rhs};
    p.coef.resize(num_vars);
    if (p.rhs < 0) {
      for (auto& c : p.coef) c = -c;
      p.rhs = -p.rhs;
      if (p.rel == Relation::kGreaterEq) {
        p.rel = Relation::kLessEq;
      } else if (p.rel == Relation::kLessEq) {
        p.rel = Relation::kGreaterEq;
      }
    }
    if (p.rel != Relation::kEqual) ++num_slack;
    prep.push_back(std::move(p));
  }
  int num_art = 0;
  for (const auto& p : prep) {
    if (p.rel != Relation::kLessEq) ++num_art;
  }
  const int cols = num_vars + num_slack + num_art;
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(cols + 1, 0));
  std::vector<int> basis(m);
  int slack = num_vars;
  int art = num_vars + num_slack;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < num_vars; ++c) a[r][c] = prep[r].coef[c];
    a[r][cols] = prep[r].rhs;
    switch (prep[r].rel) {
      case Relation::kLessEq:
        a[r][slack] = 1;
        basis[r] = slack++;
        break;
      case Relation::kGreaterEq:
        a[r][slack++] = -1;
        a[r][art] = 1;
        basis[r] = art++;
        break;
      case Relation::kEqual:
        a[r][art] = 1;
        basis[r] = art++;
        break;
    }
  }
  const int first_art = num_vars + num_slack;

  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> cost(cols + 1, 0);
  for (int r = 0; r < m; ++r) {
    if (basis[r] < first_art) continue;
    for (int c = 0; c <= cols; ++c) {
      if (c < first_art) cost[c] -= a[r][c];
    }
    cost[cols] -= a[r][cols];
  }

  while (true) {
    int enter = -1;
    for (int c = 0; c < cols; ++c) {
      if (cost[c] < 0) {
        enter = c;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int r = 0; r < m; ++r) {
      if (a[r][enter] <= 0) continue;
      Rational ratio = a[r][cols] / a[r][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has
    // a positive entry.
    assert(leave >= 0);
    const Rational piv = a[leave][enter];
    for (int c = 0; c <= cols; ++c) a[leave][c] /= piv;
    for (int r = 0; r < m; ++r) {
      if (r == leave || a[r][enter] == 0) continue;
      const Rational f = a[r][enter];
      for (int c = 0; c <= cols; ++c) a[r][c] -= f * a[leave][c];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (int c = 0; c <= cols; ++c) cost[c] -= f * a[leave][c];
    }
    basis[leave] = enter;
  }

  // cost[cols] holds minus the objective value.
  if (cost[cols] != 0) return std::nullopt;
  std::vector<Rational> x(num_vars, 0);
  for (int r = 0; r < m; ++r) {
    if (basis[r] < num_vars) x[basis[r]] = a[r][cols];
  }
  return x;
}

}  // namespace rcsbr
