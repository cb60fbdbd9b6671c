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

#include <gtest/gtest.h>

#include "rcsbr/linear.hpp"

namespace rcsbr {
namespace {

LinearRow row(std::vector<Rational> coef, Relation rel, Rational rhs) { return {std::move(coef), rel, rhs}; }

bool satisfies(const std::vector<Rational>& x, const std::vector<LinearRow>& rows) {
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (const auto& r : rows) {
    Rational lhs = 0;
    for (std::size_t k = 0; k < x.size(); ++k) lhs += r.coef[k] * x[k];
    if (r.rel == Relation::kGreaterEq && lhs < r.rhs) return false;
    if (r.rel == Relation::kLessEq && lhs > r.rhs) return false;
    if (r.rel == Relation::kEqual && lhs != r.rhs) return false;
  }
  return true;
}

TEST(LinearTest, FeasibleSystem) {
  const std::vector<LinearRow> rows = {row({1, 1}, Relation::kEqual, 1), row({1, -2}, Relation::kGreaterEq, 0),
                                       row({0, 1}, Relation::kGreaterEq, Rational(1, 5))};
  const auto x = find_nonnegative_solution(2, rows);
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(satisfies(*x, rows));
}

TEST(LinearTest, InfeasibleSystem) {
  EXPECT_FALSE(find_nonnegative_solution(2, {row({1, 1}, Relation::kEqual, 1), row({1, 1}, Relation::kGreaterEq, 2)}));
  EXPECT_FALSE(find_nonnegative_solution(1, {row({1}, Relation::kLessEq, -1)}));
}

TEST(LinearTest, NegativeRightHandSides) {
  const std::vector<LinearRow> rows = {row({-1, -1}, Relation::kGreaterEq, -3), row({-1, 1}, Relation::kEqual, -1)};
  const auto x = find_nonnegative_solution(2, rows);
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(satisfies(*x, rows));
}

TEST(LinearTest, EmptySystem) {
  const auto x = find_nonnegative_solution(3, {});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(x->size(), 3u);
}

// A classic cycling-prone degenerate system; Bland's rule must terminate.
TEST(LinearTest, DegenerateSystemTerminates) {
  const std::vector<LinearRow> rows = {
      row({Rational(1, 4), -8, -1, 9}, Relation::kLessEq, 0),
      row({Rational(1, 2), -12, Rational(-1, 2), 3}, Relation::kLessEq, 0),
      row({0, 0, 1, 0}, Relation::kLessEq, 1),
      row({Rational(3, 4), -20, Rational(1, 2), -6}, Relation::kGreaterEq, Rational(1, 4)),
  };
  const auto x = find_nonnegative_solution(4, rows);
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(satisfies(*x, rows));
}

TEST(LinearTest, DeterministicAnswer) {
  const std::vector<LinearRow> rows = {row({1, 1, 1}, Relation::kEqual, 1), row({1, -1, 0}, Relation::kGreaterEq, 0)};
  EXPECT_EQ(find_nonnegative_solution(3, rows), find_nonnegative_solution(3, rows));
}

}  // namespace
}  // namespace rcsbr
