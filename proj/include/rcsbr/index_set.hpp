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

#ifndef RCSBR_INDEX_SET_HPP_
#define RCSBR_INDEX_SET_HPP_

#include <algorithm>
#include <numeric>
#include <vector>

namespace rcsbr {

// A finite set of small non-negative indices, kept sorted and unique.
using IndexSet = std::vector<int>;

inline IndexSet make_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline IndexSet full_set(int n) {
  IndexSet s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

inline bool contains(const IndexSet& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline IndexSet intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IndexSet unite(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IndexSet minus(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool intersects(const IndexSet& a, const IndexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

// All subsets of {0..n-1}, in increasing bitmask order.
inline std::vector<IndexSet> all_subsets(int n) {
  std::vector<IndexSet> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    IndexSet s;
    for (int k = 0; k < n; ++k) {
      if (mask & (1u << k)) s.push_back(k);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace rcsbr

#endif  // RCSBR_INDEX_SET_HPP_
