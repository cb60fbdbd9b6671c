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

#include "rcsbr/cps.hpp"

namespace rcsbr {

Measure dirac(int domain_size, int atom) {
  Measure m(domain_size, 0);
  m.at(atom) = 1;
  return m;
}

Measure uniform_on(int domain_size, const IndexSet& supp) {
  Measure m(domain_size, 0);
  for (int y : supp) m.at(y) = Rational(1, static_cast<long>(supp.size()));
  return m;
}

IndexSet support(const Measure& m) {
  IndexSet out;
  for (std::size_t y = 0; y < m.size(); ++y) {
    if (m[y] != 0) out.push_back(static_cast<int>(y));
  }
  return out;
}

Rational mass(const Measure& m, const IndexSet& event) {
  Rational total = 0;
  for (int y : event) total += m.at(y);
  return total;
}

int Cps::find_event(const IndexSet& event) const {
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (family[k] == event) return static_cast<int>(k);
  }
  return -1;
}

const Measure& Cps::given(const IndexSet& event) const {
  const int k = find_event(event);
  if (k < 0) throw Error(ErrorCode::kUnknownConditioningEvent, "event is not in the conditioning family");
  return conditionals[k];
}

namespace {

std::string event_name(const Cps& cps, int k) {
  if (k >= 0 && k < static_cast<int>(cps.event_ids.size())) return cps.event_ids[k];
  return "#" + std::to_string(k);
}

}  // namespace

std::optional<CpsViolation> validate_cps(const Cps& cps) {
  const int n = cps.domain_size;
  if (cps.family.empty() || cps.family[0] != full_set(n)) {
    return CpsViolation{ErrorCode::kNotNormalized, 0, -1, -1,
                        "the first conditioning event must be the whole domain"};
  }
  if (cps.conditionals.size() != cps.family.size()) {
    return CpsViolation{ErrorCode::kNotNormalized, -1, -1, -1,
                        "one conditional per conditioning event is required"};
  }
  for (std::size_t k = 0; k < cps.family.size(); ++k) {
    const Measure& m = cps.conditionals[k];
    bool ok = static_cast<int>(m.size()) == n;
    for (std::size_t y = 0; ok && y < m.size(); ++y) ok = m[y] >= 0;
    if (!ok || sum(m) != 1) {
      return CpsViolation{ErrorCode::kNotNormalized, static_cast<int>(k), -1, -1,
                          "conditional on " + event_name(cps, static_cast<int>(k)) +
                              " is not a probability measure"};
    }
    if (mass(m, cps.family[k]) != 1) {
      return CpsViolation{ErrorCode::kSelfMassNotOne, static_cast<int>(k), -1, -1,
                          "conditional on " + event_name(cps, static_cast<int>(k)) +
                              " charges atoms outside the event"};
    }
  }
  for (std::size_t c = 0; c < cps.family.size(); ++c) {
    for (std::size_t b = 0; b < cps.family.size(); ++b) {
      if (b == c || !is_subset(cps.family[b], cps.family[c])) continue;
      const Rational nu_bc = mass(cps.conditionals[c], cps.family[b]);
      for (int y : cps.family[b]) {
        if (cps.conditionals[c][y] != cps.conditionals[b][y] * nu_bc) {
          return CpsViolation{ErrorCode::kChainRuleViolation, static_cast<int>(c), static_cast<int>(b), y,
                              "chain rule fails for atom " + std::to_string(y) + " inside " +
                                  event_name(cps, static_cast<int>(b)) + " inside " +
                                  event_name(cps, static_cast<int>(c))};
        }
      }
    }
  }
  return std::nullopt;
}

void require_valid_cps(const Cps& cps) {
  if (auto v = validate_cps(cps)) throw Error(v->code, v->message);
}

Cps lps_to_cps(const Lps& lps, const std::vector<IndexSet>& family) {
  Cps cps;
  cps.domain_size = lps.empty() ? 0 : static_cast<int>(lps[0].size());
  cps.family = family;
  for (const IndexSet& c : family) {
    Measure cond(cps.domain_size, 0);
    for (const Measure& level : lps) {
      const Rational m = mass(level, c);
      if (m == 0) continue;
      for (int y : c) cond[y] = level[y] / m;
      break;
    }
    cps.conditionals.push_back(std::move(cond));
  }
  return cps;
}

bool conditionally_believes(const Cps& cps, const IndexSet& given, const IndexSet& event) {
  return mass(cps.given(given), event) == 1;
}

bool strongly_believes(const Cps& cps, const IndexSet& event) {
  for (std::size_t k = 0; k < cps.family.size(); ++k) {
    if (intersects(cps.family[k], event) && mass(cps.conditionals[k], event) != 1) return false;
  }
  return true;
}

}  // namespace rcsbr
