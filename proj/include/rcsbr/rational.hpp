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

#ifndef RCSBR_RATIONAL_HPP_
#define RCSBR_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace rcsbr {

// Every payoff and probability in the library is an exact rational.
using Rational = mpq_class;

// Accepts "p/q", "p" and "-p/q". Throws Error(kParseError) otherwise.
Rational parse_rational(std::string_view text);

// Shortest form: "2", "-1/3".
std::string to_string(const Rational& q);

// Always "p/q"; used in files.
std::string to_fraction(const Rational& q);

Rational sum(const std::vector<Rational>& values);

}  // namespace rcsbr

#endif  // RCSBR_RATIONAL_HPP_
