// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREEDOID_RATIONAL_HPP_
#define GREEDOID_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace greedoid {

// Every quantity in the library is an exact rational; there is no floating
// point anywhere, so optimality and duality checks are plain equality tests.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Accepts an optional sign, an integer, and an optional "/denominator" with a
// positive denominator. Returns nothing on any other shape.
std::optional<Rational> parse_rational(const std::string& text);

// Integers print bare ("3", "-2"), everything else as "p/q" in lowest terms.
std::string format_rational(const Rational& r);

}  // namespace greedoid

#endif  // GREEDOID_RATIONAL_HPP_
