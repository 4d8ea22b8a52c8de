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

#ifndef GREEDOID_SUBSET_HPP_
#define GREEDOID_SUBSET_HPP_

#include <bit>
#include <cstdint>
#include <vector>

namespace greedoid {

// A subset of the ground set, bit i = element i (declaration order). Ground
// sets are capped at kMaxGroundSetSize, so a mask fits in 32 bits and a table
// indexed by mask fits in memory; everything downstream is exact finite
// enumeration over these tables.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSetSize = 20;

inline int set_size(Mask m) { return std::popcount(m); }
inline bool contains(Mask m, int element) { return (m >> element) & 1u; }
inline Mask single(int element) { return Mask{1} << element; }
inline Mask with(Mask m, int element) { return m | single(element); }
inline Mask without(Mask m, int element) { return m & ~single(element); }
inline Mask full_mask(int n) { return n == 0 ? 0u : (single(n - 1) << 1) - 1u; }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0u; }
inline int lowest_element(Mask m) { return std::countr_zero(m); }

std::vector<int> elements_of(Mask m);  // ascending

// Lexicographic order on ascending element lists, e.g. {0,3} before {1,2}.
// Used for deterministic tie-breaking among equal-value optima.
bool lex_less(Mask a, Mask b);

// Visits every submask of m, including 0 and m itself, in descending order.
template <typename Fn>
void for_each_submask(Mask m, Fn&& fn) {
  Mask s = m;
  for (;;) {
    fn(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

}  // namespace greedoid

#endif  // GREEDOID_SUBSET_HPP_
