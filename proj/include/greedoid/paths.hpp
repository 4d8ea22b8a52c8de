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

#ifndef GREEDOID_PATHS_HPP_
#define GREEDOID_PATHS_HPP_

#include <optional>
#include <vector>

#include "greedoid/greedoid.hpp"
#include "greedoid/rational.hpp"

namespace greedoid {

// Shadow values are small non-negative integers indexed by element.
using ShadowVector = std::vector<int>;

// Per-element rational weights, indexed by declaration order.
using WeightVector = std::vector<Rational>;

inline Rational weight_sum(const WeightVector& c, Mask m) {
  Rational total = 0;
  for (int i : elements_of(m)) total += c[i];
  return total;
}

// Unique base of a subfeasible set in an interval greedoid: the union of its
// feasible subsets. Throws kNotInterval / kNotSubfeasible.
Mask delta(const Greedoid& g, Mask x);

// P_x^A: the minimal feasible subset of the feasible set A containing x, in a
// local poset greedoid. Computed by intersecting the family; for branching
// greedoids a closed-form tree walk is computed as well and the two must
// agree. Throws kNotLocalPoset / kBadParams.
Mask path(const Greedoid& g, Mask a, int x);

// True iff p is a path: feasible, nonempty, and minimal for one of its
// elements.
bool is_path(const Greedoid& g, Mask p);

std::vector<Mask> all_paths(const Greedoid& g);

// Every feasible ordering of the feasible set x, in lexicographic order of
// the element-index sequences.
std::vector<std::vector<int>> feasible_orderings_of(const Greedoid& g, Mask x);

// The unique feasible ordering of a path in a local forest greedoid. Throws
// kNotLocalForest / kNotAPath.
std::vector<int> path_ordering(const Greedoid& g, Mask p);

// sh_A(x) = |A| - r(A-x) for a feasible A. Zero exactly off A.
int shadow(const Greedoid& g, Mask a, int x);
ShadowVector shadow_vector(const Greedoid& g, Mask a);

// Both readings of the path-sum objective on a feasible set of a local poset
// greedoid: sum of c over the element paths versus the shadow/weight dot
// product. Returns their exact equality.
bool check_objfn_identity(const Greedoid& g, Mask a, const WeightVector& c);

// Exhaustive scan of the rank-sum inequality
//   sum_{x in A} r(B-x) <= r(B-A) + (|A|-1) r(B)
// over subfeasible B and nonempty A ⊆ B; returns the first violating pair.
struct RankSumViolation {
  Mask b = 0, a = 0;
};
std::optional<RankSumViolation> find_rank_sum_violation(const Greedoid& g);

}  // namespace greedoid

#endif  // GREEDOID_PATHS_HPP_
