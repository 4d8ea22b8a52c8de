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

#ifndef GREEDOID_GREEDY_HPP_
#define GREEDOID_GREEDY_HPP_

#include <map>
#include <optional>
#include <vector>

#include "greedoid/paths.hpp"

namespace greedoid {

enum class Direction { kMax, kMin };

// Objective families over feasible sets (or feasible orderings for the
// ordered-table kind). Minimization is routed through the negated value, so
// every optimality condition below is written once in max convention.
struct Objective {
  enum class Kind {
    kSetTable,        // explicit table on every feasible set
    kLinear,          // w(A) = c(A)
    kPathSum,         // w(A) = sum of c over the element paths (local poset)
    kBottleneck,      // w(A) = sum over x of max c on the x-path
    kMonotonePathFn,  // w(A) = sum over x of f(P_x), f a table over paths
    kOrderedTable,    // explicit table on every feasible ordering
  };

  Kind kind = Kind::kLinear;
  Direction direction = Direction::kMax;
  std::map<Mask, Rational> set_table;  // kSetTable; f-table for kMonotonePathFn
  WeightVector weights;                // kLinear, kPathSum, kBottleneck
  std::map<std::vector<int>, Rational> ordered_table;  // kOrderedTable

  bool order_dependent() const { return kind == Kind::kOrderedTable; }

  static Objective from_set_table(std::map<Mask, Rational> table, Direction d);
  static Objective linear(WeightVector c, Direction d);
  static Objective path_sum(WeightVector c, Direction d);
  static Objective bottleneck(WeightVector c, Direction d);
  static Objective monotone_path_fn(std::map<Mask, Rational> f, Direction d);
  static Objective from_ordered_table(
      std::map<std::vector<int>, Rational> table, Direction d);
};

// Value of an order-independent objective on a feasible set; throws
// kObjectiveUndefined for ordered tables or missing table entries.
Rational evaluate_set(const Greedoid& g, const Objective& obj, Mask a);

// Value on a feasible ordering; order-independent kinds ignore the order.
Rational evaluate_ordered(const Greedoid& g, const Objective& obj,
                          const std::vector<int>& seq);

// Every feasible ordering of every feasible set, in lexicographic order of
// the element-index sequences (the empty ordering included).
std::vector<std::vector<int>> all_feasible_orderings(const Greedoid& g);

// Materializes any objective as an ordered table over all feasible orderings,
// the shape the Korte–Lovász condition checker consumes.
Objective lift_to_ordered(const Greedoid& g, const Objective& obj);

struct GreedyStep {
  int element = 0;
  Mask continuation_set = 0;  // Γ(A) at the moment of the pick
  Rational value_after;       // objective value of A + element
};

struct GreedyTrace {
  std::vector<GreedyStep> picks;
  Mask base = 0;
  Rational value;  // objective value of the final base / ordering

  std::vector<int> pick_sequence() const {
    std::vector<int> seq;
    seq.reserve(picks.size());
    for (const GreedyStep& s : picks) seq.push_back(s.element);
    return seq;
  }
};

// One run with deterministic lowest-index tie-breaking.
GreedyTrace greedy(const Greedoid& g, const Objective& obj);

// Every run obtainable by some legal tie-breaking, in lexicographic order of
// the pick sequences.
std::vector<GreedyTrace> greedy_all_runs(const Greedoid& g,
                                         const Objective& obj);

// The ordered-objective variant that maintains a feasible ordering; requires
// an ordered-table objective.
GreedyTrace ordered_greedy(const Greedoid& g, const Objective& obj);

struct Optimum {
  Mask base = 0;
  Rational value;
  std::vector<int> ordering;  // populated for ordered objectives only
};

// Enumerates all bases (all feasible orderings of bases for ordered
// objectives); ties broken lowest-index-lexicographically.
Optimum brute_force_optimum(const Greedoid& g, const Objective& obj);

// --- Optimality condition checkers -----------------------------------------
// All checkers compare scores (value, negated for min objectives), quantify
// exhaustively over the materialized family, and report the first violation
// in enumeration order.

struct KlWitness {
  std::vector<int> first;   // the string whose value must dominate
  std::vector<int> second;  // the competing string
};

struct KlResult {
  bool condition1 = false;
  bool condition2 = false;
  std::optional<KlWitness> witness1;
  std::optional<KlWitness> witness2;
  bool ok() const { return condition1 && condition2; }
};

// The two string conditions sufficient for greedy optimality of ordered
// objectives; requires an ordered-table objective.
KlResult check_kl_conditions(const Greedoid& g, const Objective& obj);

struct Cond3Witness {
  Mask a = 0, b = 0;
  int x = 0, z = 0;
};

struct Cond3Result {
  bool ok = false;
  std::optional<Cond3Witness> witness;
};

// The historic set-function reformulation of condition (1); it does NOT imply
// greedy optimality and is implemented to demonstrate exactly that.
Cond3Result check_condition_3(const Greedoid& g, const Objective& obj);

struct Cond6Witness {
  Mask a = 0, b = 0;
  int x = 0;
};

struct Cond6Result {
  bool ok = false;
  std::optional<Cond6Witness> witness;
};

// Base-exchange condition: whenever x is a greedy choice at A ⊆ B (B a base,
// x outside B), some y in B−A has B−y+x a base with no worse value. Implies
// greedy optimality on every greedoid.
Cond6Result check_condition_6(const Greedoid& g, const Objective& obj);

struct Cond7Witness {
  Mask a = 0, b = 0;
  int x = 0, z = 0;
};

struct Cond7Result {
  bool ok = false;
  std::optional<Cond7Witness> witness;
};

// Interval-greedoid condition over base pairs B+x, B+z with
// Δ(B) ∪ {x,z} infeasible; implies condition (6) and hence optimality.
// Throws kNotInterval.
Cond7Result check_condition_7(const Greedoid& g, const Objective& obj);

struct MonotoneWitness {
  Mask a = 0, b = 0, c = 0;
  bool condition_i = true;  // which of the two constraints failed
};

struct MonotoneResult {
  bool ok = false;
  std::optional<MonotoneWitness> witness;
};

// Monotonicity constraints on a path function f: f(A) <= f(B) for nested
// paths, and f(A∪C) <= f(B∪C) whenever all four sets are paths and
// f(A) <= f(B). Throws kNotLocalForest; f must cover every path.
MonotoneResult check_monotone_f(const Greedoid& g,
                                const std::map<Mask, Rational>& f);

// f(P) = c(P) and f(P) = max{c(x) : x in P} as explicit path tables.
std::map<Mask, Rational> path_cost_table(const Greedoid& g,
                                         const WeightVector& c);
std::map<Mask, Rational> path_max_table(const Greedoid& g,
                                        const WeightVector& c);

struct ViolationMinorResult {
  Greedoid minor;
  Objective objective;  // transported onto the minor as a set table
};

// For a witness (A, B, x) violating condition (6): delete S−B−x, contract A.
// Some legal greedy run on the result is suboptimal. Throws kNotAViolation
// when the witness does not actually violate the condition.
ViolationMinorResult violation_minor(const Greedoid& g, const Objective& obj,
                                     const Cond6Witness& witness);

struct Lemma4Violation {
  Mask b = 0;
  int x = 0, z = 0, e = 0;
};

// Path-intersection property behind the interval condition: for B+x, B+z
// feasible with Δ(B) ∪ {x,z} infeasible, the part of the e-path outside
// Δ(B) does not depend on the added element. Throws kNotLocalPoset.
std::optional<Lemma4Violation> find_lemma4_violation(const Greedoid& g);

}  // namespace greedoid

#endif  // GREEDOID_GREEDY_HPP_
