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

#ifndef GREEDOID_GAME_HPP_
#define GREEDOID_GAME_HPP_

#include <vector>

#include "greedoid/polyhedra.hpp"

namespace greedoid {

// The base game on a local forest greedoid: the attacker picks an element s,
// the defender a base B, and the defender pays d(s)·sh_B(s) − c(s).
struct GameInstance {
  Greedoid greedoid;
  WeightVector damage;  // d, strictly positive
  WeightVector cost;    // c, arbitrary sign

  // Throws kNotLocalForest / kBadParams (d must be positive, the ground set
  // nonempty, and the rank positive so the defender has a real choice).
  static GameInstance create(Greedoid g, WeightVector d, WeightVector c);
};

using Matrix = std::vector<std::vector<Rational>>;

// Rows are elements in declaration order, columns the bases in ascending
// mask order; entry (s, B) = d(s)·sh_B(s) − c(s).
Matrix payoff_matrix(const GameInstance& inst);

struct GameSolution {
  Rational value;
  Mask argmax_set = 0;                 // a maximizing U, lowest mask on ties
  std::vector<Rational> attacker_mix;  // over elements; only from the oracle
  std::vector<Rational> defender_mix;  // over bases; only from the oracle
};

// The closed-form value: max over nonempty U of
// (r(S) - r(S-U) - q(U)) / p(U) with p = 1/d and q = c/d, by brute force
// over all subsets.
GameSolution game_value_formula(const GameInstance& inst);

struct ZeroSumSolution {
  Rational value;
  std::vector<Rational> row_mix;  // maximizer
  std::vector<Rational> col_mix;  // minimizer
};

// Exact value and optimal mixed strategies of a finite zero-sum matrix game
// (row player maximizes), via a dense rational simplex with Bland's rule.
// The returned strategies are verified: the row mix guarantees at least the
// value against every column and the column mix at most the value against
// every row.
ZeroSumSolution solve_zero_sum(const Matrix& payoff);

// min over disconnecting edge sets U of p(U) / (comp(G-U) - 1), for a
// connected graph and positive edge weights. Throws kDisconnected /
// kBadParams.
Rational strength(const MixedGraph& graph, const WeightVector& edge_weights);

// The shadow-polytope point induced by a defender mix; the defender's
// expected loss at element s is d(s)·x(s) − c(s).
RationalPoint induced_shadow_point(const GameInstance& inst,
                                   const std::vector<Rational>& defender_mix);

}  // namespace greedoid

#endif  // GREEDOID_GAME_HPP_
