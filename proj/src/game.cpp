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

#include "greedoid/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace greedoid {

namespace {

// Primal simplex with Bland's rule on  max 1ᵀw  s.t.  A'w <= 1, w >= 0,
// where A' is the payoff matrix shifted to strictly positive entries. The
// all-slack basis is feasible, positivity makes the program bounded, and
// Bland's rule rules out cycling, so termination is guaranteed. At the
// optimum the normalized w is the column player's mix, the slack reduced
// costs give the row player's mix, and 1 / (sum of w) is the shifted value.
struct GameTableau {
  int rows = 0;  // attacker pure strategies
  int cols = 0;  // defender pure strategies
  std::vector<std::vector<Rational>> t;  // rows x (cols + rows + 1)
  std::vector<Rational> obj;             // reduced-cost row, same width
  std::vector<int> basis;

  explicit GameTableau(const Matrix& shifted)
      : rows(static_cast<int>(shifted.size())),
        cols(static_cast<int>(shifted[0].size())) {
    const int width = cols + rows + 1;
    t.assign(rows, std::vector<Rational>(width, 0));
    obj.assign(width, 0);
    basis.resize(rows);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) t[i][j] = shifted[i][j];
      t[i][cols + i] = 1;
      t[i][width - 1] = 1;
      basis[i] = cols + i;
    }
    for (int j = 0; j < cols; ++j) obj[j] = -1;  // z_j - c_j
  }

  void pivot(int row, int col) {
    const Rational inv = 1 / t[row][col];
    for (Rational& v : t[row]) v *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || t[i][col] == 0) continue;
      const Rational factor = t[i][col];
      for (std::size_t j = 0; j < t[i].size(); ++j) {
        t[i][j] -= factor * t[row][j];
      }
    }
    if (obj[col] != 0) {
      const Rational factor = obj[col];
      for (std::size_t j = 0; j < obj.size(); ++j) {
        obj[j] -= factor * t[row][j];
      }
    }
    basis[row] = col;
  }

  void solve() {
    const int width = cols + rows + 1;
    for (;;) {
      int entering = -1;
      for (int j = 0; j < width - 1; ++j) {
        if (obj[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return;
      int leaving = -1;
      Rational best_ratio;
      for (int i = 0; i < rows; ++i) {
        if (t[i][entering] <= 0) continue;
        const Rational ratio = t[i][width - 1] / t[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) {
        throw std::logic_error("zero-sum tableau is unbounded");
      }
      pivot(leaving, entering);
    }
  }
};

}  // namespace

GameInstance GameInstance::create(Greedoid g, WeightVector d, WeightVector c) {
  if (!g.is_local_forest()) {
    fail(Errc::kNotLocalForest, "the base game needs a local forest greedoid");
  }
  if (g.n() == 0) fail(Errc::kBadParams, "the base game needs elements");
  if (g.rank() == 0) {
    fail(Errc::kBadParams, "the base game needs a greedoid of positive rank");
  }
  if (static_cast<int>(d.size()) != g.n() ||
      static_cast<int>(c.size()) != g.n()) {
    fail(Errc::kBadParams, "weight vectors must cover the ground set");
  }
  for (const Rational& v : d) {
    if (v <= 0) fail(Errc::kBadParams, "damage weights must be positive");
  }
  return GameInstance{std::move(g), std::move(d), std::move(c)};
}

Matrix payoff_matrix(const GameInstance& inst) {
  const Greedoid& g = inst.greedoid;
  Matrix matrix(g.n(), std::vector<Rational>(g.bases().size()));
  for (std::size_t b = 0; b < g.bases().size(); ++b) {
    const ShadowVector sh = shadow_vector(g, g.bases()[b]);
    for (int s = 0; s < g.n(); ++s) {
      matrix[s][b] = inst.damage[s] * sh[s] - inst.cost[s];
    }
  }
  return matrix;
}

GameSolution game_value_formula(const GameInstance& inst) {
  const Greedoid& g = inst.greedoid;
  const int r = g.rank();
  GameSolution solution;
  bool have = false;
  const Mask all = g.universe();
  for (Mask u = 1;; ++u) {
    Rational p = 0, q = 0;
    for (int s : elements_of(u)) {
      p += 1 / inst.damage[s];
      q += inst.cost[s] / inst.damage[s];
    }
    const Rational value = (r - g.rank(all & ~u) - q) / p;
    if (!have || value > solution.value) {
      solution.value = value;
      solution.argmax_set = u;
      have = true;
    }
    if (u == all) break;
  }
  return solution;
}

ZeroSumSolution solve_zero_sum(const Matrix& payoff) {
  if (payoff.empty() || payoff[0].empty()) {
    fail(Errc::kBadParams, "payoff matrix must be nonempty");
  }
  const int rows = static_cast<int>(payoff.size());
  const int cols = static_cast<int>(payoff[0].size());

  // Shift so every entry is at least one; the value shifts by the same K.
  Rational min_entry = payoff[0][0];
  for (const auto& row : payoff) {
    if (static_cast<int>(row.size()) != cols) {
      fail(Errc::kBadParams, "payoff matrix must be rectangular");
    }
    for (const Rational& v : row) min_entry = std::min(min_entry, v);
  }
  const Rational shift = 1 - min_entry;
  Matrix shifted = payoff;
  for (auto& row : shifted) {
    for (Rational& v : row) v += shift;
  }

  GameTableau tableau(shifted);
  tableau.solve();

  std::vector<Rational> w(cols, 0);
  for (int i = 0; i < rows; ++i) {
    if (tableau.basis[i] < cols) {
      w[tableau.basis[i]] = tableau.t[i][cols + rows];
    }
  }
  Rational w_total = 0;
  for (const Rational& v : w) w_total += v;
  if (w_total <= 0) throw std::logic_error("degenerate zero-sum optimum");
  const Rational shifted_value = 1 / w_total;

  ZeroSumSolution solution;
  solution.value = shifted_value - shift;
  solution.col_mix.resize(cols);
  for (int j = 0; j < cols; ++j) solution.col_mix[j] = w[j] * shifted_value;
  solution.row_mix.resize(rows);
  for (int i = 0; i < rows; ++i) {
    solution.row_mix[i] = tableau.obj[cols + i] * shifted_value;
  }

  // The strategies must certify the value exactly on the original matrix.
  Rational row_total = 0, col_total = 0;
  for (const Rational& v : solution.row_mix) {
    if (v < 0) throw std::logic_error("negative probability in row mix");
    row_total += v;
  }
  for (const Rational& v : solution.col_mix) {
    if (v < 0) throw std::logic_error("negative probability in column mix");
    col_total += v;
  }
  if (row_total != 1 || col_total != 1) {
    throw std::logic_error("mixed strategies do not sum to one");
  }
  for (int j = 0; j < cols; ++j) {
    Rational expected = 0;
    for (int i = 0; i < rows; ++i) expected += solution.row_mix[i] * payoff[i][j];
    if (expected < solution.value) {
      throw std::logic_error("row mix fails to guarantee the value");
    }
  }
  for (int i = 0; i < rows; ++i) {
    Rational expected = 0;
    for (int j = 0; j < cols; ++j) expected += solution.col_mix[j] * payoff[i][j];
    if (expected > solution.value) {
      throw std::logic_error("column mix fails to cap the value");
    }
  }
  return solution;
}

Rational strength(const MixedGraph& graph, const WeightVector& edge_weights) {
  graph.validate(/*require_root=*/false);
  if (edge_weights.size() != graph.edges.size()) {
    fail(Errc::kBadParams, "edge weights must cover every edge");
  }
  for (const Rational& v : edge_weights) {
    if (v <= 0) fail(Errc::kBadParams, "edge weights must be positive");
  }
  if (!graph.connected()) {
    fail(Errc::kDisconnected, "strength needs a connected graph");
  }
  const Mask all = full_mask(static_cast<int>(graph.edges.size()));
  std::optional<Rational> best;
  for (Mask u = 1;; ++u) {
    const int components = graph.component_count(all & ~u);
    if (components > 1) {
      Rational total = 0;
      for (int e : elements_of(u)) total += edge_weights[e];
      const Rational ratio = total / (components - 1);
      if (!best || ratio < *best) best = ratio;
    }
    if (u == all) break;
  }
  if (!best) fail(Errc::kBadParams, "graph cannot be disconnected by edges");
  return *best;
}

RationalPoint induced_shadow_point(const GameInstance& inst,
                                   const std::vector<Rational>& defender_mix) {
  const Greedoid& g = inst.greedoid;
  if (defender_mix.size() != g.bases().size()) {
    fail(Errc::kBadParams, "defender mix must cover every base");
  }
  RationalPoint x(g.n(), 0);
  for (std::size_t b = 0; b < g.bases().size(); ++b) {
    const ShadowVector sh = shadow_vector(g, g.bases()[b]);
    for (int s = 0; s < g.n(); ++s) x[s] += defender_mix[b] * sh[s];
  }
  return x;
}

}  // namespace greedoid
