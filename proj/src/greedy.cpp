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

#include "greedoid/greedy.hpp"

#include <algorithm>
#include <set>

namespace greedoid {

namespace {

Mask mask_of(const std::vector<int>& seq) {
  Mask m = 0;
  for (int i : seq) m = with(m, i);
  return m;
}

Rational score_of(const Objective& obj, const Rational& value) {
  return obj.direction == Direction::kMax ? value : -value;
}

// Score of A + x for order-independent objectives.
Rational step_score(const Greedoid& g, const Objective& obj, Mask a, int x) {
  return score_of(obj, evaluate_set(g, obj, with(a, x)));
}

// Score of the ordering `prefix + x`.
Rational step_score_ordered(const Greedoid& g, const Objective& obj,
                            std::vector<int>& prefix, int x) {
  prefix.push_back(x);
  const Rational value = evaluate_ordered(g, obj, prefix);
  prefix.pop_back();
  return score_of(obj, value);
}

// True iff x attains the best step score over Γ(A); the hypothesis shared by
// the set-function optimality conditions. A and A+x must be feasible.
bool greedy_choice_at(const Greedoid& g, const Objective& obj, Mask a, int x) {
  const Rational mine = step_score(g, obj, a, x);
  for (int y : elements_of(g.continuations(a))) {
    if (step_score(g, obj, a, y) > mine) return false;
  }
  return true;
}

void all_runs_rec(const Greedoid& g, const Objective& obj,
                  std::vector<int>& prefix, GreedyTrace trace,
                  std::vector<GreedyTrace>& out) {
  const Mask a = mask_of(prefix);
  const Mask gamma = g.continuations(a);
  if (gamma == 0) {
    trace.base = a;
    trace.value = evaluate_ordered(g, obj, prefix);
    out.push_back(std::move(trace));
    return;
  }
  std::optional<Rational> best;
  for (int x : elements_of(gamma)) {
    const Rational s = step_score_ordered(g, obj, prefix, x);
    if (!best || s > *best) best = s;
  }
  for (int x : elements_of(gamma)) {
    if (step_score_ordered(g, obj, prefix, x) != *best) continue;
    GreedyTrace next = trace;
    prefix.push_back(x);
    next.picks.push_back(
        GreedyStep{x, gamma, evaluate_ordered(g, obj, prefix)});
    all_runs_rec(g, obj, prefix, std::move(next), out);
    prefix.pop_back();
  }
}

}  // namespace

Objective Objective::from_set_table(std::map<Mask, Rational> table,
                                    Direction d) {
  Objective obj;
  obj.kind = Kind::kSetTable;
  obj.direction = d;
  obj.set_table = std::move(table);
  return obj;
}

Objective Objective::linear(WeightVector c, Direction d) {
  Objective obj;
  obj.kind = Kind::kLinear;
  obj.direction = d;
  obj.weights = std::move(c);
  return obj;
}

Objective Objective::path_sum(WeightVector c, Direction d) {
  Objective obj;
  obj.kind = Kind::kPathSum;
  obj.direction = d;
  obj.weights = std::move(c);
  return obj;
}

Objective Objective::bottleneck(WeightVector c, Direction d) {
  Objective obj;
  obj.kind = Kind::kBottleneck;
  obj.direction = d;
  obj.weights = std::move(c);
  return obj;
}

Objective Objective::monotone_path_fn(std::map<Mask, Rational> f,
                                      Direction d) {
  Objective obj;
  obj.kind = Kind::kMonotonePathFn;
  obj.direction = d;
  obj.set_table = std::move(f);
  return obj;
}

Objective Objective::from_ordered_table(
    std::map<std::vector<int>, Rational> table, Direction d) {
  Objective obj;
  obj.kind = Kind::kOrderedTable;
  obj.direction = d;
  obj.ordered_table = std::move(table);
  return obj;
}

Rational evaluate_set(const Greedoid& g, const Objective& obj, Mask a) {
  switch (obj.kind) {
    case Objective::Kind::kSetTable: {
      auto it = obj.set_table.find(a);
      if (it == obj.set_table.end()) {
        fail(Errc::kObjectiveUndefined,
             "no table value for (" + g.ground().format_subset(a) + ")");
      }
      return it->second;
    }
    case Objective::Kind::kLinear:
      return weight_sum(obj.weights, a);
    case Objective::Kind::kPathSum: {
      Rational total = 0;
      for (int x : elements_of(a)) total += weight_sum(obj.weights, path(g, a, x));
      return total;
    }
    case Objective::Kind::kBottleneck: {
      Rational total = 0;
      for (int x : elements_of(a)) {
        std::optional<Rational> top;
        for (int e : elements_of(path(g, a, x))) {
          if (!top || obj.weights[e] > *top) top = obj.weights[e];
        }
        total += *top;
      }
      return total;
    }
    case Objective::Kind::kMonotonePathFn: {
      Rational total = 0;
      for (int x : elements_of(a)) {
        auto it = obj.set_table.find(path(g, a, x));
        if (it == obj.set_table.end()) {
          fail(Errc::kObjectiveUndefined, "path function misses a path");
        }
        total += it->second;
      }
      return total;
    }
    case Objective::Kind::kOrderedTable:
      fail(Errc::kObjectiveUndefined,
           "ordered objective has no set value");
  }
  fail(Errc::kObjectiveUndefined, "unknown objective kind");
}

Rational evaluate_ordered(const Greedoid& g, const Objective& obj,
                          const std::vector<int>& seq) {
  if (obj.kind != Objective::Kind::kOrderedTable) {
    return evaluate_set(g, obj, mask_of(seq));
  }
  auto it = obj.ordered_table.find(seq);
  if (it == obj.ordered_table.end()) {
    fail(Errc::kObjectiveUndefined,
         "no table value for ordering (" + g.ground().format_sequence(seq) +
             ")");
  }
  return it->second;
}

namespace {

void strings_rec(const Greedoid& g, std::vector<int>& prefix, Mask current,
                 std::vector<std::vector<int>>& out) {
  out.push_back(prefix);
  for (int x : elements_of(g.continuations(current))) {
    prefix.push_back(x);
    strings_rec(g, prefix, with(current, x), out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> all_feasible_orderings(const Greedoid& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  strings_rec(g, prefix, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

Objective lift_to_ordered(const Greedoid& g, const Objective& obj) {
  std::map<std::vector<int>, Rational> table;
  for (const std::vector<int>& seq : all_feasible_orderings(g)) {
    table[seq] = evaluate_ordered(g, obj, seq);
  }
  return Objective::from_ordered_table(std::move(table), obj.direction);
}

GreedyTrace greedy(const Greedoid& g, const Objective& obj) {
  GreedyTrace trace;
  std::vector<int> prefix;
  Mask a = 0;
  for (;;) {
    const Mask gamma = g.continuations(a);
    if (gamma == 0) break;
    int best_element = -1;
    Rational best_score;
    for (int x : elements_of(gamma)) {
      const Rational s = step_score_ordered(g, obj, prefix, x);
      if (best_element < 0 || s > best_score) {
        best_element = x;
        best_score = s;
      }
    }
    prefix.push_back(best_element);
    a = with(a, best_element);
    trace.picks.push_back(
        GreedyStep{best_element, gamma, evaluate_ordered(g, obj, prefix)});
  }
  trace.base = a;
  trace.value = evaluate_ordered(g, obj, prefix);
  return trace;
}

std::vector<GreedyTrace> greedy_all_runs(const Greedoid& g,
                                         const Objective& obj) {
  std::vector<GreedyTrace> out;
  std::vector<int> prefix;
  all_runs_rec(g, obj, prefix, GreedyTrace{}, out);
  return out;
}

GreedyTrace ordered_greedy(const Greedoid& g, const Objective& obj) {
  if (!obj.order_dependent()) {
    fail(Errc::kObjectiveUndefined,
         "ordered greedy needs an ordered-table objective");
  }
  return greedy(g, obj);
}

Optimum brute_force_optimum(const Greedoid& g, const Objective& obj) {
  Optimum best;
  bool have = false;
  if (obj.order_dependent()) {
    for (Mask base : g.bases()) {
      for (const std::vector<int>& seq : feasible_orderings_of(g, base)) {
        const Rational value = evaluate_ordered(g, obj, seq);
        if (!have || score_of(obj, value) > score_of(obj, best.value) ||
            (score_of(obj, value) == score_of(obj, best.value) &&
             seq < best.ordering)) {
          best = Optimum{base, value, seq};
          have = true;
        }
      }
    }
  } else {
    for (Mask base : g.bases()) {
      const Rational value = evaluate_set(g, obj, base);
      if (!have || score_of(obj, value) > score_of(obj, best.value) ||
          (score_of(obj, value) == score_of(obj, best.value) &&
           lex_less(base, best.base))) {
        best = Optimum{base, value, {}};
        have = true;
      }
    }
  }
  return best;
}

KlResult check_kl_conditions(const Greedoid& g, const Objective& obj) {
  if (!obj.order_dependent()) {
    fail(Errc::kObjectiveUndefined,
         "the string conditions need an ordered-table objective");
  }
  const std::vector<std::vector<int>> strings = all_feasible_orderings(g);
  const std::set<std::vector<int>> lookup(strings.begin(), strings.end());

  auto str_score = [&](const std::vector<int>& s) {
    return score_of(obj, evaluate_ordered(g, obj, s));
  };
  // The shared hypothesis: x is a best continuation after `prefix`.
  auto hypothesis = [&](std::vector<int> prefix, int x) {
    const Mask a = mask_of(prefix);
    if (!g.is_feasible(with(a, x))) return false;
    prefix.push_back(x);
    const Rational mine = str_score(prefix);
    prefix.pop_back();
    for (int y : elements_of(g.continuations(a))) {
      prefix.push_back(y);
      const Rational other = str_score(prefix);
      prefix.pop_back();
      if (other > mine) return false;
    }
    return true;
  };

  KlResult result;
  result.condition1 = true;
  result.condition2 = true;

  // Condition 1: strings differing in exactly one position p, with the
  // hypothesis holding for some prefix length i <= p.
  for (const std::vector<int>& sigma : strings) {
    if (!result.condition1) break;
    for (std::size_t p = 0; p < sigma.size() && result.condition1; ++p) {
      for (int z = 0; z < g.n() && result.condition1; ++z) {
        if (z == sigma[p]) continue;
        std::vector<int> tau = sigma;
        tau[p] = z;
        if (!lookup.count(tau)) continue;
        if (str_score(sigma) >= str_score(tau)) continue;
        for (std::size_t i = 0; i <= p; ++i) {
          const std::vector<int> prefix(sigma.begin(), sigma.begin() + i);
          if (hypothesis(prefix, sigma[p])) {
            result.condition1 = false;
            result.witness1 = KlWitness{sigma, tau};
            break;
          }
        }
      }
    }
  }

  // Condition 2: strings differing by swapping positions p < q, with the
  // hypothesis holding exactly at prefix length p.
  for (const std::vector<int>& sigma : strings) {
    if (!result.condition2) break;
    for (std::size_t p = 0; p < sigma.size() && result.condition2; ++p) {
      for (std::size_t q = p + 1; q < sigma.size(); ++q) {
        std::vector<int> tau = sigma;
        std::swap(tau[p], tau[q]);
        if (!lookup.count(tau)) continue;
        if (str_score(sigma) >= str_score(tau)) continue;
        const std::vector<int> prefix(sigma.begin(), sigma.begin() + p);
        if (hypothesis(prefix, sigma[p])) {
          result.condition2 = false;
          result.witness2 = KlWitness{sigma, tau};
          break;
        }
      }
    }
  }
  return result;
}

Cond3Result check_condition_3(const Greedoid& g, const Objective& obj) {
  for (Mask a : g.family()) {
    for (Mask b : g.family()) {
      if (!is_subset(a, b)) continue;
      for (int x = 0; x < g.n(); ++x) {
        if (contains(b, x)) continue;
        if (!g.is_feasible(with(a, x)) || !g.is_feasible(with(b, x))) {
          continue;
        }
        if (!greedy_choice_at(g, obj, a, x)) continue;
        const Rational bx = step_score(g, obj, b, x);
        for (int z : elements_of(g.continuations(b))) {
          if (step_score(g, obj, b, z) > bx) {
            return {false, Cond3Witness{a, b, x, z}};
          }
        }
      }
    }
  }
  return {true, std::nullopt};
}

Cond6Result check_condition_6(const Greedoid& g, const Objective& obj) {
  for (Mask b : g.bases()) {
    const Rational b_score = score_of(obj, evaluate_set(g, obj, b));
    for (Mask a : g.family()) {
      if (!is_subset(a, b)) continue;
      for (int x = 0; x < g.n(); ++x) {
        if (contains(b, x) || !g.is_feasible(with(a, x))) continue;
        if (!greedy_choice_at(g, obj, a, x)) continue;
        bool found = false;
        for (int y : elements_of(b & ~a)) {
          const Mask swapped = with(without(b, y), x);
          if (g.is_feasible(swapped) &&
              score_of(obj, evaluate_set(g, obj, swapped)) >= b_score) {
            found = true;
            break;
          }
        }
        if (!found) return {false, Cond6Witness{a, b, x}};
      }
    }
  }
  return {true, std::nullopt};
}

Cond7Result check_condition_7(const Greedoid& g, const Objective& obj) {
  if (!g.is_interval()) {
    fail(Errc::kNotInterval, "condition (7) needs an interval greedoid");
  }
  for (Mask b1 : g.bases()) {
    for (Mask b2 : g.bases()) {
      const Mask b = b1 & b2;
      if (b1 == b2 || set_size(b) != set_size(b1) - 1) continue;
      const int x = lowest_element(b1 & ~b);
      const int z = lowest_element(b2 & ~b);
      if (g.is_feasible(delta(g, b) | single(x) | single(z))) continue;
      if (step_score(g, obj, b, x) >= step_score(g, obj, b, z)) continue;
      // Conclusion fails; a violation needs some A satisfying the hypothesis.
      for (Mask a : g.family()) {
        if (!is_subset(a, b) || !g.is_feasible(with(a, x))) continue;
        if (greedy_choice_at(g, obj, a, x)) {
          return {false, Cond7Witness{a, b, x, z}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

MonotoneResult check_monotone_f(const Greedoid& g,
                                const std::map<Mask, Rational>& f) {
  if (!g.is_local_forest()) {
    fail(Errc::kNotLocalForest,
         "path-function monotonicity needs a local forest greedoid");
  }
  const std::vector<Mask> paths = all_paths(g);
  std::vector<bool> is_path_mask(std::size_t{1} << g.n(), false);
  for (Mask p : paths) {
    if (!f.count(p)) {
      fail(Errc::kObjectiveUndefined, "path function misses a path");
    }
    is_path_mask[p] = true;
  }
  for (Mask a : paths) {
    for (Mask b : paths) {
      if (a != b && is_subset(a, b) && f.at(a) > f.at(b)) {
        return {false, MonotoneWitness{a, b, 0, true}};
      }
    }
  }
  const Mask all = g.universe();
  for (Mask a : paths) {
    for (Mask b : paths) {
      if (f.at(a) > f.at(b)) continue;
      for (Mask c = 0;; ++c) {
        if (is_path_mask[a | c] && is_path_mask[b | c] &&
            f.at(a | c) > f.at(b | c)) {
          return {false, MonotoneWitness{a, b, c, false}};
        }
        if (c == all) break;
      }
    }
  }
  return {true, std::nullopt};
}

std::map<Mask, Rational> path_cost_table(const Greedoid& g,
                                         const WeightVector& c) {
  std::map<Mask, Rational> table;
  for (Mask p : all_paths(g)) table[p] = weight_sum(c, p);
  return table;
}

std::map<Mask, Rational> path_max_table(const Greedoid& g,
                                        const WeightVector& c) {
  std::map<Mask, Rational> table;
  for (Mask p : all_paths(g)) {
    std::optional<Rational> top;
    for (int e : elements_of(p)) {
      if (!top || c[e] > *top) top = c[e];
    }
    table[p] = *top;
  }
  return table;
}

ViolationMinorResult violation_minor(const Greedoid& g, const Objective& obj,
                                     const Cond6Witness& witness) {
  const Mask a = witness.a;
  const Mask b = witness.b;
  const int x = witness.x;
  const bool shape_ok = g.is_feasible(a) && is_subset(a, b) &&
                        g.is_feasible(b) && set_size(b) == g.rank() &&
                        !contains(b, x) && g.is_feasible(with(a, x));
  if (!shape_ok || !greedy_choice_at(g, obj, a, x)) {
    fail(Errc::kNotAViolation, "witness does not violate condition (6)");
  }
  const Rational b_score = score_of(obj, evaluate_set(g, obj, b));
  for (int y : elements_of(b & ~a)) {
    const Mask swapped = with(without(b, y), x);
    if (g.is_feasible(swapped) &&
        score_of(obj, evaluate_set(g, obj, swapped)) >= b_score) {
      fail(Errc::kNotAViolation, "witness does not violate condition (6)");
    }
  }

  const Mask deleted = g.universe() & ~b & ~single(x);
  Greedoid minor = g.minor(deleted, a);

  // Transport the objective: w_H(Z) = w_G(Z ∪ A), materialized as a table.
  const std::vector<int> old_index = index_map(minor.ground(), g.ground());
  std::map<Mask, Rational> table;
  for (Mask z : minor.family()) {
    Mask old_mask = a;
    for (int i : elements_of(z)) old_mask = with(old_mask, old_index[i]);
    table[z] = evaluate_set(g, obj, old_mask);
  }
  return ViolationMinorResult{
      std::move(minor), Objective::from_set_table(std::move(table),
                                                  obj.direction)};
}

std::optional<Lemma4Violation> find_lemma4_violation(const Greedoid& g) {
  if (!g.is_local_poset()) {
    fail(Errc::kNotLocalPoset, "the path-intersection property needs a "
                               "local poset greedoid");
  }
  for (Mask bx : g.family()) {
    for (int x : elements_of(bx)) {
      const Mask b = without(bx, x);
      for (int z = 0; z < g.n(); ++z) {
        if (z == x || contains(b, z) || !g.is_feasible(with(b, z))) continue;
        const Mask d = delta(g, b);
        if (g.is_feasible(d | single(x) | single(z))) continue;
        const Mask outside = b & ~d;
        for (int e : elements_of(outside)) {
          if ((path(g, bx, e) & outside) !=
              (path(g, with(b, z), e) & outside)) {
            return Lemma4Violation{b, x, z, e};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace greedoid
