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

#include "greedoid/paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace greedoid {

namespace {

void require_local_poset(const Greedoid& g, const char* what) {
  if (!g.is_local_poset()) {
    fail(Errc::kNotLocalPoset,
         std::string(what) + " needs a local poset greedoid");
  }
}

void orderings_rec(const Greedoid& g, Mask target, Mask current,
                   std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
  if (current == target) {
    out.push_back(prefix);
    return;
  }
  for (int i : elements_of(target & ~current)) {
    if (!g.is_feasible(with(current, i))) continue;
    prefix.push_back(i);
    orderings_rec(g, target, with(current, i), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Mask delta(const Greedoid& g, Mask x) {
  if (!g.is_interval()) {
    fail(Errc::kNotInterval, "delta needs an interval greedoid");
  }
  if (!g.is_subfeasible(x)) {
    fail(Errc::kNotSubfeasible,
         "set (" + g.ground().format_subset(x) + ") is not subfeasible");
  }
  Mask base = 0;
  for (Mask m : g.family()) {
    if (is_subset(m, x)) base |= m;
  }
  if (!g.is_feasible(base) || set_size(base) != g.rank(x)) {
    throw std::logic_error("delta: union of feasible subsets is not a base");
  }
  return base;
}

Mask path(const Greedoid& g, Mask a, int x) {
  require_local_poset(g, "path");
  if (x < 0 || x >= g.n() || !contains(a, x) || !g.is_feasible(a)) {
    fail(Errc::kBadParams, "path needs a feasible set containing the element");
  }
  Mask intersection = a;
  for (Mask m : g.family()) {
    if (is_subset(m, a) && contains(m, x)) intersection &= m;
  }
  if (!g.is_feasible(intersection)) {
    throw std::logic_error("path: intersection of feasible sets not feasible");
  }
  // Minimality is immediate from the intersection form, but re-check anyway.
  for (Mask m : g.family()) {
    if (m != intersection && is_subset(m, intersection) && contains(m, x)) {
      throw std::logic_error("path: result is not minimal");
    }
  }
  if (const BranchingStructure* b = g.branching_structure()) {
    const Mask via_tree = branching_root_path(b->graph, b->root, a, x);
    if (via_tree != intersection) {
      throw std::logic_error("path: family scan and tree walk disagree");
    }
  }
  return intersection;
}

bool is_path(const Greedoid& g, Mask p) {
  if (p == 0 || !g.is_feasible(p)) return false;
  for (int x : elements_of(p)) {
    bool minimal = true;
    for (Mask m : g.family()) {
      if (m != p && is_subset(m, p) && contains(m, x)) {
        minimal = false;
        break;
      }
    }
    if (minimal) return true;
  }
  return false;
}

std::vector<Mask> all_paths(const Greedoid& g) {
  std::vector<Mask> out;
  for (Mask m : g.family()) {
    if (is_path(g, m)) out.push_back(m);
  }
  return out;
}

std::vector<std::vector<int>> feasible_orderings_of(const Greedoid& g,
                                                    Mask x) {
  if (!g.is_feasible(x)) {
    fail(Errc::kNotFeasible,
         "set (" + g.ground().format_subset(x) + ") is not feasible");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  orderings_rec(g, x, 0, prefix, out);
  return out;
}

std::vector<int> path_ordering(const Greedoid& g, Mask p) {
  if (!g.is_local_forest()) {
    fail(Errc::kNotLocalForest, "path orderings need a local forest greedoid");
  }
  if (!is_path(g, p)) {
    fail(Errc::kNotAPath,
         "set (" + g.ground().format_subset(p) + ") is not a path");
  }
  // In a local forest greedoid each step has exactly one feasible extension
  // inside the path; two choices would yield two orderings.
  std::vector<int> order;
  Mask current = 0;
  while (current != p) {
    int next = -1;
    for (int i : elements_of(p & ~current)) {
      if (!g.is_feasible(with(current, i))) continue;
      if (next >= 0) {
        throw std::logic_error("path_ordering: ordering is not unique");
      }
      next = i;
    }
    if (next < 0) {
      throw std::logic_error("path_ordering: ordering cannot be completed");
    }
    order.push_back(next);
    current = with(current, next);
  }
  return order;
}

int shadow(const Greedoid& g, Mask a, int x) {
  if (!g.is_feasible(a)) {
    fail(Errc::kNotFeasible,
         "set (" + g.ground().format_subset(a) + ") is not feasible");
  }
  return set_size(a) - g.rank(without(a, x));
}

ShadowVector shadow_vector(const Greedoid& g, Mask a) {
  ShadowVector values(g.n(), 0);
  for (int x = 0; x < g.n(); ++x) values[x] = shadow(g, a, x);
  return values;
}

bool check_objfn_identity(const Greedoid& g, Mask a, const WeightVector& c) {
  require_local_poset(g, "objective identity");
  const ShadowVector sh = shadow_vector(g, a);
  Rational by_shadow = 0;
  for (int x = 0; x < g.n(); ++x) by_shadow += c[x] * sh[x];
  Rational by_paths = 0;
  for (int x : elements_of(a)) by_paths += weight_sum(c, path(g, a, x));
  return by_shadow == by_paths;
}

std::optional<RankSumViolation> find_rank_sum_violation(const Greedoid& g) {
  const Mask all = g.universe();
  for (Mask b = 0;; ++b) {
    if (g.is_subfeasible(b) && b != 0) {
      const int rb = g.rank(b);
      std::optional<RankSumViolation> hit;
      for_each_submask(b, [&](Mask a) {
        if (a == 0 || hit) return;
        int left = 0;
        for (int x : elements_of(a)) left += g.rank(without(b, x));
        const int right = g.rank(b & ~a) + (set_size(a) - 1) * rb;
        if (left > right) hit = RankSumViolation{b, a};
      });
      if (hit) return hit;
    }
    if (b == all) break;
  }
  return std::nullopt;
}

}  // namespace greedoid
