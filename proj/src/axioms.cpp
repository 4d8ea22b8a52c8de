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

#include "greedoid/axioms.hpp"

#include <stdexcept>

#include "greedoid/paths.hpp"

namespace greedoid {

namespace {

// Witnesses are re-verified against the raw definitions before being
// reported; a mismatch means the scanning code is broken.
void verify_or_die(bool condition, const char* what) {
  if (!condition) {
    throw std::logic_error(std::string("witness re-check failed: ") + what);
  }
}

void verify_exchange_witness(const Greedoid& g, const ExchangeWitness& w) {
  verify_or_die(g.is_feasible(w.x) && g.is_feasible(w.y) &&
                    set_size(w.x) < set_size(w.y),
                "exchange shape");
  for (int i : elements_of(w.y & ~w.x)) {
    verify_or_die(!g.is_feasible(with(w.x, i)), "exchange has a witness");
  }
}

void verify_lup_witness(const Greedoid& g, const PairWitness& w) {
  verify_or_die(g.is_feasible(w.a) && g.is_feasible(w.b) &&
                    g.is_subfeasible(w.a | w.b) && !g.is_feasible(w.a | w.b),
                "local union");
}

void verify_lip_witness(const Greedoid& g, const PairWitness& w) {
  verify_or_die(g.is_feasible(w.a) && g.is_feasible(w.b) &&
                    g.is_subfeasible(w.a | w.b) && !g.is_feasible(w.a & w.b),
                "local intersection");
}

void verify_lfp_witness(const Greedoid& g, const LfpViolation& w) {
  const Mask axy = with(with(w.a, w.x), w.y);
  verify_or_die(g.is_feasible(w.a) && g.is_feasible(with(w.a, w.x)) &&
                    g.is_feasible(with(w.a, w.y)) && g.is_feasible(axy) &&
                    g.is_feasible(with(axy, w.z)) &&
                    !g.is_feasible(with(with(w.a, w.x), w.z)) &&
                    !g.is_feasible(with(with(w.a, w.y), w.z)),
                "local forest");
}

void verify_strong_exchange_witness(const Greedoid& g,
                                    const StrongExchangeWitness& w) {
  verify_or_die(g.is_feasible(w.a) && g.is_feasible(with(w.a, w.x)) &&
                    is_subset(w.a, w.b) && !contains(w.b, w.x) &&
                    g.rank(w.b) == set_size(w.b) &&
                    set_size(w.b) == g.rank(),
                "strong exchange shape");
  for (int y : elements_of(w.b & ~w.a)) {
    const Mask swapped = with(without(w.b, y), w.x);
    verify_or_die(!(g.is_feasible(swapped) && g.is_feasible(with(w.a, y))),
                  "strong exchange has a witness");
  }
}

}  // namespace

ClassReport classify(const Greedoid& g) {
  ClassReport report;

  if (auto w = find_exchange_violation(g)) {
    report.exchange_witness = ExchangeWitness{w->first, w->second};
    verify_exchange_witness(g, *report.exchange_witness);
  }
  report.is_greedoid =
      !report.exchange_witness.has_value() && g.is_feasible(0);

  if (auto w = find_lup_violation(g)) {
    report.lup_witness = PairWitness{w->first, w->second};
    verify_lup_witness(g, *report.lup_witness);
  }
  report.has_lup = !report.lup_witness.has_value();

  if (auto w = find_lip_violation(g)) {
    report.lip_witness = PairWitness{w->first, w->second};
    verify_lip_witness(g, *report.lip_witness);
  }
  report.has_lip = !report.lip_witness.has_value();

  if (auto w = find_lfp_violation(g)) {
    report.lfp_witness = *w;
    verify_lfp_witness(g, *report.lfp_witness);
  }
  report.has_lfp = !report.lfp_witness.has_value();

  const StrongExchangeResult strong = check_strong_exchange(g);
  report.has_strong_exchange = strong.ok;
  report.strong_exchange_witness = strong.witness;

  return report;
}

StrongExchangeResult check_strong_exchange(const Greedoid& g) {
  for (Mask b : g.bases()) {
    std::vector<Mask> feasible_inside;
    for (Mask a : g.family()) {
      if (is_subset(a, b)) feasible_inside.push_back(a);
    }
    for (Mask a : feasible_inside) {
      for (int x = 0; x < g.n(); ++x) {
        if (contains(b, x) || contains(a, x)) continue;
        if (!g.is_feasible(with(a, x))) continue;
        bool found = false;
        for (int y : elements_of(b & ~a)) {
          const Mask swapped = with(without(b, y), x);
          if (g.is_feasible(swapped) && g.is_feasible(with(a, y))) {
            found = true;
            break;
          }
        }
        if (!found) {
          StrongExchangeWitness witness{a, b, x};
          verify_strong_exchange_witness(g, witness);
          return {false, witness};
        }
      }
    }
  }
  return {true, std::nullopt};
}

SupermodularityResult check_supermodularity(const Greedoid& g) {
  const Mask all = g.universe();
  for (Mask a = 0;; ++a) {
    for (Mask b = 0;; ++b) {
      if (g.is_subfeasible(a | b) &&
          g.rank(a) + g.rank(b) > g.rank(a | b) + g.rank(a & b)) {
        return {false, PairWitness{a, b}};
      }
      if (b == all) break;
    }
    if (a == all) break;
  }
  return {true, std::nullopt};
}

PathUniquenessResult check_path_uniqueness(const Greedoid& g) {
  if (!g.is_local_poset()) {
    fail(Errc::kNotLocalPoset, "path uniqueness needs a local poset greedoid");
  }
  PathUniquenessResult result{true, std::nullopt};
  for (Mask p : all_paths(g)) {
    const std::vector<std::vector<int>> orderings =
        feasible_orderings_of(g, p);
    if (orderings.size() != 1) {
      result.ok = false;
      result.witness =
          PathUniquenessWitness{p, orderings[0], orderings[1], std::nullopt};
      break;
    }
    Mask prefix = 0;
    for (std::size_t i = 0; i + 1 < orderings[0].size(); ++i) {
      prefix = with(prefix, orderings[0][i]);
      if (!is_path(g, prefix)) {
        result.ok = false;
        result.witness =
            PathUniquenessWitness{p, orderings[0], {}, prefix};
        break;
      }
    }
    if (!result.ok) break;
  }
  // The two path statements and the local forest property are equivalent on
  // local poset greedoids; disagreement means a bug.
  if (result.ok != g.local_class().lfp) {
    throw std::logic_error(
        "path uniqueness disagrees with the local forest flag");
  }
  return result;
}

}  // namespace greedoid
