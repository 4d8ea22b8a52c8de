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

#include "greedoid/greedoid.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace greedoid {

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) > kMaxGroundSetSize) {
    fail(Errc::kSizeLimit, "ground set exceeds " +
                               std::to_string(kMaxGroundSetSize) +
                               " elements");
  }
  std::set<std::string> seen;
  for (const std::string& label : labels_) {
    if (label.empty()) fail(Errc::kBadParams, "empty element label");
    if (label.find(',') != std::string::npos ||
        label.find('=') != std::string::npos) {
      fail(Errc::kBadParams, "element label '" + label +
                                 "' contains a reserved character");
    }
    if (!seen.insert(label).second) {
      fail(Errc::kBadParams, "duplicate element label '" + label + "'");
    }
  }
}

int GroundSet::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

std::string GroundSet::format_subset(Mask m) const {
  std::string out;
  for (int i : elements_of(m)) {
    if (!out.empty()) out += ',';
    out += labels_[i];
  }
  return out;
}

std::string GroundSet::format_sequence(const std::vector<int>& seq) const {
  std::string out;
  for (int i : seq) {
    if (!out.empty()) out += ',';
    out += labels_[i];
  }
  return out;
}

Mask GroundSet::parse_subset(const std::string& csv) const {
  Mask m = 0;
  std::stringstream stream(csv);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    const int i = index_of(token);
    if (i < 0) fail(Errc::kValidationError, "unknown element '" + token + "'");
    m = with(m, i);
  }
  return m;
}

// Lazily computed class flags, shared across copies of the same greedoid.
struct Greedoid::ClassCache {
  std::once_flag once;
  LocalClassFlags flags;
};

Greedoid::Greedoid(GroundSet ground, std::vector<Mask> family,
                   std::string provenance,
                   std::shared_ptr<const BranchingStructure> branching)
    : ground_(std::move(ground)),
      family_(std::move(family)),
      provenance_(std::move(provenance)),
      branching_(std::move(branching)),
      class_cache_(std::make_shared<ClassCache>()) {
  const int n = ground_.size();
  const std::size_t table = std::size_t{1} << n;
  std::sort(family_.begin(), family_.end());
  family_.erase(std::unique(family_.begin(), family_.end()), family_.end());

  feasible_.assign(table, false);
  for (Mask m : family_) {
    if (m >= table) fail(Errc::kBadParams, "family member outside ground set");
    feasible_[m] = true;
  }

  // Subfeasibility: superset-or DP over the feasibility table.
  subfeasible_ = feasible_;
  for (int bit = 0; bit < n; ++bit) {
    const Mask b = single(bit);
    for (Mask m = 0; m < table; ++m) {
      if (!(m & b) && subfeasible_[m | b]) subfeasible_[m] = true;
    }
  }

  // rank(m) = |m| when m is feasible, otherwise the best one-element drop.
  rank_table_.assign(table, 0);
  for (Mask m = 1; m < table; ++m) {
    if (feasible_[m]) {
      rank_table_[m] = static_cast<std::uint8_t>(set_size(m));
      continue;
    }
    std::uint8_t best = 0;
    for (int i : elements_of(m)) {
      best = std::max(best, rank_table_[without(m, i)]);
    }
    rank_table_[m] = best;
  }

  const int r = rank_table_[universe()];
  for (Mask m : family_) {
    if (set_size(m) == r) bases_.push_back(m);
  }
}

Greedoid Greedoid::from_predicate(
    GroundSet ground, const std::function<bool(Mask)>& feasible,
    std::string provenance, std::shared_ptr<const BranchingStructure> b) {
  std::vector<Mask> family;
  const Mask all = full_mask(ground.size());
  for (Mask m = 0;; ++m) {
    if (feasible(m)) family.push_back(m);
    if (m == all) break;
  }
  return Greedoid(std::move(ground), std::move(family), std::move(provenance),
                  std::move(b));
}

Greedoid Greedoid::from_explicit(GroundSet ground, std::vector<Mask> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  const Mask all = full_mask(ground.size());
  std::vector<bool> feasible(std::size_t{1} << ground.size(), false);
  for (Mask m : family) {
    if (m > all) fail(Errc::kBadParams, "family member outside ground set");
    feasible[m] = true;
  }
  if (family.empty() || family.front() != 0) {
    throw AxiomViolationError(0, 0, "the empty set is not in the family");
  }
  if (auto violation = find_exchange_violation(family, feasible)) {
    throw AxiomViolationError(
        violation->first, violation->second,
        "exchange axiom fails for (" + ground.format_subset(violation->first) +
            ") and (" + ground.format_subset(violation->second) + ")");
  }
  return Greedoid(std::move(ground), std::move(family), "explicit", nullptr);
}

Greedoid Greedoid::uniform_matroid(int n, int k) {
  if (n < 0 || k < 0) fail(Errc::kBadParams, "uniform matroid needs n,k >= 0");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  std::ostringstream provenance;
  provenance << "uniform_matroid(" << n << "," << k << ")";
  return from_predicate(
      GroundSet(std::move(labels)),
      [k](Mask m) { return set_size(m) <= k; }, provenance.str(), nullptr);
}

Greedoid Greedoid::graphic_matroid(const MixedGraph& graph) {
  graph.validate(/*require_root=*/false);
  std::vector<std::string> labels;
  for (const Edge& e : graph.edges) labels.push_back(e.id);
  GroundSet ground(std::move(labels));
  const int nodes = static_cast<int>(graph.nodes.size());
  // Forests: kept edges minus merged components equals zero cycles.
  auto is_forest = [&graph, nodes](Mask m) {
    return graph.component_count(m) == nodes - set_size(m);
  };
  return from_predicate(std::move(ground), is_forest, "graphic_matroid",
                        nullptr);
}

Greedoid Greedoid::branching(const MixedGraph& graph) {
  graph.validate(/*require_root=*/true);
  std::vector<std::string> labels;
  for (const Edge& e : graph.edges) labels.push_back(e.id);
  GroundSet ground(std::move(labels));
  auto structure = std::make_shared<BranchingStructure>();
  structure->graph = graph;
  structure->root = graph.node_index(graph.root);
  const int root = structure->root;
  auto feasible = [&graph, root](Mask m) {
    return is_branching_feasible(graph, root, m);
  };
  return from_predicate(std::move(ground), feasible,
                        "branching(root=" + graph.root + ")",
                        std::move(structure));
}

Greedoid Greedoid::direct_sum(const Greedoid& a, const Greedoid& b) {
  std::vector<std::string> labels = a.ground().labels();
  labels.insert(labels.end(), b.ground().labels().begin(),
                b.ground().labels().end());
  GroundSet ground(std::move(labels));  // rejects label collisions
  std::vector<Mask> family;
  family.reserve(a.family().size() * b.family().size());
  for (Mask ma : a.family()) {
    for (Mask mb : b.family()) {
      family.push_back(ma | (mb << a.n()));
    }
  }
  return Greedoid(std::move(ground), std::move(family),
                  "direct_sum(" + a.provenance() + "," + b.provenance() + ")",
                  nullptr);
}

Greedoid Greedoid::rooted_extension(const Greedoid& g, Mask x,
                                    const std::vector<int>& ordering) {
  if (!g.is_feasible(x)) {
    fail(Errc::kBadParams, "rooted extension needs a feasible set");
  }
  Mask covered = 0;
  for (int i : ordering) {
    if (i < 0 || i >= g.n() || !contains(x, i) || contains(covered, i)) {
      fail(Errc::kBadParams,
           "ordering is not a permutation of the extension set");
    }
    covered = with(covered, i);
  }
  if (covered != x) {
    fail(Errc::kBadParams,
         "ordering is not a permutation of the extension set");
  }
  std::set<Mask> family;
  family.insert(0);
  Mask prefix = 0;
  for (int i : ordering) {
    prefix = with(prefix, i);
    family.insert(prefix);
  }
  for (Mask m : g.family()) {
    if (is_subset(x, m)) family.insert(m);
  }
  return Greedoid(g.ground(), std::vector<Mask>(family.begin(), family.end()),
                  "rooted_extension(" + g.provenance() + ")", nullptr);
}

Greedoid Greedoid::minor(Mask deleted, Mask contracted) const {
  if ((deleted & contracted) != 0) {
    fail(Errc::kBadParams, "deleted and contracted sets overlap");
  }
  if (!is_feasible(contracted)) {
    fail(Errc::kContractNotFeasible,
         "contracted set (" + ground_.format_subset(contracted) +
             ") is not feasible");
  }
  const Mask removed = deleted | contracted;
  std::vector<std::string> labels;
  std::vector<int> new_index(n(), -1);
  for (int i = 0; i < n(); ++i) {
    if (contains(removed, i)) continue;
    new_index[i] = static_cast<int>(labels.size());
    labels.push_back(ground_.label(i));
  }
  std::vector<Mask> family;
  for (Mask m : family_) {
    if ((m & deleted) != 0 || !is_subset(contracted, m)) continue;
    Mask mapped = 0;
    for (int i : elements_of(m & ~contracted)) {
      mapped = with(mapped, new_index[i]);
    }
    family.push_back(mapped);
  }
  return Greedoid(GroundSet(std::move(labels)), std::move(family),
                  "minor(" + provenance_ + ")", nullptr);
}

std::vector<Mask> Greedoid::bases_of(Mask a) const {
  const int r = rank(a);
  std::vector<Mask> out;
  for (Mask m : family_) {
    if (is_subset(m, a) && set_size(m) == r) out.push_back(m);
  }
  return out;
}

Mask Greedoid::continuations(Mask a) const {
  if (!is_feasible(a)) {
    fail(Errc::kNotFeasible,
         "set (" + ground_.format_subset(a) + ") is not feasible");
  }
  Mask out = 0;
  for (int i = 0; i < n(); ++i) {
    if (!contains(a, i) && is_feasible(with(a, i))) out = with(out, i);
  }
  return out;
}

int Greedoid::augment(Mask x, Mask y) const {
  if (!is_feasible(x) || !is_feasible(y) || set_size(x) >= set_size(y)) {
    fail(Errc::kBadParams, "augment needs feasible X, Y with |X| < |Y|");
  }
  for (int i : elements_of(y & ~x)) {
    if (is_feasible(with(x, i))) return i;
  }
  fail(Errc::kNoWitness, "no augmenting element from (" +
                             ground_.format_subset(y) + ") into (" +
                             ground_.format_subset(x) + ")");
}

std::vector<int> Greedoid::feasible_ordering(Mask x) const {
  if (!is_feasible(x)) {
    fail(Errc::kNotFeasible,
         "set (" + ground_.format_subset(x) + ") is not feasible");
  }
  std::vector<int> order;
  Mask current = 0;
  while (current != x) {
    const int next = augment(current, x);
    order.push_back(next);
    current = with(current, next);
  }
  return order;
}

const LocalClassFlags& Greedoid::local_class() const {
  std::call_once(class_cache_->once, [this] {
    class_cache_->flags.lup = !find_lup_violation(*this).has_value();
    class_cache_->flags.lip = !find_lip_violation(*this).has_value();
    class_cache_->flags.lfp = !find_lfp_violation(*this).has_value();
  });
  return class_cache_->flags;
}

std::optional<std::pair<Mask, Mask>> find_exchange_violation(
    const std::vector<Mask>& family, const std::vector<bool>& feasible) {
  for (Mask x : family) {
    for (Mask y : family) {
      if (set_size(x) >= set_size(y)) continue;
      bool witness = false;
      for (int i : elements_of(y & ~x)) {
        if (feasible[with(x, i)]) {
          witness = true;
          break;
        }
      }
      if (!witness) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Mask, Mask>> find_exchange_violation(
    const Greedoid& g) {
  std::vector<bool> feasible(std::size_t{1} << g.n(), false);
  for (Mask m : g.family()) feasible[m] = true;
  return find_exchange_violation(g.family(), feasible);
}

std::optional<std::pair<Mask, Mask>> find_lup_violation(const Greedoid& g) {
  for (Mask a : g.family()) {
    for (Mask b : g.family()) {
      const Mask u = a | b;
      if (g.is_subfeasible(u) && !g.is_feasible(u)) {
        return std::make_pair(a, b);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Mask, Mask>> find_lip_violation(const Greedoid& g) {
  for (Mask a : g.family()) {
    for (Mask b : g.family()) {
      if (g.is_subfeasible(a | b) && !g.is_feasible(a & b)) {
        return std::make_pair(a, b);
      }
    }
  }
  return std::nullopt;
}

std::optional<LfpViolation> find_lfp_violation(const Greedoid& g) {
  const int n = g.n();
  for (Mask a : g.family()) {
    for (int x = 0; x < n; ++x) {
      if (contains(a, x) || !g.is_feasible(with(a, x))) continue;
      for (int y = x + 1; y < n; ++y) {
        if (contains(a, y) || y == x) continue;
        if (!g.is_feasible(with(a, y))) continue;
        if (!g.is_feasible(with(with(a, x), y))) continue;
        for (int z = 0; z < n; ++z) {
          if (z == x || z == y || contains(a, z)) continue;
          if (!g.is_feasible(with(with(with(a, x), y), z))) continue;
          if (!g.is_feasible(with(with(a, x), z)) &&
              !g.is_feasible(with(with(a, y), z))) {
            return LfpViolation{a, x, y, z};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<int> index_map(const GroundSet& sub, const GroundSet& super) {
  std::vector<int> map(sub.size(), -1);
  for (int i = 0; i < sub.size(); ++i) {
    map[i] = super.index_of(sub.label(i));
    if (map[i] < 0) {
      fail(Errc::kBadParams, "label '" + sub.label(i) +
                                 "' is missing from the enclosing ground set");
    }
  }
  return map;
}

}  // namespace greedoid
