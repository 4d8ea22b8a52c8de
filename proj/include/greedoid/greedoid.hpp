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

#ifndef GREEDOID_GREEDOID_HPP_
#define GREEDOID_GREEDOID_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "greedoid/errors.hpp"
#include "greedoid/mixed_graph.hpp"
#include "greedoid/subset.hpp"

namespace greedoid {

// Ordered element labels; the element order is the declaration order and all
// deterministic tie-breaks refer to it.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  int index_of(const std::string& label) const;  // -1 if unknown

  std::string format_subset(Mask m) const;  // "a,c", ascending by index
  std::string format_sequence(const std::vector<int>& seq) const;
  Mask parse_subset(const std::string& csv) const;  // kValidationError

  bool operator==(const GroundSet& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
};

struct BranchingStructure {
  MixedGraph graph;
  int root = 0;
};

struct LocalClassFlags {
  bool lup = false;
  bool lip = false;
  bool lfp = false;
};

// A greedoid with its feasible family fully materialized. Construction also
// precomputes subfeasibility and the full rank table, so all later queries
// are table lookups or scans of the family. Immutable after construction;
// every query is const and safe for concurrent readers.
class Greedoid {
 public:
  // Validates both axioms and throws AxiomViolationError with a witness pair
  // when the family is not a greedoid.
  static Greedoid from_explicit(GroundSet ground, std::vector<Mask> family);

  static Greedoid uniform_matroid(int n, int k);  // elements e1..en
  static Greedoid graphic_matroid(const MixedGraph& graph);
  static Greedoid branching(const MixedGraph& graph);  // root from the graph
  static Greedoid direct_sum(const Greedoid& a, const Greedoid& b);

  // F' = {∅} ∪ {prefixes of `ordering`} ∪ {Y ∈ F : X ⊆ Y} for a feasible X
  // and an arbitrary ordering of it.
  static Greedoid rooted_extension(const Greedoid& g, Mask x,
                                   const std::vector<int>& ordering);

  // Deletes `deleted`, then contracts `contracted` (which must be feasible in
  // the deletion). Throws kContractNotFeasible / kBadParams.
  Greedoid minor(Mask deleted, Mask contracted) const;

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  Mask universe() const { return full_mask(n()); }
  const std::vector<Mask>& family() const { return family_; }
  const std::vector<Mask>& bases() const { return bases_; }

  bool is_feasible(Mask m) const { return feasible_[m]; }
  bool is_subfeasible(Mask m) const { return subfeasible_[m]; }
  int rank(Mask m) const { return rank_table_[m]; }
  int rank() const { return rank_table_[universe()]; }

  std::vector<Mask> bases_of(Mask a) const;

  // Γ(A): all x with A + x feasible. Throws kNotFeasible.
  Mask continuations(Mask a) const;

  // Lowest-index y in Y−X with X+y feasible, for feasible X, Y, |X| < |Y|.
  // Throws kNoWitness when no such y exists (i.e. the exchange axiom fails).
  int augment(Mask x, Mask y) const;

  // Deterministic feasible ordering built by repeated augmentation.
  std::vector<int> feasible_ordering(Mask x) const;

  const std::string& provenance() const { return provenance_; }
  const BranchingStructure* branching_structure() const {
    return branching_.get();
  }

  // Exhaustively computed local union / intersection / forest flags, cached
  // on first use (shared across copies; computation is guarded by a mutex in
  // line with the concurrent-reader guarantee).
  const LocalClassFlags& local_class() const;
  bool is_interval() const { return local_class().lup; }
  bool is_local_poset() const {
    return local_class().lup && local_class().lip;
  }
  bool is_local_forest() const {
    const LocalClassFlags& f = local_class();
    return f.lup && f.lip && f.lfp;
  }

  // Same ground labels and same family; provenance is ignored.
  bool operator==(const Greedoid& other) const {
    return ground_ == other.ground_ && family_ == other.family_;
  }

 private:
  struct ClassCache;

  Greedoid(GroundSet ground, std::vector<Mask> family, std::string provenance,
           std::shared_ptr<const BranchingStructure> branching);

  static Greedoid from_predicate(GroundSet ground,
                                 const std::function<bool(Mask)>& feasible,
                                 std::string provenance,
                                 std::shared_ptr<const BranchingStructure> b);

  GroundSet ground_;
  std::vector<Mask> family_;        // ascending mask order, contains 0
  std::vector<bool> feasible_;      // indexed by mask
  std::vector<bool> subfeasible_;   // indexed by mask
  std::vector<std::uint8_t> rank_table_;
  std::vector<Mask> bases_;         // ascending mask order
  std::string provenance_;
  std::shared_ptr<const BranchingStructure> branching_;
  std::shared_ptr<ClassCache> class_cache_;
};

// Scan for a pair X, Y in the family with |X| < |Y| that cannot be augmented.
// The family must already contain the empty set.
std::optional<std::pair<Mask, Mask>> find_exchange_violation(
    const std::vector<Mask>& family, const std::vector<bool>& feasible);
std::optional<std::pair<Mask, Mask>> find_exchange_violation(const Greedoid& g);

struct LfpViolation {
  Mask a = 0;
  int x = 0, y = 0, z = 0;
};

// Definition-level scans behind the class flags; each returns the first
// violating witness in enumeration order, or nothing.
std::optional<std::pair<Mask, Mask>> find_lup_violation(const Greedoid& g);
std::optional<std::pair<Mask, Mask>> find_lip_violation(const Greedoid& g);
std::optional<LfpViolation> find_lfp_violation(const Greedoid& g);

// Old-index of every element of `sub` inside `super`; kBadParams when some
// label is missing. Used to transport masks and weights across minors.
std::vector<int> index_map(const GroundSet& sub, const GroundSet& super);

}  // namespace greedoid

#endif  // GREEDOID_GREEDOID_HPP_
