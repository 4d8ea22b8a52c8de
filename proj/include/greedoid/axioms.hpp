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

#ifndef GREEDOID_AXIOMS_HPP_
#define GREEDOID_AXIOMS_HPP_

#include <optional>
#include <vector>

#include "greedoid/greedoid.hpp"

namespace greedoid {

struct ExchangeWitness {
  Mask x = 0, y = 0;
};

struct PairWitness {
  Mask a = 0, b = 0;
};

struct StrongExchangeWitness {
  Mask a = 0, b = 0;
  int x = 0;
};

// Exhaustive classification over the materialized family. Every property is
// computed independently (no short-circuiting), a witness is present exactly
// when the matching flag is false, and each witness is re-verified against
// the raw definition before it is returned.
struct ClassReport {
  bool is_greedoid = false;
  bool has_lup = false;
  bool has_lip = false;
  bool has_lfp = false;
  bool has_strong_exchange = false;
  std::optional<ExchangeWitness> exchange_witness;
  std::optional<PairWitness> lup_witness;
  std::optional<PairWitness> lip_witness;
  std::optional<LfpViolation> lfp_witness;
  std::optional<StrongExchangeWitness> strong_exchange_witness;
};

ClassReport classify(const Greedoid& g);

struct StrongExchangeResult {
  bool ok = false;
  std::optional<StrongExchangeWitness> witness;
};

// Every (A, B, x) with A ⊆ B, A and A+x feasible, B a base, x outside B must
// admit a y in B−A with B−y+x a base and A+y feasible.
StrongExchangeResult check_strong_exchange(const Greedoid& g);

struct SupermodularityResult {
  bool ok = false;
  std::optional<PairWitness> witness;
};

// r(A)+r(B) <= r(A∪B)+r(A∩B) for every pair with subfeasible union. Runs on
// any greedoid; quadratic in 2^n, so intended for small instances.
SupermodularityResult check_supermodularity(const Greedoid& g);

struct PathUniquenessWitness {
  Mask path = 0;
  // Two distinct feasible orderings when uniqueness fails; otherwise the
  // unique ordering together with the offending non-path prefix.
  std::vector<int> first_ordering;
  std::vector<int> second_ordering;
  std::optional<Mask> non_path_prefix;
};

struct PathUniquenessResult {
  bool ok = false;
  std::optional<PathUniquenessWitness> witness;
};

// Checks that every path has exactly one feasible ordering and that every
// prefix of that ordering is itself a path. Requires a local poset greedoid
// (throws kNotLocalPoset); the outcome is asserted to agree with the local
// forest flag.
PathUniquenessResult check_path_uniqueness(const Greedoid& g);

}  // namespace greedoid

#endif  // GREEDOID_AXIOMS_HPP_
