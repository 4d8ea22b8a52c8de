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

#ifndef GREEDOID_INSTANCE_HPP_
#define GREEDOID_INSTANCE_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "greedoid/game.hpp"

namespace greedoid {

// Recursive construction descriptor mirroring the instance file schema.
// Kinds: explicit, uniform_matroid, graphic_matroid, branching, direct_sum,
// rooted_extension, minor.
struct GreedoidDesc {
  std::string kind;

  std::vector<std::string> elements;              // explicit
  std::vector<std::vector<std::string>> family;   // explicit

  int uniform_n = 0;  // uniform_matroid
  int uniform_k = 0;

  MixedGraph graph;  // graphic_matroid, branching

  std::shared_ptr<const GreedoidDesc> first;   // direct_sum
  std::shared_ptr<const GreedoidDesc> second;  // direct_sum
  std::shared_ptr<const GreedoidDesc> inner;   // rooted_extension, minor

  std::vector<std::string> extension_set;    // rooted_extension
  std::vector<std::string> extension_order;  // rooted_extension
  std::vector<std::string> deleted;          // minor
  std::vector<std::string> contracted;       // minor
};

struct ObjectiveDesc {
  std::string kind;       // table | ordered_table | linear | path_sum | bottleneck
  std::string direction;  // min | max
  // For the table kinds: subset keys "a,c" (sorted by element index) or
  // ordering keys (order-sensitive), values as rational strings.
  std::map<std::string, std::string> table;
};

// One instance file: a greedoid descriptor, optional named weight maps
// ("c", "d", "p", ...), and an optional objective descriptor. Rationals
// travel as "p/q" or integer strings; nothing in the I/O path is a float.
struct Instance {
  GreedoidDesc greedoid;
  std::map<std::string, std::map<std::string, Rational>> weights;
  std::optional<ObjectiveDesc> objective;
};

// Parses and fully validates (the greedoid is built, weight labels and
// objective keys are checked). Throws kParseError for malformed input and
// kValidationError / construction errors for semantic problems.
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);

// Canonical JSON with sorted keys and canonical subset spellings; parsing the
// output reproduces the instance exactly.
std::string serialize_instance(const Instance& inst);

Greedoid build_greedoid(const GreedoidDesc& desc);

// Weight map by name as a per-element vector; every element must be covered.
// A missing map yields `fallback` everywhere when provided, otherwise an
// error.
WeightVector instance_weights(const Instance& inst, const Greedoid& g,
                              const std::string& name,
                              std::optional<Rational> fallback = std::nullopt);

// The descriptor's objective with the direction overridden by the caller.
Objective build_objective(const Instance& inst, const Greedoid& g,
                          Direction direction);

bool operator==(const Instance& a, const Instance& b);

}  // namespace greedoid

#endif  // GREEDOID_INSTANCE_HPP_
