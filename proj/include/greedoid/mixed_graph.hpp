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

#ifndef GREEDOID_MIXED_GRAPH_HPP_
#define GREEDOID_MIXED_GRAPH_HPP_

#include <string>
#include <vector>

#include "greedoid/subset.hpp"

namespace greedoid {

struct Edge {
  std::string id;
  std::string tail;
  std::string head;
  bool directed = false;
};

// A mixed multigraph (parallel edges and loops allowed) with an optional
// designated root. Also used rootless for graphic matroids and strength.
struct MixedGraph {
  std::vector<std::string> nodes;
  std::vector<Edge> edges;
  std::string root;  // may be empty when no root is needed

  int node_index(const std::string& label) const;  // -1 if unknown
  int edge_index(const std::string& id) const;     // -1 if unknown

  // Checks unique node labels and edge ids, known endpoints, and (when
  // required) a known root. Throws kBadParams.
  void validate(bool require_root) const;

  // Components of the full node set under the kept edges, directions ignored.
  int component_count(Mask kept_edges) const;
  bool connected() const;
};

// True iff the edges of `subset` form a tree containing the root with every
// directed edge pointing away from it: the feasibility predicate of the
// branching construction.
bool is_branching_feasible(const MixedGraph& graph, int root, Mask subset);

// For a feasible tree and one of its edges, the edges of the root-to-leaf-side
// walk that ends with `edge`. The closed-form counterpart of the family-scan
// path computation; the two are asserted equal.
Mask branching_root_path(const MixedGraph& graph, int root, Mask tree,
                         int edge);

// Number of nodes touched by the tree that lose their root connection when
// `edge` is removed; the graph reading of a shadow value.
int branching_unreachable_count(const MixedGraph& graph, int root, Mask tree,
                                int edge);

}  // namespace greedoid

#endif  // GREEDOID_MIXED_GRAPH_HPP_
