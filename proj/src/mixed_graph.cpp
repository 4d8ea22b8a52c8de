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

#include "greedoid/mixed_graph.hpp"

#include <queue>
#include <set>
#include <stdexcept>

#include "greedoid/errors.hpp"

namespace greedoid {

namespace {

// Minimal union-find over node indices.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  // Returns false when a and b were already connected.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

struct TreeWalk {
  bool valid = false;
  // parent_edge[v] = edge index that discovered node v (-1 for the root or
  // unreached nodes).
  std::vector<int> parent_edge;
  std::vector<int> parent_node;
};

// Breadth-first walk of `tree` from the root. Valid iff every edge of `tree`
// is used exactly once as a discovery edge (so the edge set is a tree hanging
// from the root) and every directed edge is traversed tail-to-head.
TreeWalk walk_tree(const MixedGraph& graph, int root, Mask tree) {
  TreeWalk walk;
  const int num_nodes = static_cast<int>(graph.nodes.size());
  walk.parent_edge.assign(num_nodes, -1);
  walk.parent_node.assign(num_nodes, -1);
  std::vector<bool> visited(num_nodes, false);
  std::vector<bool> edge_used(graph.edges.size(), false);

  visited[root] = true;
  std::queue<int> queue;
  queue.push(root);
  int used = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
      if (!contains(tree, static_cast<int>(e)) || edge_used[e]) continue;
      const Edge& edge = graph.edges[e];
      const int tail = graph.node_index(edge.tail);
      const int head = graph.node_index(edge.head);
      int other = -1;
      if (tail == v) {
        other = head;
      } else if (head == v) {
        if (edge.directed) return walk;  // traversed against the arrow
        other = tail;
      } else {
        continue;
      }
      if (visited[other]) return walk;  // cycle (covers loops and parallels)
      visited[other] = true;
      edge_used[e] = true;
      walk.parent_edge[other] = static_cast<int>(e);
      walk.parent_node[other] = v;
      ++used;
      queue.push(other);
    }
  }
  walk.valid = used == set_size(tree);
  return walk;
}

}  // namespace

int MixedGraph::node_index(const std::string& label) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] == label) return static_cast<int>(i);
  }
  return -1;
}

int MixedGraph::edge_index(const std::string& id) const {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

void MixedGraph::validate(bool require_root) const {
  std::set<std::string> seen_nodes(nodes.begin(), nodes.end());
  if (seen_nodes.size() != nodes.size()) {
    fail(Errc::kBadParams, "duplicate node label");
  }
  std::set<std::string> seen_edges;
  for (const Edge& e : edges) {
    if (!seen_edges.insert(e.id).second) {
      fail(Errc::kBadParams, "duplicate edge id '" + e.id + "'");
    }
    if (node_index(e.tail) < 0 || node_index(e.head) < 0) {
      fail(Errc::kBadParams, "edge '" + e.id + "' has an unknown endpoint");
    }
  }
  if (require_root && node_index(root) < 0) {
    fail(Errc::kBadParams, "unknown root node '" + root + "'");
  }
}

int MixedGraph::component_count(Mask kept_edges) const {
  UnionFind uf(static_cast<int>(nodes.size()));
  int components = static_cast<int>(nodes.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!contains(kept_edges, static_cast<int>(e))) continue;
    if (uf.unite(node_index(edges[e].tail), node_index(edges[e].head))) {
      --components;
    }
  }
  return components;
}

bool MixedGraph::connected() const {
  if (nodes.empty()) return true;
  return component_count(full_mask(static_cast<int>(edges.size()))) == 1;
}

bool is_branching_feasible(const MixedGraph& graph, int root, Mask subset) {
  return walk_tree(graph, root, subset).valid;
}

Mask branching_root_path(const MixedGraph& graph, int root, Mask tree,
                         int edge) {
  const TreeWalk walk = walk_tree(graph, root, tree);
  if (!walk.valid) {
    fail(Errc::kNotFeasible, "edge set is not a root-containing tree");
  }
  // The far endpoint of `edge` is the one discovered through it.
  int child = -1;
  for (std::size_t v = 0; v < walk.parent_edge.size(); ++v) {
    if (walk.parent_edge[v] == edge) child = static_cast<int>(v);
  }
  if (child < 0) fail(Errc::kBadParams, "edge is not part of the tree");
  Mask path = 0;
  while (walk.parent_edge[child] >= 0) {
    path = with(path, walk.parent_edge[child]);
    child = walk.parent_node[child];
  }
  return path;
}

int branching_unreachable_count(const MixedGraph& graph, int root, Mask tree,
                                int edge) {
  const TreeWalk full = walk_tree(graph, root, tree);
  if (!full.valid) {
    fail(Errc::kNotFeasible, "edge set is not a root-containing tree");
  }
  const TreeWalk cut = walk_tree(graph, root, without(tree, edge));
  int lost = 0;
  for (std::size_t v = 0; v < graph.nodes.size(); ++v) {
    const bool in_tree =
        static_cast<int>(v) == root || full.parent_edge[v] >= 0;
    const bool reachable =
        static_cast<int>(v) == root || cut.parent_edge[v] >= 0;
    if (in_tree && !reachable) ++lost;
  }
  return lost;
}

}  // namespace greedoid
