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

#include "greedoid/instance.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace greedoid {

namespace {

using nlohmann::json;

constexpr const char* kFormatTag = "greedoid-instance/1";

[[noreturn]] void parse_fail(const std::string& message) {
  fail(Errc::kParseError, message);
}

const json& expect(const json& node, const char* key) {
  auto it = node.find(key);
  if (it == node.end()) {
    parse_fail(std::string("missing key '") + key + "'");
  }
  return *it;
}

std::string expect_string(const json& node, const char* key) {
  const json& value = expect(node, key);
  if (!value.is_string()) {
    parse_fail(std::string("key '") + key + "' must be a string");
  }
  return value.get<std::string>();
}

std::vector<std::string> string_list(const json& node, const char* key) {
  const json& value = expect(node, key);
  if (!value.is_array()) {
    parse_fail(std::string("key '") + key + "' must be an array");
  }
  std::vector<std::string> out;
  for (const json& item : value) {
    if (!item.is_string()) {
      parse_fail(std::string("entries of '") + key + "' must be strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream stream(csv);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

MixedGraph decode_graph(const json& node, bool with_root) {
  MixedGraph graph;
  graph.nodes = string_list(node, "nodes");
  if (with_root) graph.root = expect_string(node, "root");
  const json& edges = expect(node, "edges");
  if (!edges.is_array()) parse_fail("'edges' must be an array");
  for (const json& e : edges) {
    Edge edge;
    edge.id = expect_string(e, "id");
    edge.tail = expect_string(e, "tail");
    edge.head = expect_string(e, "head");
    if (e.contains("directed")) {
      if (!e["directed"].is_boolean()) parse_fail("'directed' must be a bool");
      edge.directed = e["directed"].get<bool>();
    }
    graph.edges.push_back(std::move(edge));
  }
  return graph;
}

GreedoidDesc decode_greedoid(const json& node);

std::shared_ptr<const GreedoidDesc> decode_child(const json& node,
                                                 const char* key) {
  return std::make_shared<const GreedoidDesc>(decode_greedoid(expect(node, key)));
}

GreedoidDesc decode_greedoid(const json& node) {
  if (!node.is_object()) parse_fail("greedoid descriptor must be an object");
  GreedoidDesc desc;
  desc.kind = expect_string(node, "kind");
  if (desc.kind == "explicit") {
    desc.elements = string_list(node, "elements");
    for (const std::string& set : string_list(node, "family")) {
      desc.family.push_back(split_csv(set));
    }
  } else if (desc.kind == "uniform_matroid") {
    const json& n = expect(node, "n");
    const json& k = expect(node, "k");
    if (!n.is_number_integer() || !k.is_number_integer()) {
      parse_fail("'n' and 'k' must be integers");
    }
    desc.uniform_n = n.get<int>();
    desc.uniform_k = k.get<int>();
  } else if (desc.kind == "graphic_matroid") {
    desc.graph = decode_graph(expect(node, "graph"), /*with_root=*/false);
  } else if (desc.kind == "branching") {
    desc.graph = decode_graph(expect(node, "graph"), /*with_root=*/true);
  } else if (desc.kind == "direct_sum") {
    desc.first = decode_child(node, "first");
    desc.second = decode_child(node, "second");
  } else if (desc.kind == "rooted_extension") {
    desc.inner = decode_child(node, "base");
    desc.extension_set = string_list(node, "set");
    desc.extension_order = string_list(node, "ordering");
  } else if (desc.kind == "minor") {
    desc.inner = decode_child(node, "base");
    desc.deleted = string_list(node, "delete");
    desc.contracted = string_list(node, "contract");
  } else {
    parse_fail("unknown greedoid kind '" + desc.kind + "'");
  }
  return desc;
}

json encode_graph(const MixedGraph& graph, bool with_root) {
  json node;
  node["nodes"] = graph.nodes;
  if (with_root) node["root"] = graph.root;
  json edges = json::array();
  for (const Edge& e : graph.edges) {
    edges.push_back(
        {{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"directed", e.directed}});
  }
  node["edges"] = std::move(edges);
  return node;
}

json encode_greedoid(const GreedoidDesc& desc) {
  json node;
  node["kind"] = desc.kind;
  if (desc.kind == "explicit") {
    node["elements"] = desc.elements;
    json family = json::array();
    for (const std::vector<std::string>& set : desc.family) {
      std::string csv;
      for (const std::string& label : set) {
        if (!csv.empty()) csv += ',';
        csv += label;
      }
      family.push_back(csv);
    }
    node["family"] = std::move(family);
  } else if (desc.kind == "uniform_matroid") {
    node["n"] = desc.uniform_n;
    node["k"] = desc.uniform_k;
  } else if (desc.kind == "graphic_matroid") {
    node["graph"] = encode_graph(desc.graph, /*with_root=*/false);
  } else if (desc.kind == "branching") {
    node["graph"] = encode_graph(desc.graph, /*with_root=*/true);
  } else if (desc.kind == "direct_sum") {
    node["first"] = encode_greedoid(*desc.first);
    node["second"] = encode_greedoid(*desc.second);
  } else if (desc.kind == "rooted_extension") {
    node["base"] = encode_greedoid(*desc.inner);
    node["set"] = desc.extension_set;
    node["ordering"] = desc.extension_order;
  } else if (desc.kind == "minor") {
    node["base"] = encode_greedoid(*desc.inner);
    node["delete"] = desc.deleted;
    node["contract"] = desc.contracted;
  }
  return node;
}

// Canonical subset key: member labels sorted by element index.
std::string canonical_subset_key(const GroundSet& ground, Mask m) {
  return ground.format_subset(m);
}

void validate_semantics(const Instance& inst) {
  const Greedoid g = build_greedoid(inst.greedoid);
  for (const auto& [name, map] : inst.weights) {
    for (const auto& [label, value] : map) {
      if (g.ground().index_of(label) < 0) {
        fail(Errc::kValidationError, "weight map '" + name +
                                         "' names unknown element '" + label +
                                         "'");
      }
    }
  }
  if (inst.objective) {
    const std::string& kind = inst.objective->kind;
    if (kind == "table" || kind == "ordered_table") {
      build_objective(inst, g,
                      inst.objective->direction == "min" ? Direction::kMin
                                                         : Direction::kMax);
    } else if (kind != "linear" && kind != "path_sum" && kind != "bottleneck") {
      fail(Errc::kValidationError, "unknown objective kind '" + kind + "'");
    }
    if (inst.objective->direction != "min" &&
        inst.objective->direction != "max") {
      fail(Errc::kValidationError, "objective direction must be min or max");
    }
  }
}

}  // namespace

Instance parse_instance_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
  if (!root.is_object()) parse_fail("instance must be a JSON object");
  if (expect_string(root, "format") != kFormatTag) {
    parse_fail(std::string("unsupported format, expected '") + kFormatTag +
               "'");
  }

  Instance inst;
  inst.greedoid = decode_greedoid(expect(root, "greedoid"));
  if (root.contains("weights")) {
    const json& weights = root["weights"];
    if (!weights.is_object()) parse_fail("'weights' must be an object");
    for (const auto& [name, map] : weights.items()) {
      if (!map.is_object()) parse_fail("weight maps must be objects");
      for (const auto& [label, value] : map.items()) {
        if (!value.is_string()) {
          parse_fail("weight values must be rational strings");
        }
        const auto parsed = parse_rational(value.get<std::string>());
        if (!parsed) {
          parse_fail("bad rational '" + value.get<std::string>() + "'");
        }
        inst.weights[name][label] = *parsed;
      }
    }
  }
  if (root.contains("objective")) {
    const json& objective = root["objective"];
    ObjectiveDesc desc;
    desc.kind = expect_string(objective, "kind");
    desc.direction = expect_string(objective, "direction");
    if (objective.contains("table")) {
      const json& table = objective["table"];
      if (!table.is_object()) parse_fail("'table' must be an object");
      for (const auto& [key, value] : table.items()) {
        if (!value.is_string()) {
          parse_fail("table values must be rational strings");
        }
        desc.table[key] = value.get<std::string>();
      }
    }
    inst.objective = std::move(desc);
  }

  validate_semantics(inst);
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream file(path);
  if (!file) fail(Errc::kParseError, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_instance_text(buffer.str());
}

std::string serialize_instance(const Instance& inst) {
  json root;
  root["format"] = kFormatTag;
  root["greedoid"] = encode_greedoid(inst.greedoid);
  if (!inst.weights.empty()) {
    json weights;
    for (const auto& [name, map] : inst.weights) {
      json entry;
      for (const auto& [label, value] : map) {
        entry[label] = format_rational(value);
      }
      weights[name] = std::move(entry);
    }
    root["weights"] = std::move(weights);
  }
  if (inst.objective) {
    json objective;
    objective["kind"] = inst.objective->kind;
    objective["direction"] = inst.objective->direction;
    if (!inst.objective->table.empty()) {
      json table;
      for (const auto& [key, value] : inst.objective->table) {
        table[key] = value;
      }
      objective["table"] = std::move(table);
    }
    root["objective"] = std::move(objective);
  }
  return root.dump(2) + "\n";
}

Greedoid build_greedoid(const GreedoidDesc& desc) {
  if (desc.kind == "explicit") {
    GroundSet ground(desc.elements);
    std::vector<Mask> family;
    for (const std::vector<std::string>& set : desc.family) {
      Mask m = 0;
      for (const std::string& label : set) {
        const int i = ground.index_of(label);
        if (i < 0) {
          fail(Errc::kValidationError,
               "family names unknown element '" + label + "'");
        }
        m = with(m, i);
      }
      family.push_back(m);
    }
    return Greedoid::from_explicit(std::move(ground), std::move(family));
  }
  if (desc.kind == "uniform_matroid") {
    return Greedoid::uniform_matroid(desc.uniform_n, desc.uniform_k);
  }
  if (desc.kind == "graphic_matroid") {
    return Greedoid::graphic_matroid(desc.graph);
  }
  if (desc.kind == "branching") {
    return Greedoid::branching(desc.graph);
  }
  if (desc.kind == "direct_sum") {
    return Greedoid::direct_sum(build_greedoid(*desc.first),
                                build_greedoid(*desc.second));
  }
  if (desc.kind == "rooted_extension") {
    const Greedoid base = build_greedoid(*desc.inner);
    Mask set = 0;
    for (const std::string& label : desc.extension_set) {
      const int i = base.ground().index_of(label);
      if (i < 0) {
        fail(Errc::kValidationError, "unknown element '" + label + "'");
      }
      set = with(set, i);
    }
    std::vector<int> ordering;
    for (const std::string& label : desc.extension_order) {
      const int i = base.ground().index_of(label);
      if (i < 0) {
        fail(Errc::kValidationError, "unknown element '" + label + "'");
      }
      ordering.push_back(i);
    }
    return Greedoid::rooted_extension(base, set, ordering);
  }
  if (desc.kind == "minor") {
    const Greedoid base = build_greedoid(*desc.inner);
    Mask deleted = 0, contracted = 0;
    for (const std::string& label : desc.deleted) {
      const int i = base.ground().index_of(label);
      if (i < 0) {
        fail(Errc::kValidationError, "unknown element '" + label + "'");
      }
      deleted = with(deleted, i);
    }
    for (const std::string& label : desc.contracted) {
      const int i = base.ground().index_of(label);
      if (i < 0) {
        fail(Errc::kValidationError, "unknown element '" + label + "'");
      }
      contracted = with(contracted, i);
    }
    return base.minor(deleted, contracted);
  }
  fail(Errc::kValidationError, "unknown greedoid kind '" + desc.kind + "'");
}

WeightVector instance_weights(const Instance& inst, const Greedoid& g,
                              const std::string& name,
                              std::optional<Rational> fallback) {
  auto it = inst.weights.find(name);
  if (it == inst.weights.end()) {
    if (fallback) return WeightVector(g.n(), *fallback);
    fail(Errc::kValidationError, "instance has no weight map '" + name + "'");
  }
  WeightVector out(g.n(), 0);
  std::vector<bool> seen(g.n(), false);
  for (const auto& [label, value] : it->second) {
    const int i = g.ground().index_of(label);
    if (i < 0) {
      fail(Errc::kValidationError, "weight map '" + name +
                                       "' names unknown element '" + label +
                                       "'");
    }
    out[i] = value;
    seen[i] = true;
  }
  for (int i = 0; i < g.n(); ++i) {
    if (!seen[i]) {
      if (!fallback) {
        fail(Errc::kValidationError, "weight map '" + name +
                                         "' misses element '" +
                                         g.ground().label(i) + "'");
      }
      out[i] = *fallback;
    }
  }
  return out;
}

Objective build_objective(const Instance& inst, const Greedoid& g,
                          Direction direction) {
  if (!inst.objective) {
    fail(Errc::kValidationError, "instance has no objective descriptor");
  }
  const ObjectiveDesc& desc = *inst.objective;
  if (desc.kind == "table") {
    std::map<Mask, Rational> table;
    for (const auto& [key, value] : desc.table) {
      const Mask m = g.ground().parse_subset(key);
      if (!g.is_feasible(m)) {
        fail(Errc::kValidationError,
             "objective table names the non-feasible set (" + key + ")");
      }
      const auto parsed = parse_rational(value);
      if (!parsed) fail(Errc::kValidationError, "bad rational '" + value + "'");
      table[m] = *parsed;
    }
    for (Mask m : g.family()) {
      if (!table.count(m)) {
        fail(Errc::kValidationError,
             "objective table misses the feasible set (" +
                 canonical_subset_key(g.ground(), m) + ")");
      }
    }
    return Objective::from_set_table(std::move(table), direction);
  }
  if (desc.kind == "ordered_table") {
    std::map<std::vector<int>, Rational> table;
    for (const auto& [key, value] : desc.table) {
      std::vector<int> seq;
      for (const std::string& label : split_csv(key)) {
        const int i = g.ground().index_of(label);
        if (i < 0) {
          fail(Errc::kValidationError, "unknown element '" + label + "'");
        }
        seq.push_back(i);
      }
      const auto parsed = parse_rational(value);
      if (!parsed) fail(Errc::kValidationError, "bad rational '" + value + "'");
      table[seq] = *parsed;
    }
    for (const std::vector<int>& seq : all_feasible_orderings(g)) {
      if (!table.count(seq)) {
        fail(Errc::kValidationError,
             "objective table misses the feasible ordering (" +
                 g.ground().format_sequence(seq) + ")");
      }
    }
    return Objective::from_ordered_table(std::move(table), direction);
  }
  if (desc.kind == "linear") {
    return Objective::linear(instance_weights(inst, g, "c"), direction);
  }
  if (desc.kind == "path_sum") {
    return Objective::path_sum(instance_weights(inst, g, "c"), direction);
  }
  if (desc.kind == "bottleneck") {
    return Objective::bottleneck(instance_weights(inst, g, "c"), direction);
  }
  fail(Errc::kValidationError, "unknown objective kind '" + desc.kind + "'");
}

bool operator==(const Instance& a, const Instance& b) {
  return serialize_instance(a) == serialize_instance(b);
}

}  // namespace greedoid
