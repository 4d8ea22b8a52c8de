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

#ifndef GREEDOID_FIXTURES_HPP_
#define GREEDOID_FIXTURES_HPP_

#include <string>
#include <vector>

#include "greedoid/instance.hpp"

namespace greedoid {

// The built-in instance corpus:
//   fig1               parallel-edge branching greedoid with the step-trap
//                      base table (greedy lands on the worse base)
//   fig2               four-node branching greedoid whose path sums witness
//                      order sensitivity of the greedy string conditions
//   lpg_counterexample local poset greedoid on which minimizing greedy fails
//                      for the path-sum objective
//   shadow_strict      local poset greedoid whose shadow up-hull is a proper
//                      subset of the rank polyhedron Q
//   k3                 graphic matroid of a triangle with unit weights
//   single             one feasible element
std::vector<std::string> fixture_names();

Instance fixture_instance(const std::string& name);  // kValidationError
Greedoid fixture_greedoid(const std::string& name);

}  // namespace greedoid

#endif  // GREEDOID_FIXTURES_HPP_
