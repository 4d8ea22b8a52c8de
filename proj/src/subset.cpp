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

#include "greedoid/subset.hpp"

namespace greedoid {

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  out.reserve(set_size(m));
  while (m != 0) {
    const int i = lowest_element(m);
    out.push_back(i);
    m = without(m, i);
  }
  return out;
}

bool lex_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    const int la = lowest_element(a);
    const int lb = lowest_element(b);
    if (la != lb) return la < lb;
    a = without(a, la);
    b = without(b, lb);
  }
  return a == 0 && b != 0;
}

}  // namespace greedoid
