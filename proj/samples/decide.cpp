// Copyright 2026 The fsgraph Authors
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

// Decide connectivity of FS(X, Y) from structural certificates.

#include <iostream>

#include "fsgraph/fsgraph.hpp"

int main() {
  using namespace fsg;
  const std::pair<Graph, Graph> cases[] = {
      {lollipop_graph(4, 3), complete_graph(7)},
      {dynkin_d_graph(7), cycle_graph(7)},
      {star_graph(7), theta0_graph()},
      {complete_bipartite_graph(3, 7), cycle_graph(7)},
      {lollipop_graph(2, 5), complement(cycle_graph(7))},
  };
  for (const auto& [x, y] : cases) {
    const ConnectivityVerdict v = decide_connectivity(x, y);
    std::cout << verdict_to_json(v).dump() << '\n';
  }
}
