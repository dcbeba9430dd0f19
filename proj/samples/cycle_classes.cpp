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

// FS(Cycle_n, Y) splits each toric class of complement(Y) into nu pieces,
// and rotating the word walks through them.

#include <iostream>

#include "fsgraph/fsgraph.hpp"

int main() {
  using namespace fsg;
  // complement(Y) is the tree 1-2, 2-3, 3-4, 3-5.
  const Graph y = complement(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}));
  const CycleStructure s = cycle_fs_structure(y);
  std::cout << "toric classes " << s.toric_count << ", nu " << s.nu << ", components " << s.component_count
            << '\n';

  const FSInstance inst(cycle_graph(5), y);
  const ComponentLabelling lab = label_components(inst);
  Permutation sigma = Permutation::identity(5);
  for (int k = 0; k < 5; ++k) {
    std::cout << "  " << to_string(sigma) << " lies in component " << lab.component(sigma) << '\n';
    sigma = cyclic_shift(sigma);
  }
}
