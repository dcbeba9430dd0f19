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

#pragma once

#include <optional>
#include <vector>

#include "fsgraph/error.hpp"
#include "fsgraph/graph.hpp"

namespace fsg {

/// Every Hamiltonian path of g as a vertex sequence; a path and its reversal
/// are both listed.
inline std::vector<std::vector<int>> all_hamiltonian_paths(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  auto extend = [&](auto&& self, VertexMask used) -> void {
    if (used == g.vertices()) {
      out.push_back(path);
      return;
    }
    for (int w : members(g.neighbors(path.back()) & ~used)) {
      path.push_back(w);
      self(self, used | bit(w));
      path.pop_back();
    }
  };
  for (int s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    extend(extend, bit(s));
  }
  return out;
}

/// A Hamiltonian path of g in which `block` occurs as a consecutive run, in
/// the given order.
inline std::optional<std::vector<int>> hamiltonian_path_through_block(
    const Graph& g, const std::vector<int>& block) {
  if (block.empty()) return hamiltonian_path(g);
  VertexMask block_mask = 0;
  for (int v : block) block_mask |= bit(v);
  for (std::size_t i = 0; i + 1 < block.size(); ++i) {
    if (!g.has_edge(block[i], block[i + 1])) return std::nullopt;
  }
  const VertexMask entry_forbidden = block_mask & ~bit(block.front());
  std::vector<int> path;
  auto append_vertex = [&](int v, VertexMask used) -> VertexMask {
    if (v == block.front()) {
      path.insert(path.end(), block.begin(), block.end());
      return used | block_mask;
    }
    path.push_back(v);
    return used | bit(v);
  };
  auto extend = [&](auto&& self, VertexMask used) -> bool {
    if (used == g.vertices()) return true;
    const std::size_t mark = path.size();
    for (int w : members(g.neighbors(path.back()) & ~used & ~entry_forbidden)) {
      const VertexMask next = append_vertex(w, used);
      if (self(self, next)) return true;
      path.resize(mark);
    }
    return false;
  };
  for (int s = 0; s < g.order(); ++s) {
    if ((entry_forbidden & bit(s)) != 0) continue;
    path.clear();
    const VertexMask used = append_vertex(s, 0);
    if (extend(extend, used)) return path;
  }
  return std::nullopt;
}

struct ProlongationWitness {
  std::vector<int> embedding;         // vertex of X -> vertex of X_tilde
  std::vector<int> x_path;            // Hamiltonian path of the embedded copy
  std::vector<int> hamiltonian_path;  // of X_tilde, containing x_path as a run
};

struct ProlongationOptions {
  int max_order = 12;
};

/// Decides whether x_tilde contains a copy of x together with a Hamiltonian
/// path that runs through a Hamiltonian path of that copy.
inline std::optional<ProlongationWitness> is_prolongation(const Graph& x_tilde, const Graph& x,
                                                          ProlongationOptions options = {}) {
  detail::require(x.order() >= 1, "X must have at least one vertex");
  detail::require(x_tilde.order() >= x.order(), "X_tilde must have at least as many vertices as X");
  if (x_tilde.order() > options.max_order) {
    throw ResourceLimit("prolongation search is limited to " +
                        std::to_string(options.max_order) + " vertices");
  }
  const auto x_paths = all_hamiltonian_paths(x);
  detail::require(!x_paths.empty(), "X has no Hamiltonian path");

  std::vector<int> embedding(x.order(), -1);
  std::optional<ProlongationWitness> found;
  for (const auto& q : x_paths) {
    // Map q[0], q[1], ... in order; consecutive images are adjacent because
    // every edge of X must land on an edge of X_tilde.
    auto place = [&](auto&& self, std::size_t k, VertexMask used) -> bool {
      if (k == q.size()) {
        std::vector<int> block;
        for (int v : q) block.push_back(embedding[v]);
        if (auto hp = hamiltonian_path_through_block(x_tilde, block)) {
          found = ProlongationWitness{embedding, block, *hp};
          return true;
        }
        return false;
      }
      const int v = q[k];
      const VertexMask candidates =
          k == 0 ? x_tilde.vertices() : x_tilde.neighbors(embedding[q[k - 1]]);
      for (int w : members(candidates & ~used)) {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
          if (x.has_edge(q[i], v)) ok = x_tilde.has_edge(embedding[q[i]], w);
        }
        if (!ok) continue;
        embedding[v] = w;
        if (self(self, k + 1, used | bit(w))) return true;
      }
      embedding[v] = -1;
      return false;
    };
    if (place(place, 0, 0)) return found;
  }
  return std::nullopt;
}

}  // namespace fsg
