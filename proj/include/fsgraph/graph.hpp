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

// Simple undirected graphs on at most 64 vertices, stored as one adjacency
// bitmask per vertex. Vertices are 0-indexed in this API; every textual form
// (JSON, DOT, CLI) is 1-indexed.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fsgraph/error.hpp"

namespace fsg {

inline constexpr int kMaxVertices = 64;

/// Subset of the vertices of a graph; bit v set iff vertex v is a member.
using VertexMask = std::uint64_t;

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

inline constexpr VertexMask low_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline std::vector<int> members(VertexMask mask) {
  std::vector<int> out;
  out.reserve(std::popcount(mask));
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

/// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    detail::require(n >= 0 && n <= kMaxVertices,
                    "graph order must lie in [0, 64], got " + std::to_string(n));
  }

  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
      detail::require(e.u != e.v, "loops are not allowed");
      detail::require(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n,
                      "edge endpoint out of range");
      detail::require(!has_edge(e.u, e.v), "multi-edges are not allowed");
      adj_[e.u] |= bit(e.v);
      adj_[e.v] |= bit(e.u);
    }
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from symmetric, loop-free adjacency masks.
  static Graph from_adjacency(std::vector<VertexMask> adj) {
    Graph g(static_cast<int>(adj.size()));
    for (int v = 0; v < g.n_; ++v) {
      detail::require((adj[v] & ~low_mask(g.n_)) == 0 && (adj[v] & bit(v)) == 0,
                      "adjacency mask out of range or has a loop");
      for (int w : members(adj[v])) {
        detail::require((adj[w] & bit(v)) != 0, "adjacency is not symmetric");
      }
    }
    g.adj_ = std::move(adj);
    return g;
  }

  int order() const { return n_; }
  VertexMask vertices() const { return low_mask(n_); }
  VertexMask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return (adj_[u] & bit(v)) != 0; }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (VertexMask m : adj_) twice += std::popcount(m);
    return twice / 2;
  }

  /// Edges in lexicographic order of (u, v), u < v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
      for (int v : members(adj_[u] & ~low_mask(u + 1))) out.push_back({u, v});
    }
    return out;
  }

  std::span<const VertexMask> adjacency() const { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexMask> adj_;
};

// ---------------------------------------------------------------------------
// Named families.

enum class Family {
  complete,
  path,
  cycle,
  star,
  complete_bipartite,
  lollipop,
  dynkin_d,
  theta0,
  edgeless,
};

/// n is the vertex count. `k` is the first part size for complete_bipartite
/// and the stick length for lollipop (with m = n - k the clique size).
struct FamilySpec {
  Family family = Family::complete;
  int n = 1;
  int k = 0;
};

inline Graph complete_graph(int n) {
  detail::require(n >= 1 && n <= kMaxVertices, "complete graph needs 1 <= n <= 64");
  std::vector<VertexMask> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = low_mask(n) & ~bit(v);
  return Graph::from_adjacency(std::move(adj));
}

inline Graph edgeless_graph(int n) {
  detail::require(n >= 1 && n <= kMaxVertices, "edgeless graph needs 1 <= n <= 64");
  return Graph(n);
}

inline Graph path_graph(int n) {
  detail::require(n >= 1 && n <= kMaxVertices, "path graph needs 1 <= n <= 64");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  detail::require(n >= 3 && n <= kMaxVertices, "cycle graph needs 3 <= n <= 64");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, n - 1});
  return Graph(n, e);
}

/// Star with centre n (vertex n-1 here) and leaves 1..n-1.
inline Graph star_graph(int n) {
  detail::require(n >= 1 && n <= kMaxVertices, "star graph needs 1 <= n <= 64");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, n - 1});
  return Graph(n, e);
}

/// K_{k, n-k} with parts {1..k} and {k+1..n}.
inline Graph complete_bipartite_graph(int k, int n) {
  detail::require(n >= 2 && n <= kMaxVertices && k >= 1 && k < n,
                  "complete bipartite graph needs 1 <= k < n <= 64");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    for (int j = k; j < n; ++j) e.push_back({i, j});
  }
  return Graph(n, e);
}

/// Path on 1..k+1 glued at k+1 to a clique on {k+1..k+m}.
inline Graph lollipop_graph(int k, int m) {
  detail::require(k >= 0 && m >= 1 && k + m <= kMaxVertices,
                  "lollipop needs k >= 0, m >= 1, k + m <= 64");
  const int n = k + m;
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.push_back({i, i + 1});
  for (int i = k; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return Graph(n, e);
}

/// Dynkin diagram D_n: path 1..n-1 plus the edge {n-2, n}.
inline Graph dynkin_d_graph(int n) {
  detail::require(n >= 3 && n <= kMaxVertices, "D_n needs 3 <= n <= 64");
  std::vector<Edge> e;
  for (int i = 0; i + 2 < n; ++i) e.push_back({i, i + 1});
  e.push_back({n - 3, n - 1});
  return Graph(n, e);
}

/// The sporadic theta graph: hubs 1 and 2 joined by the paths 1-3-2,
/// 1-4-5-2 and 1-6-7-2.
inline Graph theta0_graph() {
  return Graph(7, {{0, 2}, {1, 2}, {0, 3}, {3, 4}, {1, 4}, {0, 5}, {5, 6}, {1, 6}});
}

inline Graph build_named(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::complete: return complete_graph(spec.n);
    case Family::path: return path_graph(spec.n);
    case Family::cycle: return cycle_graph(spec.n);
    case Family::star: return star_graph(spec.n);
    case Family::complete_bipartite: return complete_bipartite_graph(spec.k, spec.n);
    case Family::lollipop:
      detail::require(spec.k >= 0 && spec.k < spec.n, "lollipop needs 0 <= k < n");
      return lollipop_graph(spec.k, spec.n - spec.k);
    case Family::dynkin_d: return dynkin_d_graph(spec.n);
    case Family::theta0:
      detail::require(spec.n == 7, "theta0 has exactly 7 vertices");
      return theta0_graph();
    case Family::edgeless: return edgeless_graph(spec.n);
  }
  throw InvalidArgument("unknown family");
}

// ---------------------------------------------------------------------------
// Derived graphs.

inline Graph complement(const Graph& g) {
  std::vector<VertexMask> adj(g.order());
  for (int v = 0; v < g.order(); ++v) adj[v] = g.vertices() & ~g.neighbors(v) & ~bit(v);
  return Graph::from_adjacency(std::move(adj));
}

/// Induced subgraph relabelled to 0..|S|-1 in increasing parent order.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;  // new vertex -> parent vertex
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexMask subset) {
  detail::require(subset != 0, "induced subgraph needs a nonempty vertex set");
  detail::require((subset & ~g.vertices()) == 0, "vertex subset out of range");
  InducedSubgraph out;
  out.to_parent = members(subset);
  const int k = static_cast<int>(out.to_parent.size());
  std::vector<VertexMask> adj(k, 0);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (g.has_edge(out.to_parent[a], out.to_parent[b])) {
        adj[a] |= bit(b);
        adj[b] |= bit(a);
      }
    }
  }
  out.graph = Graph::from_adjacency(std::move(adj));
  return out;
}

inline Graph delete_vertex(const Graph& g, int v) {
  return induced_subgraph(g, g.vertices() & ~bit(v)).graph;
}

/// Graph whose vertex label[v] carries the neighbourhood of v in g.
inline Graph relabel(const Graph& g, std::span<const int> label) {
  detail::require(static_cast<int>(label.size()) == g.order(), "relabel size mismatch");
  std::vector<VertexMask> adj(g.order(), 0);
  VertexMask seen = 0;
  for (int v = 0; v < g.order(); ++v) {
    detail::require(label[v] >= 0 && label[v] < g.order() && (seen & bit(label[v])) == 0,
                    "relabel is not a bijection");
    seen |= bit(label[v]);
  }
  for (const Edge& e : g.edges()) {
    adj[label[e.u]] |= bit(label[e.v]);
    adj[label[e.v]] |= bit(label[e.u]);
  }
  return Graph::from_adjacency(std::move(adj));
}

/// Disjoint union; vertices of b follow those of a.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  for (const Edge& f : b.edges()) e.push_back({f.u + a.order(), f.v + a.order()});
  return Graph(a.order() + b.order(), e);
}

// ---------------------------------------------------------------------------
// Structure.

/// Vertices reachable from `start` using only vertices in `allowed`.
inline VertexMask reach_within(const Graph& g, int start, VertexMask allowed) {
  VertexMask seen = bit(start);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (int v : members(frontier)) next |= g.neighbors(v);
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Connected components of g restricted to `allowed`, ordered by least vertex.
inline std::vector<VertexMask> components_within(const Graph& g, VertexMask allowed) {
  std::vector<VertexMask> out;
  VertexMask left = allowed;
  while (left != 0) {
    const VertexMask c = reach_within(g, std::countr_zero(left), allowed);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

inline std::vector<VertexMask> connected_components(const Graph& g) {
  return components_within(g, g.vertices());
}

inline bool is_connected(const Graph& g) {
  return g.order() <= 1 || reach_within(g, 0, g.vertices()) == g.vertices();
}

inline int min_degree(const Graph& g) {
  int d = g.order();
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

inline VertexMask cut_vertices(const Graph& g) {
  const std::size_t base = connected_components(g).size();
  VertexMask out = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) continue;
    if (components_within(g, g.vertices() & ~bit(v)).size() > base) out |= bit(v);
  }
  return out;
}

/// Whether {u, v} is an edge whose removal separates u from v.
inline bool is_bridge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) return false;
  VertexMask seen = bit(u), frontier = bit(u);
  while (frontier != 0) {
    VertexMask next = 0;
    for (int w : members(frontier)) next |= g.neighbors(w) & ~(w == u ? bit(v) : 0);
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return (seen & bit(v)) == 0;
}

/// Two-colouring with both sides nonempty, if one exists. Each component's
/// least vertex goes on the first side.
inline std::optional<std::pair<VertexMask, VertexMask>> bipartition(const Graph& g) {
  if (g.order() < 2) return std::nullopt;
  VertexMask side_a = 0, side_b = 0;
  for (VertexMask comp : connected_components(g)) {
    VertexMask a = bit(std::countr_zero(comp)), b = 0;
    VertexMask frontier = a;
    bool on_a = true;
    while (frontier != 0) {
      VertexMask next = 0;
      for (int v : members(frontier)) next |= g.neighbors(v);
      if ((next & (on_a ? a : b)) != 0) return std::nullopt;
      next &= ~(a | b);
      (on_a ? b : a) |= next;
      frontier = next;
      on_a = !on_a;
    }
    // Odd edges inside a side may close only through already-coloured vertices.
    for (int v : members(a)) {
      if ((g.neighbors(v) & a) != 0) return std::nullopt;
    }
    for (int v : members(b)) {
      if ((g.neighbors(v) & b) != 0) return std::nullopt;
    }
    side_a |= a;
    side_b |= b;
  }
  if (side_b == 0) {
    const int last = 63 - std::countl_zero(side_a);
    side_a &= ~bit(last);
    side_b |= bit(last);
  }
  return std::make_pair(side_a, side_b);
}

struct StructureReport {
  std::vector<VertexMask> components;
  bool is_connected = false;
  bool is_bipartite = false;
  std::optional<std::pair<VertexMask, VertexMask>> bipartition;
  VertexMask cut_vertices = 0;
  bool is_biconnected = false;
  int min_degree = 0;
  int max_degree = 0;
  bool is_forest = false;
  std::vector<int> tree_sizes;  // ascending; empty unless is_forest
  int component_size_gcd = 0;
};

inline StructureReport structure_report(const Graph& g) {
  StructureReport r;
  r.components = connected_components(g);
  r.is_connected = r.components.size() <= 1;
  r.bipartition = bipartition(g);
  r.is_bipartite = r.bipartition.has_value();
  r.cut_vertices = cut_vertices(g);
  r.is_biconnected = g.order() >= 2 && r.is_connected && r.cut_vertices == 0;
  r.min_degree = g.order() == 0 ? 0 : g.order();
  for (int v = 0; v < g.order(); ++v) {
    r.min_degree = std::min(r.min_degree, g.degree(v));
    r.max_degree = std::max(r.max_degree, g.degree(v));
  }
  r.is_forest = g.edge_count() + r.components.size() == static_cast<std::size_t>(g.order());
  for (VertexMask c : r.components) {
    const int size = std::popcount(c);
    r.component_size_gcd = std::gcd(r.component_size_gcd, size);
    if (r.is_forest) r.tree_sizes.push_back(size);
  }
  std::sort(r.tree_sizes.begin(), r.tree_sizes.end());
  return r;
}

inline int component_size_gcd(const Graph& g) {
  int d = 0;
  for (VertexMask c : connected_components(g)) d = std::gcd(d, std::popcount(c));
  return d;
}

// ---------------------------------------------------------------------------
// Hamiltonian paths.

namespace detail {

inline bool extend_hamiltonian(const Graph& g, std::vector<int>& path, VertexMask used) {
  if (used == g.vertices()) return true;
  const int last = path.back();
  const VertexMask left = g.vertices() & ~used;
  // Everything still unvisited must hang together with the current end.
  if ((reach_within(g, last, left | bit(last)) & left) != left) return false;
  for (int w : members(g.neighbors(last) & left)) {
    path.push_back(w);
    if (extend_hamiltonian(g, path, used | bit(w))) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace detail

/// Deterministic backtracking: start vertices and neighbours in increasing order.
inline std::optional<std::vector<int>> hamiltonian_path(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  if (!is_connected(g)) return std::nullopt;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> path{s};
    if (detail::extend_hamiltonian(g, path, bit(s))) return path;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Isomorphism.

namespace detail {

inline bool extend_isomorphism(const Graph& g, const Graph& h, std::span<const int> order,
                               std::size_t depth, std::vector<int>& map, VertexMask used) {
  if (depth == order.size()) return true;
  const int v = order[depth];
  for (int w = 0; w < h.order(); ++w) {
    if ((used & bit(w)) != 0 || h.degree(w) != g.degree(v)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) {
      const int u = order[i];
      ok = g.has_edge(u, v) == h.has_edge(map[u], w);
    }
    if (!ok) continue;
    map[v] = w;
    if (extend_isomorphism(g, h, order, depth + 1, map, used | bit(w))) return true;
  }
  map[v] = -1;
  return false;
}

}  // namespace detail

/// Bijection map with g.has_edge(a,b) == h.has_edge(map[a], map[b]).
inline std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  std::vector<int> dg, dh;
  for (int v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;
  // Visit vertices so that each one after the first has an assigned neighbour
  // whenever possible.
  std::vector<int> order;
  VertexMask placed = 0;
  while (placed != g.vertices()) {
    int best = -1;
    for (int v = 0; v < g.order(); ++v) {
      if ((placed & bit(v)) != 0) continue;
      if (best < 0) best = v;
      const int cv = std::popcount(g.neighbors(v) & placed);
      const int cb = std::popcount(g.neighbors(best) & placed);
      if (cv > cb || (cv == cb && g.degree(v) > g.degree(best))) best = v;
    }
    order.push_back(best);
    placed |= bit(best);
  }
  std::vector<int> map(g.order(), -1);
  if (!detail::extend_isomorphism(g, h, order, 0, map, 0)) return std::nullopt;
  return map;
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

/// Bit (j(j-1)/2 + i) set iff {i, j} is an edge, i < j. Needs n <= 11.
inline std::uint64_t edge_code(const Graph& g) {
  detail::require(g.order() <= 11, "edge code needs at most 11 vertices");
  std::uint64_t code = 0;
  for (const Edge& e : g.edges()) code |= std::uint64_t{1} << (e.v * (e.v - 1) / 2 + e.u);
  return code;
}

inline Graph from_edge_code(int n, std::uint64_t code) {
  detail::require(n >= 0 && n <= 11, "edge code needs at most 11 vertices");
  std::vector<Edge> e;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((code >> (j * (j - 1) / 2 + i)) & 1) e.push_back({i, j});
    }
  }
  return Graph(n, e);
}

/// Least edge code over relabellings that list vertices by descending degree.
/// Isomorphic graphs, and only those, share a canonical code.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  detail::require(n <= 11, "canonical code needs at most 11 vertices");
  std::vector<int> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  // Blocks of equal degree; permute within each block independently.
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g.degree(by_degree[j]) == g.degree(by_degree[i])) ++j;
    blocks.push_back({i, j});
    i = j;
  }
  std::vector<int> slot = by_degree;  // slot[position] = vertex
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> label(n);
  auto evaluate = [&] {
    for (int p = 0; p < n; ++p) label[slot[p]] = p;
    std::uint64_t code = 0;
    for (const Edge& e : g.edges()) {
      const int a = std::min(label[e.u], label[e.v]);
      const int b = std::max(label[e.u], label[e.v]);
      code |= std::uint64_t{1} << (b * (b - 1) / 2 + a);
    }
    best = std::min(best, code);
  };
  auto recurse = [&](auto&& self, std::size_t block) -> void {
    if (block == blocks.size()) {
      evaluate();
      return;
    }
    auto first = slot.begin() + blocks[block].first;
    auto last = slot.begin() + blocks[block].second;
    std::sort(first, last);
    do {
      self(self, block + 1);
    } while (std::next_permutation(first, last));
  };
  recurse(recurse, 0);
  return n <= 1 ? 0 : best;
}

/// One representative per isomorphism class on n vertices (n <= 7), sorted by
/// canonical code. Built by adding a vertex to every class on n-1 vertices.
inline std::vector<Graph> graphs_up_to_isomorphism(int n) {
  detail::require(n >= 1 && n <= 7, "isomorphism-class enumeration supports 1 <= n <= 7");
  std::vector<std::uint64_t> codes{0};
  for (int m = 2; m <= n; ++m) {
    std::unordered_set<std::uint64_t> next;
    for (std::uint64_t c : codes) {
      const Graph base = from_edge_code(m - 1, c);
      for (VertexMask nb = 0; nb < bit(m - 1); ++nb) {
        std::vector<VertexMask> adj(m, 0);
        for (int v = 0; v < m - 1; ++v) adj[v] = base.neighbors(v);
        for (int v : members(nb)) {
          adj[v] |= bit(m - 1);
          adj[m - 1] |= bit(v);
        }
        next.insert(canonical_code(Graph::from_adjacency(std::move(adj))));
      }
    }
    codes.assign(next.begin(), next.end());
    std::sort(codes.begin(), codes.end());
  }
  std::vector<Graph> out;
  for (std::uint64_t c : codes) out.push_back(from_edge_code(n, c));
  return out;
}

/// G(n, p) using only raw engine output, so the result is reproducible across
/// standard library implementations.
template <typename Engine>
Graph random_graph(int n, double p, Engine& rng) {
  std::vector<Edge> e;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const double u = static_cast<double>(static_cast<std::uint64_t>(rng()) >> 11) * 0x1.0p-53;
      if (u < p) e.push_back({i, j});
    }
  }
  return Graph(n, e);
}

/// Uniform random bijection of 0..n-1 (Fisher-Yates on raw engine output).
template <typename Engine>
std::vector<int> random_labelling(int n, Engine& rng) {
  std::vector<int> out(n);
  std::iota(out.begin(), out.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(static_cast<std::uint64_t>(rng()) % static_cast<std::uint64_t>(i + 1));
    std::swap(out[i], out[j]);
  }
  return out;
}

}  // namespace fsg
