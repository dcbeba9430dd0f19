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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fsgraph/graph.hpp"
#include "fsgraph/prolongation.hpp"

namespace fsg {
namespace {

TEST(GraphTest, RejectsLoopsMultiEdgesAndRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), InvalidArgument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidArgument);
  EXPECT_THROW(Graph(65), InvalidArgument);
}

TEST(GraphTest, EdgesAreLexicographic) {
  const Graph g(4, {{2, 3}, {0, 2}, {1, 0}});
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {2, 3}};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(GraphTest, NamedFamilies) {
  EXPECT_EQ(complete_graph(5).edge_count(), 10u);
  EXPECT_EQ(path_graph(5).edge_count(), 4u);
  EXPECT_EQ(cycle_graph(5).edge_count(), 5u);
  const Graph star = star_graph(5);
  EXPECT_EQ(star.degree(4), 4);
  EXPECT_EQ(complete_bipartite_graph(2, 5).edge_count(), 6u);

  const Graph lol = lollipop_graph(3, 3);
  EXPECT_EQ(lol.order(), 6);
  EXPECT_EQ(lol.edge_count(), 6u);
  EXPECT_TRUE(lol.has_edge(2, 3));
  EXPECT_TRUE(lol.has_edge(3, 5));
  EXPECT_FALSE(lol.has_edge(2, 4));

  const Graph d = dynkin_d_graph(6);
  EXPECT_EQ(d.edge_count(), 5u);
  EXPECT_TRUE(d.has_edge(3, 5));
  EXPECT_FALSE(d.has_edge(4, 5));
  EXPECT_TRUE(is_isomorphic(dynkin_d_graph(4), star_graph(4)));

  const Graph theta = theta0_graph();
  EXPECT_EQ(theta.order(), 7);
  EXPECT_EQ(theta.edge_count(), 8u);
  const StructureReport r = structure_report(theta);
  EXPECT_TRUE(r.is_biconnected);
  // Hub-to-hub paths of lengths 2 and 3 close an odd cycle.
  EXPECT_FALSE(r.is_bipartite);
}

TEST(GraphTest, ComplementIsInvolution) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(7, 0.4, rng);
    const Graph c = complement(g);
    EXPECT_EQ(g.edge_count() + c.edge_count(), 21u);
    EXPECT_EQ(complement(c), g);
  }
}

TEST(GraphTest, StructureOfSmallGraphs) {
  const StructureReport p = structure_report(path_graph(4));
  EXPECT_TRUE(p.is_connected);
  EXPECT_TRUE(p.is_forest);
  EXPECT_EQ(p.cut_vertices, bit(1) | bit(2));
  EXPECT_FALSE(p.is_biconnected);

  const StructureReport c = structure_report(cycle_graph(5));
  EXPECT_TRUE(c.is_biconnected);
  EXPECT_FALSE(c.is_bipartite);
  EXPECT_EQ(c.min_degree, 2);

  const Graph forest = disjoint_union(path_graph(2), path_graph(3));
  const StructureReport f = structure_report(forest);
  EXPECT_FALSE(f.is_connected);
  EXPECT_TRUE(f.is_forest);
  EXPECT_EQ(f.tree_sizes, (std::vector<int>{2, 3}));
  EXPECT_EQ(f.component_size_gcd, 1);
  EXPECT_EQ(component_size_gcd(disjoint_union(path_graph(2), path_graph(4))), 2);
}

TEST(GraphTest, CutVerticesMatchDefinition) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(7, 0.35, rng);
    const std::size_t base = connected_components(g).size();
    for (int v = 0; v < 7; ++v) {
      const Graph h = delete_vertex(g, v);
      // Deleting v removes it from the count; isolated v loses a component.
      const std::size_t after = connected_components(h).size() + (g.degree(v) == 0 ? 1 : 0);
      EXPECT_EQ((cut_vertices(g) & bit(v)) != 0, after > base);
    }
  }
}

TEST(GraphTest, BipartitionIsProper) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(6, 0.3, rng);
    auto sides = bipartition(g);
    // Oracle: odd cycles exist iff some 2-colouring by brute force fails.
    bool colourable = false;
    for (VertexMask a = 0; a < bit(6) && !colourable; ++a) {
      bool ok = true;
      for (const Edge& e : g.edges()) ok = ok && (((a >> e.u) ^ (a >> e.v)) & 1);
      colourable = ok;
    }
    ASSERT_EQ(sides.has_value(), colourable);
    if (sides) {
      EXPECT_EQ(sides->first | sides->second, g.vertices());
      EXPECT_EQ(sides->first & sides->second, 0u);
      EXPECT_NE(sides->second, 0u);
      for (const Edge& e : g.edges()) EXPECT_NE((sides->first >> e.u) & 1, (sides->first >> e.v) & 1);
    }
  }
}

TEST(GraphTest, HamiltonianPathAgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = random_graph(6, 0.4, rng);
    std::vector<int> order(6);
    std::iota(order.begin(), order.end(), 0);
    bool exists = false;
    do {
      bool ok = true;
      for (int i = 0; i + 1 < 6 && ok; ++i) ok = g.has_edge(order[i], order[i + 1]);
      exists = exists || ok;
    } while (!exists && std::next_permutation(order.begin(), order.end()));
    const auto path = hamiltonian_path(g);
    ASSERT_EQ(path.has_value(), exists);
    if (path) {
      for (int i = 0; i + 1 < 6; ++i) EXPECT_TRUE(g.has_edge((*path)[i], (*path)[i + 1]));
    }
  }
}

TEST(GraphTest, IsomorphismUnderRandomRelabelling) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(7, 0.5, rng);
    const Graph h = relabel(g, random_labelling(7, rng));
    const auto map = find_isomorphism(g, h);
    ASSERT_TRUE(map.has_value());
    for (int a = 0; a < 7; ++a) {
      for (int b = a + 1; b < 7; ++b) EXPECT_EQ(g.has_edge(a, b), h.has_edge((*map)[a], (*map)[b]));
    }
    EXPECT_EQ(canonical_code(g), canonical_code(h));
  }
  EXPECT_FALSE(is_isomorphic(path_graph(4), star_graph(4)));
}

TEST(GraphTest, IsomorphismClassCountsMatchKnownSequence) {
  // Unlabelled graphs on n vertices: 1, 2, 4, 11, 34, 156, 1044.
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(graphs_up_to_isomorphism(n).size(), expected[n - 1]) << n;
}

TEST(GraphTest, EdgeCodeRoundTrip) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(8, 0.5, rng);
    EXPECT_EQ(from_edge_code(8, edge_code(g)), g);
  }
}

TEST(GraphTest, BridgesMatchEdgeDeletion) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(7, 0.3, rng);
    const std::size_t base = connected_components(g).size();
    for (const Edge& e : g.edges()) {
      std::vector<Edge> rest;
      for (const Edge& f : g.edges()) {
        if (!(f == e)) rest.push_back(f);
      }
      EXPECT_EQ(is_bridge(g, e.u, e.v), connected_components(Graph(7, rest)).size() > base);
    }
  }
  EXPECT_FALSE(is_bridge(path_graph(3), 0, 2));
}

TEST(GraphTest, InducedSubgraphKeepsParentOrder) {
  const Graph g = cycle_graph(6);
  const InducedSubgraph s = induced_subgraph(g, bit(0) | bit(1) | bit(5));
  EXPECT_EQ(s.to_parent, (std::vector<int>{0, 1, 5}));
  EXPECT_TRUE(s.graph.has_edge(0, 1));
  EXPECT_TRUE(s.graph.has_edge(0, 2));
  EXPECT_FALSE(s.graph.has_edge(1, 2));
}

TEST(ProlongationTest, LollipopsProlongTheTriangle) {
  for (int n = 3; n <= 8; ++n) {
    const auto w = is_prolongation(lollipop_graph(n - 3, 3), complete_graph(3));
    ASSERT_TRUE(w.has_value()) << n;
    const Graph xt = lollipop_graph(n - 3, 3);
    for (std::size_t i = 0; i + 1 < w->hamiltonian_path.size(); ++i) {
      EXPECT_TRUE(xt.has_edge(w->hamiltonian_path[i], w->hamiltonian_path[i + 1]));
    }
    auto run = std::search(w->hamiltonian_path.begin(), w->hamiltonian_path.end(), w->x_path.begin(),
                           w->x_path.end());
    EXPECT_NE(run, w->hamiltonian_path.end());
  }
}

TEST(ProlongationTest, NegativeAndErrorCases) {
  // A star has no Hamiltonian path through a triangle.
  EXPECT_FALSE(is_prolongation(star_graph(5), complete_graph(3)).has_value());
  EXPECT_THROW(is_prolongation(path_graph(5), star_graph(4)), InvalidArgument);
  EXPECT_THROW(is_prolongation(path_graph(13), path_graph(3)), ResourceLimit);
  EXPECT_TRUE(is_prolongation(path_graph(6), path_graph(3)).has_value());
}

}  // namespace
}  // namespace fsg
