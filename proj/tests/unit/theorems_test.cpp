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
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fsgraph/fs.hpp"
#include "fsgraph/prolongation.hpp"
#include "fsgraph/theorems.hpp"

namespace fsg {
namespace {

Graph fan5() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}); }
Graph k23_plus_edge() {
  return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}});
}

Graph y_from_complement(int n, std::initializer_list<Edge> comp_edges) { return complement(Graph(n, comp_edges)); }

Graph random_min_degree_graph(int n, int d, std::mt19937_64& rng) {
  for (;;) {
    const Graph g = random_graph(n, 0.75, rng);
    if (min_degree(g) >= d) return g;
  }
}

std::uint64_t brute_count(const Graph& x, const Graph& y) { return components(FSInstance(x, y)).component_count; }

TEST(PathStructureTest, CountMatchesBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& y : graphs_up_to_isomorphism(n)) {
      EXPECT_EQ(path_fs_structure(y).component_count, BigInt(brute_count(path_graph(n), y)));
    }
  }
}

TEST(PathStructureTest, ListedClassesAreComponents) {
  StructureOptions opts;
  opts.list_classes = true;
  for (const Graph& y : graphs_up_to_isomorphism(5)) {
    const PathStructure s = path_fs_structure(y, opts);
    ASSERT_TRUE(s.classes_listed);
    ASSERT_EQ(BigInt(s.classes.size()), s.component_count);
    const FSInstance inst(path_graph(5), y);
    for (const ExtensionClass& c : s.classes) {
      EXPECT_EQ(c.orientations.size(), 1u);
      EXPECT_EQ(component_of(inst, c.extensions.front()), c.extensions);
    }
  }
}

TEST(CycleStructureTest, CountMatchesBruteForce) {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& y : graphs_up_to_isomorphism(n)) {
      const CycleStructure s = cycle_fs_structure(y);
      const std::uint64_t count = brute_count(cycle_graph(n), y);
      EXPECT_EQ(s.component_count, BigInt(count));
      ASSERT_TRUE(s.double_flip_classes.has_value());
      EXPECT_EQ(*s.double_flip_classes, count);
      EXPECT_EQ(cycle_is_connected(y), count == 1);
    }
  }
}

TEST(CycleStructureTest, ListedClassesAreComponents) {
  StructureOptions opts;
  opts.list_classes = true;
  for (const Graph& y : graphs_up_to_isomorphism(5)) {
    const CycleStructure s = cycle_fs_structure(y, opts);
    ASSERT_TRUE(s.classes_listed);
    const FSInstance inst(cycle_graph(5), y);
    for (const ExtensionClass& c : s.classes) {
      std::vector<Permutation> sorted = c.extensions;
      std::sort(sorted.begin(), sorted.end());
      EXPECT_EQ(component_of(inst, sorted.front()), sorted);
    }
  }
}

TEST(CycleStructureTest, FiveComponentsOfTwentyFour) {
  // complement(Y) is a spanning tree, so each toric class splits five ways.
  const Graph y(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {3, 4}, {0, 2}});
  const CycleStructure s = cycle_fs_structure(y);
  EXPECT_EQ(s.component_count, 5);
  EXPECT_EQ(s.nu, 5);
  EXPECT_EQ(s.toric_count, 1);
  const ComponentReport r = components(FSInstance(cycle_graph(5), y));
  EXPECT_EQ(r.component_count, 5u);
  for (std::uint64_t size : r.sizes) EXPECT_EQ(size, 24u);
}

TEST(CycleStructureTest, ForestComplements) {
  const Graph forest = y_from_complement(5, {{0, 1}, {2, 3}, {3, 4}});
  EXPECT_TRUE(cycle_is_connected(forest));
  EXPECT_EQ(brute_count(cycle_graph(5), forest), 1u);

  const Graph triangle = y_from_complement(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});
  EXPECT_FALSE(cycle_is_connected(triangle));
  EXPECT_EQ(cycle_fs_structure(triangle).component_count, 2);
  EXPECT_EQ(brute_count(cycle_graph(5), triangle), 2u);

  const Graph even = y_from_complement(6, {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_FALSE(cycle_is_connected(even));
  EXPECT_EQ(cycle_fs_structure(even).nu, 2);

  EXPECT_TRUE(cycle_is_connected(complete_graph(6)));
  EXPECT_FALSE(cycle_is_connected(cycle_graph(6)));
}

TEST(CycleStructureTest, ShiftOrbitsCoverToricClasses) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 6;
    const Graph y = random_graph(n, 0.6, rng);
    const ComponentLabelling lab = label_components(FSInstance(cycle_graph(n), y));
    const OrientationPartition toric = partition_by_moves(complement(y), FlipKind::toric());
    for (std::uint64_t c = 0; c < lab.report.component_count; ++c) {
      const Permutation seed = lab.report.representatives[c];
      std::set<std::uint32_t> orbit;
      Permutation s = seed;
      for (int k = 0; k < n; ++k) {
        orbit.insert(lab.component(s));
        s = cyclic_shift(s);
      }
      EXPECT_EQ(s, seed);
      const int cls = toric.class_of(orientation_from_permutation(toric.frame_ptr(), seed));
      std::set<std::uint32_t> expected;
      for (std::uint64_t r = 0; r < factorial(n); ++r) {
        const Permutation p = unrank(n, r);
        if (toric.class_of(orientation_from_permutation(toric.frame_ptr(), p)) == cls) {
          expected.insert(lab.label[r]);
        }
      }
      EXPECT_EQ(orbit, expected);
    }
  }
}

TEST(CycleStructureTest, ReversalPreservesComponentCount) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 8; ++trial) {
    const Graph y = random_graph(6, 0.6, rng);
    const ComponentLabelling lab = label_components(FSInstance(cycle_graph(6), y));
    std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint64_t r = 0; r < factorial(6); ++r) {
      const Permutation p = unrank(6, r);
      std::vector<int> w(p.images().begin(), p.images().end());
      std::reverse(w.begin(), w.end());
      pairs.insert({lab.label[r], lab.component(Permutation::from_images(w))});
    }
    EXPECT_EQ(pairs.size(), lab.report.component_count) << "reversal maps components to components";
  }
}

TEST(StarStructureTest, MatchesBruteForceOnBiconnectedGraphs) {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& y : graphs_up_to_isomorphism(n)) {
      const auto s = star_fs_structure(y);
      if (!structure_report(y).is_biconnected) {
        EXPECT_FALSE(s.has_value());
        continue;
      }
      ASSERT_TRUE(s.has_value());
      const ComponentReport r = components(FSInstance(star_graph(n), y));
      EXPECT_EQ(s->component_count, BigInt(r.component_count));
      std::vector<std::uint64_t> sizes = r.sizes;
      std::sort(sizes.begin(), sizes.end());
      std::vector<std::uint64_t> claimed;
      for (const SizeClass& c : s->sizes) {
        for (BigInt k = 0; k < c.multiplicity; ++k) claimed.push_back(static_cast<std::uint64_t>(c.size));
      }
      std::sort(claimed.begin(), claimed.end());
      EXPECT_EQ(sizes, claimed);
    }
  }
}

TEST(StarStructureTest, NamedCases) {
  EXPECT_EQ(star_fs_structure(cycle_graph(5))->case_name, "cycle");
  EXPECT_EQ(star_fs_structure(cycle_graph(5))->component_count, 6);
  EXPECT_EQ(star_fs_structure(theta0_graph())->case_name, "theta0");
  EXPECT_EQ(star_fs_structure(complete_bipartite_graph(3, 6))->case_name, "bipartite");
  EXPECT_EQ(star_fs_structure(complete_graph(6))->case_name, "non_bipartite");
  EXPECT_FALSE(star_fs_structure(path_graph(5)).has_value());
}

TEST(CutPathTest, Examples) {
  for (int n = 4; n <= 8; ++n) {
    for (int m = 3; m < n; ++m) {
      const CutPath cp = cut_path_certificate(lollipop_graph(n - m, m));
      EXPECT_EQ(cp.d, n - m) << n << "," << m;
      EXPECT_TRUE(is_valid_cut_path(lollipop_graph(n - m, m), cp.path));
    }
  }
  EXPECT_EQ(cut_path_certificate(cycle_graph(6)).d, 0);
  EXPECT_EQ(cut_path_certificate(path_graph(4)).d, 2);
  EXPECT_FALSE(is_valid_cut_path(path_graph(4), {0, 1}));
  EXPECT_FALSE(is_valid_cut_path(path_graph(4), {}));
}

TEST(CutPathTest, LowDegreePartnerDisconnects) {
  for (int n = 4; n <= 6; ++n) {
    std::vector<Graph> all = graphs_up_to_isomorphism(n);
    for (const Graph& x : all) {
      const CutPath cp = cut_path_certificate(x);
      if (cp.d == 0) continue;
      for (const Graph& y : all) {
        if (min_degree(y) <= cp.d) {
          EXPECT_GT(brute_count(x, y), 1u);
        }
      }
    }
  }
}

TEST(DecideTest, FamilyExamples) {
  const ConnectivityVerdict lol = decide_connectivity(lollipop_graph(3, 3), complete_graph(6));
  EXPECT_EQ(lol.status, Status::connected);
  EXPECT_EQ(lol.theorem, "lollipop_min_degree");

  const ConnectivityVerdict path = decide_connectivity(complete_graph(5), path_graph(5));
  EXPECT_EQ(path.status, Status::connected);
  EXPECT_EQ(path.theorem, "path_orientations");
  EXPECT_TRUE(std::get<FamilyWitness>(path.witness).roles_swapped);

  const ConnectivityVerdict bip = decide_connectivity(complete_bipartite_graph(3, 6), complete_bipartite_graph(2, 6));
  EXPECT_EQ(bip.status, Status::disconnected);
  EXPECT_EQ(bip.theorem, "bipartite_pair");

  const ConnectivityVerdict split = decide_connectivity(disjoint_union(path_graph(3), path_graph(3)),
                                                        complement(cycle_graph(6)));
  EXPECT_EQ(split.status, Status::disconnected);
  EXPECT_EQ(split.theorem, "disconnected_factor");
  EXPECT_EQ(decide_connectivity(disjoint_union(path_graph(3), path_graph(3)), complete_graph(6)).theorem,
            "complete_factor");

  EXPECT_EQ(decide_connectivity(complete_graph(2), complete_graph(2)).theorem, "small_order");
  EXPECT_EQ(decide_connectivity(complete_graph(2), edgeless_graph(2)).status, Status::disconnected);
  EXPECT_THROW(decide_connectivity(path_graph(3), path_graph(4)), InvalidArgument);
}

TEST(DecideTest, DynkinRuleStartsAtFive) {
  // D_4 is Star_4; with Y = Cycle_4 both are bipartite.
  const ConnectivityVerdict v = decide_connectivity(dynkin_d_graph(4), cycle_graph(4));
  EXPECT_EQ(v.status, Status::disconnected);
  EXPECT_EQ(brute_count(dynkin_d_graph(4), cycle_graph(4)), 2u);
  const ConnectivityVerdict d6 = decide_connectivity(dynkin_d_graph(6), complete_graph(6));
  EXPECT_EQ(d6.status, Status::connected);
}

void expect_sound(const Graph& x, const Graph& y) {
  const ConnectivityVerdict v = decide_connectivity(x, y);
  EXPECT_TRUE(verify_certificate(x, y, v)) << v.theorem;
  if (v.status == Status::unknown) return;
  const bool connected = brute_count(x, y) == 1;
  EXPECT_EQ(v.status == Status::connected, connected) << v.theorem << " x=" << canonical_code(x)
                                                      << " y=" << canonical_code(y);
}

TEST(DecideTest, NeverContradictsBruteForceUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    const auto all = graphs_up_to_isomorphism(n);
    for (const Graph& x : all) {
      for (const Graph& y : all) expect_sound(x, y);
    }
  }
}

TEST(DecideTest, NeverContradictsBruteForceOnRandomSix) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 150; ++trial) {
    expect_sound(random_graph(6, 0.6, rng), random_graph(6, 0.6, rng));
  }
}

TEST(DecideTest, TamperedCertificatesAreRejected) {
  ConnectivityVerdict v = decide_connectivity(lollipop_graph(3, 3), complete_graph(6));
  v.status = Status::disconnected;
  EXPECT_FALSE(verify_certificate(lollipop_graph(3, 3), complete_graph(6), v));

  ConnectivityVerdict c = decide_connectivity(path_graph(5), complete_graph(5));
  ASSERT_TRUE(verify_certificate(path_graph(5), complete_graph(5), c));
  std::get<FamilyWitness>(c.witness).isomorphism = {1, 0, 2, 3, 4};
  EXPECT_FALSE(verify_certificate(path_graph(5), complete_graph(5), c));
}

TEST(HereditaryTest, TriangleProlongationsWithHighMinDegree) {
  std::mt19937_64 rng(53);
  for (int n = 5; n <= 7; ++n) {
    int checked = 0;
    while (checked < 6) {
      const Graph x = random_graph(n, 0.35, rng);
      if (!is_prolongation(x, complete_graph(3))) continue;
      const Graph y = random_min_degree_graph(n, n - 2, rng);
      const HereditaryResult h = hereditary_sufficiency(x, y);
      EXPECT_TRUE(h.proven_connected);
      EXPECT_TRUE(is_connected(FSInstance(x, y)));
      ++checked;
    }
  }
}

TEST(HereditaryTest, FanBasePropertyAndProlongations) {
  for (const Graph& base : {fan5(), k23_plus_edge()}) {
    for (const Graph& y : graphs_up_to_isomorphism(5)) {
      if (min_degree(y) >= 2) {
        EXPECT_TRUE(is_connected(FSInstance(base, y)));
      }
    }
  }
  std::mt19937_64 rng(59);
  for (int n = 6; n <= 7; ++n) {
    const Graph x = lollipop_graph(n - 5, 5);
    ASSERT_TRUE(is_prolongation(x, fan5()).has_value());
    for (int trial = 0; trial < 5; ++trial) {
      const Graph y = random_min_degree_graph(n, n - 3, rng);
      EXPECT_TRUE(hereditary_sufficiency(x, y).proven_connected);
      EXPECT_TRUE(is_connected(FSInstance(x, y)));
    }
  }
}

TEST(HereditaryTest, TraceAndFailures) {
  const HereditaryResult disc = hereditary_sufficiency(path_graph(6), disjoint_union(complete_graph(3), complete_graph(3)));
  EXPECT_FALSE(disc.proven_connected);
  ASSERT_FALSE(disc.trace.empty());
  EXPECT_EQ(disc.trace.front().method, "y_disconnected");

  const HereditaryResult ok = hereditary_sufficiency(complete_graph(6), complete_graph(6));
  EXPECT_TRUE(ok.proven_connected);
  EXPECT_EQ(ok.trace.front().order, 6);
  EXPECT_EQ(ok.trace.front().method, "recursion");
  EXPECT_THROW(hereditary_sufficiency(star_graph(5), complete_graph(5)), InvalidArgument);
}

TEST(HereditaryTest, SoundOnRandomInstances) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph x = random_graph(6, 0.6, rng);
    const Graph y = random_graph(6, 0.7, rng);
    if (!hamiltonian_path(x)) continue;
    if (hereditary_sufficiency(x, y).proven_connected) {
      EXPECT_TRUE(is_connected(FSInstance(x, y)));
    }
  }
}

TEST(ComponentBoundTest, BoundsBruteForce) {
  EXPECT_EQ(hereditary_component_bound(complete_graph(5), complete_graph(5)), 1u);
  std::mt19937_64 rng(67);
  int bounded = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Graph x = random_graph(5, 0.6, rng);
    const Graph y = random_graph(5, 0.6, rng);
    if (!hamiltonian_path(x)) continue;
    const auto bound = hereditary_component_bound(x, y);
    if (!bound) continue;
    ++bounded;
    EXPECT_LE(brute_count(x, y), *bound);
  }
  EXPECT_GT(bounded, 0);
}

TEST(ComponentBoundTest, AbsentWhenSinkHypothesisFails) {
  // With Y edgeless, FS has no edges and most singletons miss the sink condition.
  EXPECT_FALSE(hereditary_component_bound(path_graph(4), edgeless_graph(4)).has_value());
}

}  // namespace
}  // namespace fsg
