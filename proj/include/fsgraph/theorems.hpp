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

// Closed-form component counts for structured X, disconnection certificates,
// and the recursive sufficiency test along a Hamiltonian path.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "fsgraph/error.hpp"
#include "fsgraph/fs.hpp"
#include "fsgraph/graph.hpp"
#include "fsgraph/orientation.hpp"
#include "fsgraph/permutation.hpp"
#include "fsgraph/tutte.hpp"

namespace fsg {

struct StructureOptions {
  OrientationOptions orientations;
  bool list_classes = false;
  std::uint64_t listing_cap = 10000;  // max permutations listed
};

/// One component's vertex set described through orientations of the
/// complement: for paths a single orientation, for cycles a double-flip class.
struct ExtensionClass {
  std::vector<Orientation> orientations;
  std::vector<Permutation> extensions;
};

namespace detail {

inline bool listing_allowed(int n, const StructureOptions& options, int complement_edges) {
  return options.list_classes && n <= options.orientations.max_extension_order &&
         factorial(n) <= options.listing_cap && complement_edges <= options.orientations.max_edges;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// X = Path_n.

struct PathStructure {
  BigInt component_count;
  bool classes_listed = false;
  std::vector<ExtensionClass> classes;
};

inline PathStructure path_fs_structure(const Graph& y, const StructureOptions& options = {}) {
  const Graph comp = complement(y);
  PathStructure out;
  out.component_count = tutte_eval(comp, 2, 0);
  if (detail::listing_allowed(y.order(), options, static_cast<int>(comp.edge_count()))) {
    for (const Orientation& o : enumerate_acyclic(comp, options.orientations)) {
      out.classes.push_back({{o}, linear_extensions(o, options.orientations)});
    }
    out.classes_listed = true;
  }
  return out;
}

// ---------------------------------------------------------------------------
// X = Cycle_n.

struct CycleStructure {
  BigInt component_count;
  int nu = 0;
  BigInt toric_count;
  std::optional<std::size_t> double_flip_classes;  // absent above the edge cap
  bool classes_listed = false;
  std::vector<ExtensionClass> classes;
};

inline CycleStructure cycle_fs_structure(const Graph& y, const StructureOptions& options = {}) {
  detail::require(y.order() >= 3, "the cycle case needs n >= 3");
  const Graph comp = complement(y);
  CycleStructure out;
  out.nu = component_size_gcd(comp);
  out.toric_count = tutte_eval(comp, 1, 0);
  out.component_count = out.toric_count * out.nu;
  if (static_cast<int>(comp.edge_count()) > options.orientations.max_edges) return out;

  const OrientationPartition partition = partition_by_moves(comp, FlipKind::double_flip(), options.orientations);
  out.double_flip_classes = partition.size();
  if (BigInt(partition.size()) != out.component_count) {
    throw std::logic_error("double-flip class count disagrees with the Tutte evaluation");
  }
  if (detail::listing_allowed(y.order(), options, static_cast<int>(comp.edge_count()))) {
    for (int c = 0; c < static_cast<int>(partition.size()); ++c) {
      out.classes.push_back({partition.members(c), linear_extensions_of_class(partition, c, options.orientations)});
    }
    out.classes_listed = true;
  }
  return out;
}

inline bool cycle_is_connected(const Graph& y) {
  detail::require(y.order() >= 3, "the cycle case needs n >= 3");
  const StructureReport r = structure_report(complement(y));
  return r.is_forest && r.component_size_gcd == 1;
}

// ---------------------------------------------------------------------------
// X = Star_n with biconnected Y.

struct SizeClass {
  BigInt size;
  BigInt multiplicity;
};

struct StarStructure {
  std::string case_name;  // "cycle", "theta0", "bipartite", "non_bipartite"
  BigInt component_count;
  std::vector<SizeClass> sizes;
};

/// Absent when Y is not biconnected.
inline std::optional<StarStructure> star_fs_structure(const Graph& y) {
  const int n = y.order();
  detail::require(n >= 3, "the star case needs n >= 3");
  const StructureReport r = structure_report(y);
  if (!r.is_biconnected) return std::nullopt;
  const BigInt total = BigInt(factorial(n));
  StarStructure out;
  if (y.edge_count() == static_cast<std::size_t>(n) && r.max_degree == 2) {
    // Biconnected and 2-regular: a cycle.
    out.case_name = "cycle";
    out.component_count = BigInt(factorial(n - 2));
    out.sizes.push_back({BigInt(n) * (n - 1), out.component_count});
  } else if (n == 7 && is_isomorphic(y, theta0_graph())) {
    out.case_name = "theta0";
    out.component_count = 6;
    out.sizes.push_back({total / 6, 6});
  } else if (r.is_bipartite) {
    out.case_name = "bipartite";
    out.component_count = 2;
    out.sizes.push_back({total / 2, 2});
  } else {
    out.case_name = "non_bipartite";
    out.component_count = 1;
    out.sizes.push_back({total, 1});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Paths of cut vertices.

struct CutPath {
  int d = 0;
  std::vector<int> path;  // x_1 .. x_d
};

/// Longest path x_1..x_d of cut vertices joined by bridges, with interior
/// vertices of degree exactly 2. Ties go to the first path found scanning
/// start vertices upward.
inline CutPath cut_path_certificate(const Graph& x) {
  const VertexMask cuts = cut_vertices(x);
  CutPath best;
  std::vector<int> path;
  auto extend = [&](auto&& self, VertexMask used) -> void {
    if (static_cast<int>(path.size()) > best.d) {
      best.d = static_cast<int>(path.size());
      best.path = path;
    }
    const int end = path.back();
    if (path.size() > 1 && x.degree(end) != 2) return;  // end would become interior
    for (int w : members(x.neighbors(end) & cuts & ~used)) {
      if (!is_bridge(x, end, w)) continue;
      path.push_back(w);
      self(self, used | bit(w));
      path.pop_back();
    }
  };
  for (int s : members(cuts)) {
    path.assign(1, s);
    extend(extend, bit(s));
  }
  return best;
}

inline bool is_valid_cut_path(const Graph& x, const std::vector<int>& path) {
  if (path.empty()) return false;
  const VertexMask cuts = cut_vertices(x);
  VertexMask seen = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const int v = path[i];
    if (v < 0 || v >= x.order() || (seen & bit(v)) != 0 || (cuts & bit(v)) == 0) return false;
    seen |= bit(v);
    if (i > 0 && !is_bridge(x, path[i - 1], v)) return false;
    if (i > 0 && i + 1 < path.size() && x.degree(v) != 2) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Recursive sufficiency along a Hamiltonian path.

struct HereditaryOptions {
  int base_order = 5;
  Limits limits;
};

struct HereditaryStep {
  int depth = 0;
  int order = 0;
  int removed_x = -1;  // endpoint deleted from X at this level (local labels)
  bool connected = false;
  std::string method;  // "base_case", "y_disconnected", "recursion", "exhausted", "memo"
};

struct HereditaryResult {
  bool proven_connected = false;
  std::vector<int> hamiltonian_path;
  std::vector<HereditaryStep> trace;
};

namespace detail {

inline std::string pair_key(const Graph& x, const Graph& y) {
  std::string key(1, static_cast<char>(x.order()));
  for (VertexMask m : x.adjacency()) key.append(reinterpret_cast<const char*>(&m), sizeof m);
  for (VertexMask m : y.adjacency()) key.append(reinterpret_cast<const char*>(&m), sizeof m);
  return key;
}

/// Vertices at which some Hamiltonian path of g starts.
inline std::vector<int> hamiltonian_endpoints(const Graph& g) {
  std::vector<int> out;
  if (!is_connected(g)) return out;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> path{s};
    if (extend_hamiltonian(g, path, bit(s))) out.push_back(s);
  }
  return out;
}

class HereditaryProver {
 public:
  explicit HereditaryProver(const HereditaryOptions& options) : options_(options) {}

  bool prove(const Graph& x, const Graph& y, int depth) {
    const std::string key = pair_key(x, y);
    if (auto it = memo_.find(key); it != memo_.end()) {
      trace_.push_back({depth, x.order(), -1, it->second, "memo"});
      return it->second;
    }
    const std::size_t slot = trace_.size();
    trace_.push_back({depth, x.order(), -1, false, ""});
    bool result = false;
    std::string method;
    int removed = -1;
    if (x.order() <= options_.base_order) {
      result = is_connected(FSInstance(x, y), options_.limits);
      method = "base_case";
    } else if (!is_connected(y)) {
      method = "y_disconnected";
    } else {
      method = "exhausted";
      for (int p : hamiltonian_endpoints(x)) {
        const Graph sub_x = delete_vertex(x, p);
        bool all = true;
        for (int v = 0; v < y.order() && all; ++v) all = prove(sub_x, delete_vertex(y, v), depth + 1);
        if (all) {
          result = true;
          method = "recursion";
          removed = p;
          break;
        }
      }
    }
    trace_[slot].connected = result;
    trace_[slot].method = method;
    trace_[slot].removed_x = removed;
    memo_.emplace(key, result);
    return result;
  }

  std::vector<HereditaryStep> take_trace() { return std::move(trace_); }

 private:
  HereditaryOptions options_;
  std::unordered_map<std::string, bool> memo_;
  std::vector<HereditaryStep> trace_;
};

}  // namespace detail

/// Certifies connectivity of FS(X, Y) by deleting an endpoint of a
/// Hamiltonian path of X and every vertex of Y in turn, down to brute force at
/// the base order. A false result proves nothing.
inline HereditaryResult hereditary_sufficiency(const Graph& x, const Graph& y, const HereditaryOptions& options = {}) {
  detail::require(x.order() == y.order(), "X and Y must have the same number of vertices");
  auto path = hamiltonian_path(x);
  detail::require(path.has_value(), "X has no Hamiltonian path");
  HereditaryResult out;
  out.hamiltonian_path = *path;
  detail::HereditaryProver prover(options);
  out.proven_connected = prover.prove(x, y, 0);
  out.trace = prover.take_trace();
  return out;
}

/// Upper bound on the component count of FS(X, Y) from the instance with the
/// last vertex of a Hamiltonian path of X and the last vertex of Y removed.
/// Absent unless every component has a member whose orientation of
/// complement(Y) has that vertex of Y as a sink.
inline std::optional<std::uint64_t> hereditary_component_bound(const Graph& x, const Graph& y,
                                                               const Limits& limits = {}) {
  detail::require(x.order() == y.order(), "X and Y must have the same number of vertices");
  const int n = x.order();
  detail::require(n >= 2, "the bound needs n >= 2");
  auto path = hamiltonian_path(x);
  detail::require(path.has_value(), "X has no Hamiltonian path");
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[(*path)[i]] = i;
  const Graph xp = relabel(x, label);

  const ComponentLabelling lab = label_components(FSInstance(xp, y), limits);
  const Graph comp = complement(y);
  const int last = n - 1;
  std::vector<char> has_sink(lab.report.component_count, 0);
  for (std::uint64_t r = 0; r < factorial(n); ++r) {
    const Permutation sigma = unrank(n, r);
    // `last` is a sink iff every complement-neighbour precedes it in sigma.
    bool sink = true;
    for (int i = sigma.position_of(last) + 1; i < n && sink; ++i) sink = !comp.has_edge(last, sigma[i]);
    if (sink) has_sink[lab.label[r]] = 1;
  }
  for (char s : has_sink) {
    if (!s) return std::nullopt;
  }
  const VertexMask keep = low_mask(n - 1);
  return components(FSInstance(induced_subgraph(xp, keep).graph, induced_subgraph(y, keep).graph), limits)
      .component_count;
}

// ---------------------------------------------------------------------------
// Verdicts.

enum class Status { connected, disconnected, unknown };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::connected: return "connected";
    case Status::disconnected: return "disconnected";
    case Status::unknown: return "unknown";
  }
  return "?";
}

struct SmallOrderWitness {};

/// `shape` (X, or Y when roles_swapped) is isomorphic to the named family;
/// isomorphism maps family vertices to shape vertices.
struct FamilyWitness {
  std::string family;
  bool roles_swapped = false;
  std::vector<int> isomorphism;
  std::optional<BigInt> component_count;
};

struct DisconnectedFactorWitness {
  bool roles_swapped = false;
  std::vector<VertexMask> components;
};

struct BipartitionWitness {
  std::pair<VertexMask, VertexMask> x_sides;
  std::pair<VertexMask, VertexMask> y_sides;
};

struct CutPathWitness {
  bool roles_swapped = false;
  std::vector<int> path;
  int low_degree_vertex = -1;
};

struct CutVertexWitness {
  int x0 = -1;
  int y0 = -1;
  std::uint64_t matrix_count = 0;
};

struct HereditaryWitness {
  bool roles_swapped = false;
  std::vector<int> hamiltonian_path;
  std::size_t steps = 0;
};

using Witness = std::variant<std::monostate, SmallOrderWitness, FamilyWitness, DisconnectedFactorWitness,
                             BipartitionWitness, CutPathWitness, CutVertexWitness, HereditaryWitness>;

struct ConnectivityVerdict {
  Status status = Status::unknown;
  std::string theorem;
  Witness witness;
};

struct DecideOptions {
  HereditaryOptions hereditary;
  bool use_hereditary = true;
};

namespace detail {

struct FamilyRule {
  const char* name;
  int min_order;
  Graph (*build)(int n);
};

inline Graph build_lollipop_n(int n) { return lollipop_graph(n - 3, 3); }

// Order matters: the first matching family decides.
inline const std::vector<FamilyRule>& family_rules() {
  static const std::vector<FamilyRule> rules = {
      {"path", 1, &path_graph},
      {"cycle", 3, &cycle_graph},
      {"star", 3, &star_graph},
      {"lollipop", 4, &build_lollipop_n},
      {"dynkin_d", 5, &dynkin_d_graph},  // false at n = 4 (D_4 is Star_4, Y = Cycle_4)
      {"complete", 2, &complete_graph},
  };
  return rules;
}

inline const char* family_theorem(const std::string& family) {
  if (family == "path") return "path_orientations";
  if (family == "cycle") return "cycle_forest_gcd";
  if (family == "star") return "star_wilson";
  if (family == "lollipop") return "lollipop_min_degree";
  if (family == "dynkin_d") return "dynkin_d_min_degree";
  return "complete_factor";
}

/// Outcome of the exact rule for `family` with the other factor `other`, or
/// nullopt when the rule does not apply (the star rule needs a biconnected
/// partner).
inline std::optional<std::pair<Status, std::optional<BigInt>>> apply_family(const std::string& family,
                                                                             const Graph& other) {
  const int n = other.order();
  auto verdict = [](bool connected) { return connected ? Status::connected : Status::disconnected; };
  if (family == "path") {
    BigInt count = tutte_eval(complement(other), 2, 0);
    const bool one = count == 1;
    return std::make_pair(verdict(one), std::optional<BigInt>(std::move(count)));
  }
  if (family == "cycle") {
    const Graph comp = complement(other);
    BigInt count = tutte_eval(comp, 1, 0) * component_size_gcd(comp);
    return std::make_pair(verdict(cycle_is_connected(other)), std::optional<BigInt>(std::move(count)));
  }
  if (family == "star") {
    auto s = star_fs_structure(other);
    if (!s) return std::nullopt;
    const bool one = s->component_count == 1;
    return std::make_pair(verdict(one), std::optional<BigInt>(s->component_count));
  }
  if (family == "lollipop" || family == "dynkin_d") {
    return std::make_pair(verdict(min_degree(other) >= n - 2), std::optional<BigInt>());
  }
  return std::make_pair(verdict(is_connected(other)), std::optional<BigInt>());
}

inline std::optional<ConnectivityVerdict> try_families(const Graph& x, const Graph& y) {
  const int n = x.order();
  for (const FamilyRule& rule : family_rules()) {
    if (n < rule.min_order) continue;
    const Graph shape = rule.build(n);
    for (bool swapped : {false, true}) {
      const Graph& s = swapped ? y : x;
      const Graph& other = swapped ? x : y;
      auto iso = find_isomorphism(shape, s);
      if (!iso) continue;
      auto outcome = apply_family(rule.name, other);
      if (!outcome) continue;
      return ConnectivityVerdict{outcome->first, family_theorem(rule.name),
                                 FamilyWitness{rule.name, swapped, *iso, outcome->second}};
    }
  }
  return std::nullopt;
}

inline std::optional<ConnectivityVerdict> try_disconnection(const Graph& x, const Graph& y) {
  const int n = x.order();
  for (bool swapped : {false, true}) {
    const Graph& g = swapped ? y : x;
    auto comps = connected_components(g);
    if (comps.size() >= 2) {
      return ConnectivityVerdict{Status::disconnected, "disconnected_factor",
                                 DisconnectedFactorWitness{swapped, std::move(comps)}};
    }
  }
  if (n >= 3) {
    auto bx = bipartition(x);
    auto by = bipartition(y);
    if (bx && by) {
      return ConnectivityVerdict{Status::disconnected, "bipartite_pair", BipartitionWitness{*bx, *by}};
    }
  }
  for (bool swapped : {false, true}) {
    const Graph& s = swapped ? y : x;
    const Graph& other = swapped ? x : y;
    const CutPath cp = cut_path_certificate(s);
    if (cp.d == 0) continue;
    for (int v = 0; v < n; ++v) {
      if (other.degree(v) <= cp.d) {
        return ConnectivityVerdict{Status::disconnected, "cut_path", CutPathWitness{swapped, cp.path, v}};
      }
    }
  }
  if (n >= 3) {
    const VertexMask cx = cut_vertices(x);
    const VertexMask cy = cut_vertices(y);
    if (cx != 0 && cy != 0) {
      const int x0 = std::countr_zero(cx);
      const int y0 = std::countr_zero(cy);
      return ConnectivityVerdict{Status::disconnected, "cut_vertex_pair",
                                 CutVertexWitness{x0, y0, incidence_matrix_count(x, y, x0, y0)}};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Deterministic rule order: small orders, exact families (for X, then with
/// the roles of X and Y exchanged), disconnection certificates, then the
/// hereditary recursion. Never brute-forces an instance above the base order.
inline ConnectivityVerdict decide_connectivity(const Graph& x, const Graph& y, const DecideOptions& options = {}) {
  detail::require(x.order() == y.order(), "X and Y must have the same number of vertices");
  const int n = x.order();
  if (n <= 2) {
    const bool connected = n < 2 || (x.has_edge(0, 1) && y.has_edge(0, 1));
    return {connected ? Status::connected : Status::disconnected, "small_order", SmallOrderWitness{}};
  }
  if (auto v = detail::try_families(x, y)) return *v;
  if (auto v = detail::try_disconnection(x, y)) return *v;
  if (options.use_hereditary) {
    for (bool swapped : {false, true}) {
      const Graph& s = swapped ? y : x;
      const Graph& other = swapped ? x : y;
      if (!hamiltonian_path(s)) continue;
      HereditaryResult h = hereditary_sufficiency(s, other, options.hereditary);
      if (h.proven_connected) {
        return {Status::connected, "hereditary_recursion",
                HereditaryWitness{swapped, std::move(h.hamiltonian_path), h.trace.size()}};
      }
    }
  }
  return {Status::unknown, "", std::monostate{}};
}

/// Re-checks a verdict's witness without exploring FS(X, Y).
inline bool verify_certificate(const Graph& x, const Graph& y, const ConnectivityVerdict& verdict,
                               const DecideOptions& options = {}) {
  const int n = x.order();
  if (y.order() != n) return false;
  auto sides_ok = [](const Graph& g, const std::pair<VertexMask, VertexMask>& s) {
    if ((s.first & s.second) != 0 || (s.first | s.second) != g.vertices()) return false;
    for (const Edge& e : g.edges()) {
      const bool a = (s.first & bit(e.u)) != 0;
      const bool b = (s.first & bit(e.v)) != 0;
      if (a == b) return false;
    }
    return true;
  };
  return std::visit(
      [&](const auto& w) -> bool {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, std::monostate>) {
          return verdict.status == Status::unknown;
        } else if constexpr (std::is_same_v<W, SmallOrderWitness>) {
          if (n > 2) return false;
          const bool connected = n < 2 || (x.has_edge(0, 1) && y.has_edge(0, 1));
          return verdict.status == (connected ? Status::connected : Status::disconnected);
        } else if constexpr (std::is_same_v<W, FamilyWitness>) {
          const Graph& s = w.roles_swapped ? y : x;
          const Graph& other = w.roles_swapped ? x : y;
          for (const auto& rule : detail::family_rules()) {
            if (w.family != rule.name || n < rule.min_order) continue;
            const Graph shape = rule.build(n);
            if (static_cast<int>(w.isomorphism.size()) != n) return false;
            std::vector<int> inverse(n, -1);
            for (int v = 0; v < n; ++v) {
              const int t = w.isomorphism[v];
              if (t < 0 || t >= n || inverse[t] >= 0) return false;
              inverse[t] = v;
            }
            for (int a = 0; a < n; ++a) {
              for (int b = a + 1; b < n; ++b) {
                if (shape.has_edge(a, b) != s.has_edge(w.isomorphism[a], w.isomorphism[b])) return false;
              }
            }
            auto outcome = detail::apply_family(w.family, other);
            return outcome && outcome->first == verdict.status;
          }
          return false;
        } else if constexpr (std::is_same_v<W, DisconnectedFactorWitness>) {
          const Graph& g = w.roles_swapped ? y : x;
          return verdict.status == Status::disconnected && w.components.size() >= 2 &&
                 w.components == connected_components(g);
        } else if constexpr (std::is_same_v<W, BipartitionWitness>) {
          return verdict.status == Status::disconnected && n >= 3 && sides_ok(x, w.x_sides) && sides_ok(y, w.y_sides);
        } else if constexpr (std::is_same_v<W, CutPathWitness>) {
          const Graph& s = w.roles_swapped ? y : x;
          const Graph& other = w.roles_swapped ? x : y;
          return verdict.status == Status::disconnected && is_valid_cut_path(s, w.path) &&
                 w.low_degree_vertex >= 0 && w.low_degree_vertex < n &&
                 other.degree(w.low_degree_vertex) <= static_cast<int>(w.path.size());
        } else if constexpr (std::is_same_v<W, CutVertexWitness>) {
          if (verdict.status != Status::disconnected) return false;
          try {
            const std::uint64_t m = incidence_matrix_count(x, y, w.x0, w.y0);
            return m == w.matrix_count && m >= 2;
          } catch (const InvalidArgument&) {
            return false;
          }
        } else {
          const Graph& s = w.roles_swapped ? y : x;
          const Graph& other = w.roles_swapped ? x : y;
          if (verdict.status != Status::connected || !hamiltonian_path(s)) return false;
          return hereditary_sufficiency(s, other, options.hereditary).proven_connected;
        }
      },
      verdict.witness);
}

}  // namespace fsg
