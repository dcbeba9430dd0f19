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

// Direct exploration of friends-and-strangers graphs FS(X, Y). States are
// permutations; edges are generated on the fly and never stored.

#pragma once

#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fsgraph/error.hpp"
#include "fsgraph/graph.hpp"
#include "fsgraph/permutation.hpp"

namespace fsg {

struct Limits {
  int max_order = 9;
  std::uint64_t state_cap = 400000;
};

class FSInstance {
 public:
  FSInstance(Graph x, Graph y) : x_(std::move(x)), y_(std::move(y)), x_edges_(x_.edges()) {
    detail::require(x_.order() == y_.order(), "X and Y must have the same number of vertices");
    detail::require(x_.order() <= kMaxPermutationSize, "FS instances support at most 20 vertices");
  }

  const Graph& x() const { return x_; }
  const Graph& y() const { return y_; }
  int order() const { return x_.order(); }
  const std::vector<Edge>& x_edges() const { return x_edges_; }

  /// The instance FS(Y, X).
  FSInstance transposed() const { return FSInstance(y_, x_); }

 private:
  Graph x_;
  Graph y_;
  std::vector<Edge> x_edges_;
};

namespace detail {

inline void check_state_space(int n, const Limits& limits) {
  if (n > limits.max_order || factorial(n) > limits.state_cap) {
    throw ResourceLimit("FS exploration with n = " + std::to_string(n) + " exceeds the configured cap (n <= " +
                        std::to_string(limits.max_order) + ", at most " + std::to_string(limits.state_cap) +
                        " states)");
  }
}

}  // namespace detail

/// Calls f(tau) for every friendly neighbour tau of sigma, in X-edge order.
template <typename F>
void for_each_friendly_neighbor(const FSInstance& inst, const Permutation& sigma, F&& f) {
  const Graph& y = inst.y();
  for (const Edge& e : inst.x_edges()) {
    if (y.has_edge(sigma[e.u], sigma[e.v])) f(sigma.swapped(e.u, e.v));
  }
}

inline std::vector<Permutation> friendly_neighbors(const FSInstance& inst, const Permutation& sigma) {
  detail::require(sigma.size() == inst.order(), "permutation length must equal n");
  std::vector<Permutation> out;
  for_each_friendly_neighbor(inst, sigma, [&](const Permutation& tau) { out.push_back(tau); });
  return out;
}

/// Vertex set of the component containing sigma, sorted.
inline std::vector<Permutation> component_of(const FSInstance& inst, const Permutation& sigma,
                                             const Limits& limits = {}) {
  detail::require(sigma.size() == inst.order(), "permutation length must equal n");
  detail::check_state_space(inst.order(), limits);
  std::unordered_set<Permutation> seen{sigma};
  std::deque<Permutation> queue{sigma};
  while (!queue.empty()) {
    const Permutation cur = queue.front();
    queue.pop_front();
    for_each_friendly_neighbor(inst, cur, [&](const Permutation& tau) {
      if (seen.insert(tau).second) queue.push_back(tau);
    });
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

struct ComponentReport {
  std::uint64_t component_count = 0;
  std::vector<std::uint64_t> sizes;          // aligned with representatives
  std::vector<Permutation> representatives;  // least member, ascending
  std::uint64_t explored_vertices = 0;
};

/// Component report plus the component index of every state, by rank.
struct ComponentLabelling {
  ComponentReport report;
  std::vector<std::uint32_t> label;

  std::uint32_t component(const Permutation& sigma) const { return label[rank(sigma)]; }
};

inline ComponentLabelling label_components(const FSInstance& inst, const Limits& limits = {}) {
  const int n = inst.order();
  detail::check_state_space(n, limits);
  const std::uint64_t total = factorial(n);
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  ComponentLabelling out;
  out.label.assign(total, kUnseen);
  std::vector<Permutation> queue;
  for (std::uint64_t r = 0; r < total; ++r) {
    if (out.label[r] != kUnseen) continue;
    // Seeding in rank order makes each seed the least member of its component.
    const auto id = static_cast<std::uint32_t>(out.report.component_count++);
    const Permutation seed = unrank(n, r);
    out.label[r] = id;
    queue.assign(1, seed);
    std::uint64_t size = 0;
    while (!queue.empty()) {
      const Permutation cur = queue.back();
      queue.pop_back();
      ++size;
      for_each_friendly_neighbor(inst, cur, [&](const Permutation& tau) {
        std::uint32_t& slot = out.label[rank(tau)];
        if (slot == kUnseen) {
          slot = id;
          queue.push_back(tau);
        }
      });
    }
    out.report.sizes.push_back(size);
    out.report.representatives.push_back(seed);
    out.report.explored_vertices += size;
  }
  return out;
}

inline ComponentReport components(const FSInstance& inst, const Limits& limits = {}) {
  return label_components(inst, limits).report;
}

inline bool is_connected(const FSInstance& inst, const Limits& limits = {}) {
  const int n = inst.order();
  if (n <= 1) return true;
  return component_of(inst, Permutation::identity(n), limits).size() == factorial(n);
}

/// Checks that sigma -> sigma^{-1} carries the edges of FS(X, Y) exactly onto
/// the edges of FS(Y, X).
inline bool inverse_isomorphism_check(const FSInstance& inst, const Limits& limits = {}) {
  const int n = inst.order();
  detail::check_state_space(n, limits);
  const FSInstance dual = inst.transposed();
  std::vector<Permutation> mapped;
  std::vector<Permutation> direct;
  for (std::uint64_t r = 0; r < factorial(n); ++r) {
    const Permutation sigma = unrank(n, r);
    mapped.clear();
    for_each_friendly_neighbor(inst, sigma, [&](const Permutation& tau) { mapped.push_back(tau.inverse()); });
    direct = friendly_neighbors(dual, sigma.inverse());
    std::sort(mapped.begin(), mapped.end());
    std::sort(direct.begin(), direct.end());
    if (mapped != direct) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Contingency tables at a pair of cut vertices.

/// Number of nonnegative integer matrices with the given row and column sums.
inline std::uint64_t count_contingency_tables(const std::vector<int>& rows, const std::vector<int>& cols) {
  long long row_total = 0, col_total = 0;
  for (int r : rows) {
    detail::require(r >= 0, "margins must be nonnegative");
    row_total += r;
  }
  for (int c : cols) {
    detail::require(c >= 0, "margins must be nonnegative");
    col_total += c;
  }
  if (row_total != col_total) return 0;
  // Fill row by row; memoize on (row index, remaining column sums).
  std::map<std::pair<std::size_t, std::vector<int>>, std::uint64_t> memo;
  auto checked_add = [](std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) throw ResourceLimit("contingency table count overflows 64 bits");
    return a + b;
  };
  auto count = [&](auto&& self, std::size_t row, std::vector<int>& left) -> std::uint64_t {
    if (row == rows.size()) return 1;
    if (row + 1 == rows.size()) return 1;  // last row is forced; totals already agree
    const auto key = std::make_pair(row, left);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    auto fill = [&](auto&& fill_self, std::size_t col, int remaining) -> void {
      if (col + 1 == left.size()) {
        if (remaining > left[col]) return;
        left[col] -= remaining;
        total = checked_add(total, self(self, row + 1, left));
        left[col] += remaining;
        return;
      }
      for (int take = 0; take <= std::min(remaining, left[col]); ++take) {
        left[col] -= take;
        fill_self(fill_self, col + 1, remaining - take);
        left[col] += take;
      }
    };
    if (left.empty()) {
      total = rows[row] == 0 ? self(self, row + 1, left) : 0;
    } else {
      fill(fill, 0, rows[row]);
    }
    memo.emplace(key, total);
    return total;
  };
  std::vector<int> left = cols;
  if (rows.empty()) return 1;
  return count(count, 0, left);
}

/// Sizes of the components left after deleting v, in least-vertex order.
inline std::vector<int> margins_after_deleting(const Graph& g, int v) {
  std::vector<int> out;
  for (VertexMask c : components_within(g, g.vertices() & ~bit(v))) out.push_back(std::popcount(c));
  return out;
}

/// |M| for cut vertices x0 of X and y0 of Y; X and Y connected, n >= 3.
inline std::uint64_t incidence_matrix_count(const Graph& x, const Graph& y, int x0, int y0) {
  detail::require(x.order() == y.order(), "X and Y must have the same number of vertices");
  detail::require(x.order() >= 3, "incidence matrices need n >= 3");
  detail::require(is_connected(x) && is_connected(y), "incidence matrices need X and Y connected");
  detail::require(x0 >= 0 && x0 < x.order() && (cut_vertices(x) & bit(x0)) != 0, "x0 is not a cut vertex of X");
  detail::require(y0 >= 0 && y0 < y.order() && (cut_vertices(y) & bit(y0)) != 0, "y0 is not a cut vertex of Y");
  return count_contingency_tables(margins_after_deleting(x, x0), margins_after_deleting(y, y0));
}

// ---------------------------------------------------------------------------
// Disconnected X: component counts over ordered set partitions of V(Y).

struct DecompositionCounts {
  std::uint64_t direct = 0;
  std::uint64_t formula = 0;
  std::uint64_t ordered_partitions = 0;

  bool holds() const { return direct == formula; }
};

inline DecompositionCounts decomposition_counts(const Graph& x, const Graph& y, const Limits& limits = {}) {
  detail::require(x.order() == y.order(), "X and Y must have the same number of vertices");
  detail::require(!is_connected(x), "decomposition needs a disconnected X");
  const FSInstance whole(x, y);
  DecompositionCounts out;
  out.direct = components(whole, limits).component_count;

  const std::vector<VertexMask> parts = connected_components(x);
  std::vector<Graph> pieces;
  for (VertexMask p : parts) pieces.push_back(induced_subgraph(x, p).graph);
  std::map<std::pair<std::size_t, VertexMask>, std::uint64_t> piece_memo;
  auto piece_count = [&](std::size_t i, VertexMask labels) {
    auto [it, fresh] = piece_memo.try_emplace({i, labels}, 0);
    if (fresh) {
      const FSInstance sub(pieces[i], induced_subgraph(y, labels).graph);
      it->second = components(sub, limits).component_count;
    }
    return it->second;
  };
  auto assign = [&](auto&& self, std::size_t i, VertexMask left, std::uint64_t product) -> void {
    if (i == parts.size()) {
      ++out.ordered_partitions;
      out.formula += product;
      return;
    }
    const int need = std::popcount(parts[i]);
    // Subsets of `left` with exactly `need` elements.
    auto choose = [&](auto&& choose_self, VertexMask pool, VertexMask picked, int k) -> void {
      if (k == 0) {
        self(self, i + 1, left & ~picked, product * piece_count(i, picked));
        return;
      }
      if (std::popcount(pool) < k) return;
      const int v = std::countr_zero(pool);
      choose_self(choose_self, pool & ~bit(v), picked | bit(v), k - 1);
      choose_self(choose_self, pool & ~bit(v), picked, k);
    };
    choose(choose, left, 0, need);
  };
  assign(assign, 0, y.vertices(), 1);
  return out;
}

inline bool decomposition_check(const Graph& x, const Graph& y, const Limits& limits = {}) {
  return decomposition_counts(x, y, limits).holds();
}

// ---------------------------------------------------------------------------

/// Graphviz rendering of FS(X, Y), vertices named by one-line words.
inline void write_fs_dot(std::ostream& os, const FSInstance& inst) {
  const int n = inst.order();
  if (n > 5) throw ResourceLimit("DOT export of FS(X, Y) is limited to n <= 5");
  os << "graph FS {\n";
  for (std::uint64_t r = 0; r < factorial(n); ++r) {
    const Permutation sigma = unrank(n, r);
    os << "  \"" << to_string(sigma) << "\";\n";
  }
  for (std::uint64_t r = 0; r < factorial(n); ++r) {
    const Permutation sigma = unrank(n, r);
    for_each_friendly_neighbor(inst, sigma, [&](const Permutation& tau) {
      if (sigma < tau) os << "  \"" << to_string(sigma) << "\" -- \"" << to_string(tau) << "\";\n";
    });
  }
  os << "}\n";
}

}  // namespace fsg
