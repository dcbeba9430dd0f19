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

// Tutte polynomial evaluation at integer points by deletion-contraction on
// multigraphs, with parallel edges handled a bundle at a time.

#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fsgraph/graph.hpp"

namespace fsg {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

/// Loopless multigraph as a symmetric multiplicity matrix.
struct MultiGraph {
  int n = 0;
  std::vector<int> mult;  // n * n

  int& at(int u, int v) { return mult[u * n + v]; }
  int at(int u, int v) const { return mult[u * n + v]; }
};

class TutteEvaluator {
 public:
  TutteEvaluator(BigInt x, BigInt y) : x_(std::move(x)), y_(std::move(y)) {}

  BigInt eval(const MultiGraph& g) {
    BigInt product = 1;
    for (const MultiGraph& part : split(g)) product *= eval_connected(part);
    return product;
  }

 private:
  // Components with at least one edge; isolated vertices contribute 1.
  static std::vector<MultiGraph> split(const MultiGraph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<MultiGraph> out;
    for (int s = 0; s < g.n; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<int> verts{s};
      comp[s] = s;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        for (int w = 0; w < g.n; ++w) {
          if (g.at(verts[i], w) > 0 && comp[w] < 0) {
            comp[w] = s;
            verts.push_back(w);
          }
        }
      }
      if (verts.size() < 2) continue;
      MultiGraph part{static_cast<int>(verts.size()), std::vector<int>(verts.size() * verts.size(), 0)};
      for (int a = 0; a < part.n; ++a) {
        for (int b = 0; b < part.n; ++b) part.at(a, b) = g.at(verts[a], verts[b]);
      }
      out.push_back(std::move(part));
    }
    return out;
  }

  // Canonical-ish key: vertices sorted by a refined degree signature. Equal
  // keys imply isomorphic graphs, which is all memoization needs.
  static std::string key_of(const MultiGraph& g) {
    std::vector<long long> colour(g.n);
    for (int v = 0; v < g.n; ++v) {
      colour[v] = 0;
      for (int w = 0; w < g.n; ++w) colour[v] += g.at(v, w);
    }
    for (int round = 0; round < 2; ++round) {
      std::vector<long long> next(g.n);
      for (int v = 0; v < g.n; ++v) {
        long long h = colour[v] * 1000003;
        std::vector<long long> seen;
        for (int w = 0; w < g.n; ++w) {
          if (g.at(v, w) > 0) seen.push_back(colour[w] * 31 + g.at(v, w));
        }
        std::sort(seen.begin(), seen.end());
        for (long long s : seen) h = h * 1315423911LL + s;
        next[v] = h;
      }
      colour = std::move(next);
    }
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });
    std::string key;
    key.reserve(g.n * g.n + 1);
    key.push_back(static_cast<char>(g.n));
    for (int a = 0; a < g.n; ++a) {
      for (int b = a + 1; b < g.n; ++b) key.push_back(static_cast<char>(g.at(order[a], order[b])));
    }
    return key;
  }

  BigInt geometric(int terms) const {
    // 1 + y + ... + y^(terms-1)
    BigInt sum = 0, power = 1;
    for (int i = 0; i < terms; ++i) {
      sum += power;
      power *= y_;
    }
    return sum;
  }

  static bool connected_without_bundle(const MultiGraph& g, int u, int v) {
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{u};
    seen[u] = 1;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < g.n; ++b) {
        if (seen[b] || g.at(a, b) == 0) continue;
        if ((a == u && b == v) || (a == v && b == u)) continue;
        seen[b] = 1;
        stack.push_back(b);
      }
    }
    return seen[v] != 0;
  }

  // Merges v into u; the bundle between them disappears (its loops are
  // accounted for by the caller).
  static MultiGraph contract(const MultiGraph& g, int u, int v) {
    MultiGraph out{g.n - 1, std::vector<int>((g.n - 1) * (g.n - 1), 0)};
    auto image = [&](int w) { return w == v ? u - (u > v) : w - (w > v); };
    for (int a = 0; a < g.n; ++a) {
      for (int b = 0; b < g.n; ++b) {
        if (a == b || g.at(a, b) == 0) continue;
        const int ia = image(a), ib = image(b);
        if (ia != ib) out.at(ia, ib) += g.at(a, b);
      }
    }
    return out;
  }

  BigInt eval_connected(const MultiGraph& g) {
    const std::string key = key_of(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Bundle at the vertex with fewest distinct neighbours.
    int u = -1, best = g.n + 1;
    for (int a = 0; a < g.n; ++a) {
      int distinct = 0;
      for (int b = 0; b < g.n; ++b) distinct += g.at(a, b) > 0;
      if (distinct > 0 && distinct < best) {
        best = distinct;
        u = a;
      }
    }
    int v = 0;
    while (g.at(u, v) == 0) ++v;
    const int k = g.at(u, v);

    BigInt result;
    const BigInt contracted = eval(contract(g, u, v));
    if (!connected_without_bundle(g, u, v)) {
      result = (x_ + y_ * geometric(k - 1)) * contracted;
    } else {
      MultiGraph deleted = g;
      deleted.at(u, v) = deleted.at(v, u) = 0;
      result = eval(deleted) + geometric(k) * contracted;
    }
    memo_.emplace(key, result);
    return result;
  }

  BigInt x_;
  BigInt y_;
  std::unordered_map<std::string, BigInt> memo_;
};

}  // namespace detail

/// T_G(x, y) for a simple graph G; the product over components when G is
/// disconnected.
inline BigInt tutte_eval(const Graph& g, long long x, long long y) {
  detail::MultiGraph m{g.order(), std::vector<int>(static_cast<std::size_t>(g.order()) * g.order(), 0)};
  for (const Edge& e : g.edges()) m.at(e.u, e.v) = m.at(e.v, e.u) = 1;
  detail::TutteEvaluator evaluator{BigInt(x), BigInt(y)};
  return evaluator.eval(m);
}

}  // namespace fsg
