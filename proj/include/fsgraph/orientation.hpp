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

// Acyclic orientations, the flip family of moves on them, equivalence classes
// under those moves, and linear extensions of the induced reachability order.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fsgraph/error.hpp"
#include "fsgraph/graph.hpp"
#include "fsgraph/permutation.hpp"

namespace fsg {

/// Bit e set iff canonical edge e = {u < v} is directed v -> u.
using OrientationBits = std::uint64_t;

inline constexpr int kMaxOrientedEdges = 64;

/// A graph together with its canonical (lexicographic) edge numbering.
class EdgeFrame {
 public:
  explicit EdgeFrame(Graph g) : graph_(std::move(g)), edges_(graph_.edges()) {
    if (edges_.size() > static_cast<std::size_t>(kMaxOrientedEdges)) {
      throw ResourceLimit("orientations support at most 64 edges, graph has " +
                          std::to_string(edges_.size()));
    }
    incident_.assign(graph_.order(), 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      incident_[edges_[e].u] |= std::uint64_t{1} << e;
      incident_[edges_[e].v] |= std::uint64_t{1} << e;
    }
  }

  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Edges incident to v, as a mask over edge indices.
  std::uint64_t incident(int v) const { return incident_[v]; }

  OrientationBits all_edges() const {
    return edges_.size() == 64 ? ~OrientationBits{0} : (OrientationBits{1} << edges_.size()) - 1;
  }

  int edge_index(int a, int b) const {
    const Edge key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    return (it != edges_.end() && *it == key) ? static_cast<int>(it - edges_.begin()) : -1;
  }

 private:
  Graph graph_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> incident_;
};

using FramePtr = std::shared_ptr<const EdgeFrame>;

inline FramePtr make_frame(const Graph& g) { return std::make_shared<const EdgeFrame>(g); }

class Orientation {
 public:
  Orientation(FramePtr frame, OrientationBits bits) : frame_(std::move(frame)), bits_(bits) {
    detail::require((bits_ & ~frame_->all_edges()) == 0, "orientation bits exceed edge count");
  }

  const EdgeFrame& frame() const { return *frame_; }
  const FramePtr& frame_ptr() const { return frame_; }
  const Graph& graph() const { return frame_->graph(); }
  OrientationBits bits() const { return bits_; }

  /// Tail and head of edge e.
  std::pair<int, int> arc(int e) const {
    const Edge& ed = frame_->edge(e);
    return ((bits_ >> e) & 1) ? std::make_pair(ed.v, ed.u) : std::make_pair(ed.u, ed.v);
  }

  bool directed(int from, int to) const {
    const int e = frame_->edge_index(from, to);
    return e >= 0 && arc(e).first == from;
  }

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.bits_ == b.bits_ && a.frame_->graph() == b.frame_->graph();
  }

 private:
  FramePtr frame_;
  OrientationBits bits_ = 0;
};

// ---------------------------------------------------------------------------
// Raw helpers on (frame, bits).

namespace detail {

struct ArcMasks {
  std::array<VertexMask, kMaxVertices> out{};
  std::array<VertexMask, kMaxVertices> in{};
};

inline ArcMasks arc_masks(const EdgeFrame& frame, OrientationBits bits) {
  ArcMasks m;
  for (int e = 0; e < frame.edge_count(); ++e) {
    const Edge& ed = frame.edge(e);
    const bool down = (bits >> e) & 1;
    const int tail = down ? ed.v : ed.u;
    const int head = down ? ed.u : ed.v;
    m.out[tail] |= bit(head);
    m.in[head] |= bit(tail);
  }
  return m;
}

inline bool acyclic(const EdgeFrame& frame, const ArcMasks& m) {
  VertexMask left = frame.graph().vertices();
  bool progress = true;
  while (left != 0 && progress) {
    progress = false;
    for (int v : members(left)) {
      if ((m.out[v] & left) == 0) {
        left &= ~bit(v);
        progress = true;
      }
    }
  }
  return left == 0;
}

inline VertexMask source_mask(const EdgeFrame& frame, const ArcMasks& m) {
  VertexMask s = 0;
  for (int v = 0; v < frame.order(); ++v) {
    if (m.in[v] == 0) s |= bit(v);
  }
  return s;
}

inline VertexMask sink_mask(const EdgeFrame& frame, const ArcMasks& m) {
  VertexMask s = 0;
  for (int v = 0; v < frame.order(); ++v) {
    if (m.out[v] == 0) s |= bit(v);
  }
  return s;
}

}  // namespace detail

inline bool is_acyclic(const Orientation& o) {
  return detail::acyclic(o.frame(), detail::arc_masks(o.frame(), o.bits()));
}

/// In-degree-zero vertices.
inline VertexMask sources(const Orientation& o) {
  return detail::source_mask(o.frame(), detail::arc_masks(o.frame(), o.bits()));
}

/// Out-degree-zero vertices.
inline VertexMask sinks(const Orientation& o) {
  return detail::sink_mask(o.frame(), detail::arc_masks(o.frame(), o.bits()));
}

/// Directs {i, j} from i to j iff i precedes j in sigma's one-line word.
inline Orientation orientation_from_permutation(const FramePtr& frame, const Permutation& sigma) {
  detail::require(sigma.size() == frame->order(), "permutation length must equal the graph order");
  const Permutation where = sigma.inverse();
  OrientationBits bits = 0;
  for (int e = 0; e < frame->edge_count(); ++e) {
    const Edge& ed = frame->edge(e);
    if (where[ed.v] < where[ed.u]) bits |= OrientationBits{1} << e;
  }
  return Orientation(frame, bits);
}

inline Orientation orientation_from_permutation(const Graph& g, const Permutation& sigma) {
  return orientation_from_permutation(make_frame(g), sigma);
}

// ---------------------------------------------------------------------------
// Moves.

inline Orientation flip(const Orientation& o, int v) {
  detail::require(v >= 0 && v < o.frame().order(), "vertex out of range");
  const auto m = detail::arc_masks(o.frame(), o.bits());
  if (m.in[v] != 0 && m.out[v] != 0) {
    throw InvalidMove("flip: vertex " + std::to_string(v + 1) + " is neither a source nor a sink");
  }
  return Orientation(o.frame_ptr(), o.bits() ^ o.frame().incident(v));
}

/// Reverses every edge at the sources `from_sources` and the sinks
/// `from_sinks`; all named vertices must be distinct and pairwise nonadjacent.
inline Orientation ab_flip(const Orientation& o, std::span<const int> from_sources,
                           std::span<const int> from_sinks) {
  const auto m = detail::arc_masks(o.frame(), o.bits());
  const Graph& g = o.graph();
  VertexMask chosen = 0;
  OrientationBits bits = o.bits();
  auto take = [&](int v, bool want_source) {
    detail::require(v >= 0 && v < g.order(), "vertex out of range");
    if ((chosen & bit(v)) != 0) throw InvalidMove("(a,b)-flip: vertex listed twice");
    if ((g.neighbors(v) & chosen) != 0) throw InvalidMove("(a,b)-flip: flipped vertices must be nonadjacent");
    if (want_source && m.in[v] != 0) throw InvalidMove("(a,b)-flip: vertex " + std::to_string(v + 1) + " is not a source");
    if (!want_source && m.out[v] != 0) throw InvalidMove("(a,b)-flip: vertex " + std::to_string(v + 1) + " is not a sink");
    chosen |= bit(v);
    bits ^= o.frame().incident(v);
  };
  for (int u : from_sources) take(u, true);
  for (int v : from_sinks) take(v, false);
  return Orientation(o.frame_ptr(), bits);
}

/// Turns source u into a sink and sink v into a source; u, v nonadjacent.
inline Orientation double_flip(const Orientation& o, int u, int v) {
  const int us[] = {u};
  const int vs[] = {v};
  return ab_flip(o, us, vs);
}

// ---------------------------------------------------------------------------
// Enumeration.

struct OrientationOptions {
  int max_edges = 24;             // enumerate_acyclic / partitions
  int max_extension_order = 10;   // linear extension listings
};

namespace detail {

inline void check_edge_cap(const EdgeFrame& frame, const OrientationOptions& options) {
  if (frame.edge_count() > options.max_edges) {
    throw ResourceLimit("acyclic orientation enumeration is limited to " +
                        std::to_string(options.max_edges) + " edges, graph has " +
                        std::to_string(frame.edge_count()));
  }
}

}  // namespace detail

/// All acyclic orientations as sorted raw bit vectors. Edges are decided in
/// canonical order and a direction is rejected as soon as it closes a cycle,
/// so only acyclic orientations are ever materialised.
inline std::vector<OrientationBits> acyclic_orientation_bits(const EdgeFrame& frame,
                                                             const OrientationOptions& options = {}) {
  detail::check_edge_cap(frame, options);
  const int n = frame.order();
  const int edges = frame.edge_count();
  std::vector<OrientationBits> out;
  // reach[w] holds every vertex reachable from w, including w.
  std::array<VertexMask, kMaxVertices> reach{};
  for (int v = 0; v < n; ++v) reach[v] = bit(v);
  auto add_arc = [&](std::array<VertexMask, kMaxVertices>& r, int tail, int head) {
    for (int w = 0; w < n; ++w) {
      if ((r[w] & bit(tail)) != 0) r[w] |= r[head];
    }
  };
  auto assign = [&](auto&& self, int e, OrientationBits bits,
                    const std::array<VertexMask, kMaxVertices>& r) -> void {
    if (e == edges) {
      out.push_back(bits);
      return;
    }
    const Edge& ed = frame.edge(e);
    if ((r[ed.v] & bit(ed.u)) == 0) {
      auto next = r;
      add_arc(next, ed.u, ed.v);
      self(self, e + 1, bits, next);
    }
    if ((r[ed.u] & bit(ed.v)) == 0) {
      auto next = r;
      add_arc(next, ed.v, ed.u);
      self(self, e + 1, bits | (OrientationBits{1} << e), next);
    }
  };
  assign(assign, 0, 0, reach);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Orientation> enumerate_acyclic(const Graph& g, const OrientationOptions& options = {}) {
  const FramePtr frame = make_frame(g);
  std::vector<Orientation> out;
  for (OrientationBits b : acyclic_orientation_bits(*frame, options)) out.emplace_back(frame, b);
  return out;
}

// ---------------------------------------------------------------------------
// Equivalence classes under moves.

struct FlipKind {
  enum class Tag { toric, double_flip, local_double_flip, ab_flip };
  Tag tag = Tag::toric;
  int a = 0;  // only for ab_flip: classes are closed under (a,b)- and (b,a)-flips
  int b = 0;

  static FlipKind toric() { return {Tag::toric, 0, 1}; }
  static FlipKind double_flip() { return {Tag::double_flip, 1, 1}; }
  static FlipKind local_double_flip() { return {Tag::local_double_flip, 1, 1}; }
  static FlipKind ab(int a, int b) {
    detail::require(a >= 0 && b >= 0, "(a,b)-flip sizes must be nonnegative");
    return {Tag::ab_flip, a, b};
  }

  friend bool operator==(const FlipKind&, const FlipKind&) = default;
};

inline std::string to_string(const FlipKind& kind) {
  switch (kind.tag) {
    case FlipKind::Tag::toric: return "toric";
    case FlipKind::Tag::double_flip: return "double_flip";
    case FlipKind::Tag::local_double_flip: return "local_double_flip";
    case FlipKind::Tag::ab_flip: return "ab_flip:" + std::to_string(kind.a) + "," + std::to_string(kind.b);
  }
  return "?";
}

/// Partition of Acyc(G) into move classes. Classes are sorted by their least
/// member, and members within a class are sorted.
class OrientationPartition {
 public:
  OrientationPartition(FramePtr frame, FlipKind kind, std::vector<std::vector<OrientationBits>> classes)
      : frame_(std::move(frame)), kind_(kind), classes_(std::move(classes)) {
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      for (OrientationBits b : classes_[c]) class_of_.emplace(b, static_cast<int>(c));
    }
  }

  const FramePtr& frame_ptr() const { return frame_; }
  const EdgeFrame& frame() const { return *frame_; }
  const FlipKind& kind() const { return kind_; }
  std::size_t size() const { return classes_.size(); }
  const std::vector<OrientationBits>& members_bits(int c) const { return classes_.at(c); }
  const std::vector<std::vector<OrientationBits>>& classes() const { return classes_; }

  std::vector<Orientation> members(int c) const {
    std::vector<Orientation> out;
    for (OrientationBits b : classes_.at(c)) out.emplace_back(frame_, b);
    return out;
  }

  /// Class holding `bits`, or -1 if it is not an acyclic orientation.
  int class_of(OrientationBits bits) const {
    auto it = class_of_.find(bits);
    return it == class_of_.end() ? -1 : it->second;
  }
  int class_of(const Orientation& o) const { return class_of(o.bits()); }

 private:
  FramePtr frame_;
  FlipKind kind_;
  std::vector<std::vector<OrientationBits>> classes_;
  std::unordered_map<OrientationBits, int> class_of_;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

/// Calls emit(new_bits) for every single move of the given kind.
template <typename Emit>
void for_each_move(const EdgeFrame& frame, OrientationBits bits, const FlipKind& kind,
                   std::span<const int> component_of, Emit&& emit) {
  const Graph& g = frame.graph();
  const auto m = arc_masks(frame, bits);
  const VertexMask src = source_mask(frame, m);
  const VertexMask snk = sink_mask(frame, m);
  switch (kind.tag) {
    case FlipKind::Tag::toric:
      for (int v : members(src | snk)) emit(bits ^ frame.incident(v));
      return;
    case FlipKind::Tag::double_flip:
    case FlipKind::Tag::local_double_flip: {
      const bool local = kind.tag == FlipKind::Tag::local_double_flip;
      for (int u : members(src)) {
        for (int v : members(snk & ~g.neighbors(u) & ~bit(u))) {
          if (local && component_of[u] != component_of[v]) continue;
          emit(bits ^ frame.incident(u) ^ frame.incident(v));
        }
      }
      return;
    }
    case FlipKind::Tag::ab_flip: {
      const std::vector<int> src_list = members(src);
      const std::vector<int> snk_list = members(snk);
      auto run = [&](int a, int b) {
        // Pick a sources, then b sinks, keeping chosen vertices pairwise
        // distinct and nonadjacent.
        auto pick_sinks = [&](auto&& self, std::size_t from, int left, VertexMask blocked,
                              OrientationBits acc) -> void {
          if (left == 0) {
            emit(acc);
            return;
          }
          for (std::size_t i = from; i < snk_list.size(); ++i) {
            const int v = snk_list[i];
            if ((blocked & bit(v)) != 0) continue;
            self(self, i + 1, left - 1, blocked | bit(v) | g.neighbors(v), acc ^ frame.incident(v));
          }
        };
        auto pick_sources = [&](auto&& self, std::size_t from, int left, VertexMask blocked,
                                OrientationBits acc) -> void {
          if (left == 0) {
            pick_sinks(pick_sinks, 0, b, blocked, acc);
            return;
          }
          for (std::size_t i = from; i < src_list.size(); ++i) {
            const int u = src_list[i];
            if ((blocked & bit(u)) != 0) continue;
            self(self, i + 1, left - 1, blocked | bit(u) | g.neighbors(u), acc ^ frame.incident(u));
          }
        };
        pick_sources(pick_sources, 0, a, 0, bits);
      };
      run(kind.a, kind.b);
      if (kind.a != kind.b) run(kind.b, kind.a);
      return;
    }
  }
}

}  // namespace detail

inline OrientationPartition partition_by_moves(const Graph& g, FlipKind kind,
                                               const OrientationOptions& options = {}) {
  const FramePtr frame = make_frame(g);
  const std::vector<OrientationBits> all = acyclic_orientation_bits(*frame, options);
  std::vector<int> component_of(g.order(), 0);
  {
    int c = 0;
    for (VertexMask comp : connected_components(g)) {
      for (int v : members(comp)) component_of[v] = c;
      ++c;
    }
  }
  detail::UnionFind uf(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    detail::for_each_move(*frame, all[i], kind, component_of, [&](OrientationBits next) {
      auto it = std::lower_bound(all.begin(), all.end(), next);
      if (it == all.end() || *it != next) {
        throw std::logic_error("move produced a cyclic orientation");
      }
      uf.unite(i, static_cast<std::size_t>(it - all.begin()));
    });
  }
  // Roots are least indices, so scanning in order yields classes sorted by
  // least member.
  std::vector<std::vector<OrientationBits>> classes;
  std::vector<int> slot(all.size(), -1);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::size_t r = uf.find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[slot[r]].push_back(all[i]);
  }
  return OrientationPartition(frame, kind, std::move(classes));
}

// ---------------------------------------------------------------------------
// Reachability order and linear extensions.

/// The poset i <= j iff the orientation has a directed path from i to j.
class ReachabilityOrder {
 public:
  explicit ReachabilityOrder(const Orientation& o) : n_(o.frame().order()) {
    const auto m = detail::arc_masks(o.frame(), o.bits());
    detail::require(detail::acyclic(o.frame(), m), "orientation is not acyclic");
    // Process vertices sinks-first so every successor is already closed.
    VertexMask done = 0;
    while (done != o.graph().vertices()) {
      for (int v = 0; v < n_; ++v) {
        if ((done & bit(v)) != 0 || (m.out[v] & ~done) != 0) continue;
        up_[v] = bit(v);
        for (int w : members(m.out[v])) up_[v] |= up_[w];
        done |= bit(v);
      }
    }
  }

  int order() const { return n_; }
  bool less_equal(int a, int b) const { return (up_[a] & bit(b)) != 0; }
  bool comparable(int a, int b) const { return less_equal(a, b) || less_equal(b, a); }
  VertexMask above(int a) const { return up_[a]; }

  bool is_linear_extension(const Permutation& sigma) const {
    if (sigma.size() != n_) return false;
    VertexMask placed = 0;
    for (int i = 0; i < n_; ++i) {
      const int v = sigma[i];
      // Nothing already placed may lie strictly above v.
      for (int w : members(placed)) {
        if (less_equal(v, w)) return false;
      }
      placed |= bit(v);
    }
    return true;
  }

 private:
  int n_ = 0;
  std::array<VertexMask, kMaxVertices> up_{};
};

/// All linear extensions in lexicographic order.
inline std::vector<Permutation> linear_extensions(const Orientation& o, const OrientationOptions& options = {}) {
  const int n = o.frame().order();
  if (n > options.max_extension_order) {
    throw ResourceLimit("linear extension listing is limited to " +
                        std::to_string(options.max_extension_order) + " vertices");
  }
  const auto m = detail::arc_masks(o.frame(), o.bits());
  detail::require(detail::acyclic(o.frame(), m), "orientation is not acyclic");
  std::vector<Permutation> out;
  std::vector<int> word;
  word.reserve(n);
  auto place = [&](auto&& self, VertexMask placed) -> void {
    if (static_cast<int>(word.size()) == n) {
      out.push_back(Permutation::from_images(word));
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((placed & bit(v)) != 0 || (m.in[v] & ~placed) != 0) continue;
      word.push_back(v);
      self(self, placed | bit(v));
      word.pop_back();
    }
  };
  place(place, 0);
  return out;
}

/// Union of the linear extensions of every member of class c, sorted. The
/// union is disjoint because each permutation determines its orientation.
inline std::vector<Permutation> linear_extensions_of_class(const OrientationPartition& partition, int c,
                                                           const OrientationOptions& options = {}) {
  std::vector<Permutation> out;
  for (const Orientation& o : partition.members(c)) {
    auto part = linear_extensions(o, options);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Toggle at positions (i, i+1): swap iff the two entries are incomparable.
inline Permutation toggle(const ReachabilityOrder& order, const Permutation& sigma, int i) {
  detail::require(i >= 0 && i + 1 < sigma.size(), "toggle position out of range");
  detail::require(order.is_linear_extension(sigma), "permutation is not a linear extension");
  return order.comparable(sigma[i], sigma[i + 1]) ? sigma : sigma.swapped(i, i + 1);
}

inline Permutation toggle(const Orientation& o, const Permutation& sigma, int i) {
  return toggle(ReachabilityOrder(o), sigma, i);
}

// ---------------------------------------------------------------------------
// The map on double-flip classes induced by flipping a source into a sink.

#ifdef NDEBUG
inline constexpr bool kVerifyPhiChoices = false;
#else
inline constexpr bool kVerifyPhiChoices = true;
#endif

/// Class of the orientation obtained from any member of class c by flipping
/// any of its sources. With verify set, every (member, source) choice is
/// tried and a disagreement raises std::logic_error.
inline int phi(const OrientationPartition& partition, int c, bool verify = kVerifyPhiChoices) {
  detail::require(partition.kind().tag == FlipKind::Tag::double_flip,
                  "phi is defined on the double-flip partition");
  detail::require(c >= 0 && static_cast<std::size_t>(c) < partition.size(), "class index out of range");
  const EdgeFrame& frame = partition.frame();
  auto image = [&](OrientationBits bits, int source) {
    return partition.class_of(bits ^ frame.incident(source));
  };
  const OrientationBits first = partition.members_bits(c).front();
  const VertexMask src = detail::source_mask(frame, detail::arc_masks(frame, first));
  const int result = image(first, std::countr_zero(src));
  if (verify) {
    for (OrientationBits b : partition.members_bits(c)) {
      for (int s : members(detail::source_mask(frame, detail::arc_masks(frame, b)))) {
        if (image(b, s) != result) throw std::logic_error("phi depends on the chosen representative");
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Text form: arcs "a>b" in canonical edge order, 1-indexed.

inline std::string to_string(const Orientation& o) {
  std::string out;
  for (int e = 0; e < o.frame().edge_count(); ++e) {
    if (e > 0) out.push_back(',');
    const auto [tail, head] = o.arc(e);
    out += std::to_string(tail + 1) + ">" + std::to_string(head + 1);
  }
  return out;
}

inline Orientation parse_orientation(const FramePtr& frame, std::string_view text) {
  OrientationBits bits = 0;
  OrientationBits seen = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string_view arc = text.substr(start, end - start);
    const std::size_t gt = arc.find('>');
    detail::require(gt != std::string_view::npos, "arc must have the form a>b");
    int tail = 0, head = 0;
    try {
      tail = std::stoi(std::string(arc.substr(0, gt))) - 1;
      head = std::stoi(std::string(arc.substr(gt + 1))) - 1;
    } catch (const std::exception&) {
      throw InvalidArgument("arc endpoints must be integers");
    }
    const int e = frame->edge_index(tail, head);
    detail::require(e >= 0, "arc is not an edge of the graph");
    detail::require(((seen >> e) & 1) == 0, "edge oriented twice");
    seen |= OrientationBits{1} << e;
    if (tail > head) bits |= OrientationBits{1} << e;
    start = end + 1;
  }
  detail::require(seen == frame->all_edges(), "every edge must be oriented exactly once");
  return Orientation(frame, bits);
}

}  // namespace fsg
