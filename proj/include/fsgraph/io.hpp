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

// Text formats: JSON graphs {"n", "edges"} with 1-indexed vertices, graph6,
// Graphviz, family specifications, and JSON reports.

#pragma once

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fsgraph/error.hpp"
#include "fsgraph/fs.hpp"
#include "fsgraph/graph.hpp"
#include "fsgraph/orientation.hpp"
#include "fsgraph/theorems.hpp"

namespace fsg {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Graphs.

inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
  return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const Json& j) {
  detail::require(j.is_object() && j.contains("n") && j.at("n").is_number_integer(),
                  "graph JSON needs an integer field \"n\"");
  const int n = j.at("n").get<int>();
  detail::require(n >= 1 && n <= kMaxVertices, "graph JSON: n must lie in [1, 64]");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    detail::require(j.at("edges").is_array(), "graph JSON: \"edges\" must be an array");
    for (const Json& e : j.at("edges")) {
      detail::require(e.is_array() && e.size() == 2 && e[0].is_number_integer() && e[1].is_number_integer(),
                      "graph JSON: each edge must be a pair of integers");
      const int a = e[0].get<int>() - 1;
      const int b = e[1].get<int>() - 1;
      detail::require(a >= 0 && b >= 0 && a < n && b < n, "graph JSON: edge endpoint out of range");
      edges.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  return Graph(n, edges);
}

inline Graph graph_from_json_text(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("malformed graph JSON: ") + e.what());
  }
  return graph_from_json(j);
}

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  detail::require(n <= 62, "graph6 output supports n <= 62");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  detail::require(!text.empty(), "empty graph6 string");
  const int n = static_cast<unsigned char>(text[0]) - 63;
  detail::require(n >= 1 && n <= 62, "graph6 input supports 1 <= n <= 62");
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  detail::require(text.size() == 1 + (pairs + 5) / 6, "graph6 string has the wrong length");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int c = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      detail::require(c >= 0 && c < 64, "graph6 string has an invalid character");
      if ((c >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

/// "name:params" with name in complete, edgeless, path, cycle, star, dynkin_d
/// (param n), lollipop and complete_bipartite (params k,m), theta0 (none).
inline Graph parse_family(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string name(text.substr(0, colon));
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    std::string rest(text.substr(colon + 1));
    std::stringstream ss(rest);
    std::string field;
    while (std::getline(ss, field, ',')) {
      try {
        std::size_t used = 0;
        params.push_back(std::stoi(field, &used));
        detail::require(used == field.size(), "");
      } catch (const std::exception&) {
        throw InvalidArgument("family parameters must be integers: " + rest);
      }
    }
  }
  auto want = [&](std::size_t count) {
    detail::require(params.size() == count, "family " + name + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (name == "theta0") {
    want(0);
    return theta0_graph();
  }
  if (name == "lollipop" || name == "complete_bipartite") {
    want(2);
    detail::require(params[0] >= 0 && params[1] >= 1, "family parameters out of range");
    return name == "lollipop" ? lollipop_graph(params[0], params[1])
                              : complete_bipartite_graph(params[0], params[0] + params[1]);
  }
  want(1);
  const int n = params[0];
  if (name == "complete") return complete_graph(n);
  if (name == "edgeless") return edgeless_graph(n);
  if (name == "path") return path_graph(n);
  if (name == "cycle") return cycle_graph(n);
  if (name == "star") return star_graph(n);
  if (name == "dynkin_d") return dynkin_d_graph(n);
  throw InvalidArgument("unknown graph family: " + name);
}

/// JSON (leading '{'), "family:name:params", "@path" (file holding any of
/// these forms), or graph6.
inline Graph parse_graph_spec(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  detail::require(!text.empty(), "empty graph specification");
  if (text.front() == '{') return graph_from_json_text(text);
  if (text.starts_with("family:")) return parse_family(text.substr(7));
  if (text.front() == '@') {
    const std::string path(text.substr(1));
    std::ifstream in(path);
    detail::require(static_cast<bool>(in), "cannot read graph file: " + path);
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    detail::require(body.empty() || body.front() != '@', "graph files may not redirect to other files");
    return parse_graph_spec(body);
  }
  return parse_graph6(text);
}

inline void write_graph_dot(std::ostream& os, const Graph& g, std::string_view name = "G") {
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v + 1 << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u + 1 << " -- " << e.v + 1 << ";\n";
  os << "}\n";
}

// ---------------------------------------------------------------------------
// Reports.

inline std::string big_to_string(const BigInt& v) { return v.str(); }

/// Exact integers: numbers when they fit in 64 bits, decimal strings beyond.
inline Json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) return Json(v.convert_to<std::uint64_t>());
  return Json(v.str());
}

inline Json permutations_to_json(const std::vector<Permutation>& perms) {
  Json out = Json::array();
  for (const Permutation& p : perms) out.push_back(to_string(p));
  return out;
}

inline Json report_to_json(const FSInstance& inst, const ComponentReport& r) {
  return Json{{"n", inst.order()},
              {"component_count", r.component_count},
              {"sizes", r.sizes},
              {"representatives", permutations_to_json(r.representatives)}};
}

inline Json orientation_to_json(const Orientation& o) { return Json(to_string(o)); }

inline Json partition_to_json(const OrientationPartition& p) {
  Json classes = Json::array();
  for (std::size_t c = 0; c < p.size(); ++c) {
    Json members = Json::array();
    for (const Orientation& o : p.members(static_cast<int>(c))) members.push_back(to_string(o));
    classes.push_back(std::move(members));
  }
  return Json{{"kind", to_string(p.kind())}, {"class_count", p.size()}, {"classes", std::move(classes)}};
}

inline Json extension_classes_to_json(const std::vector<ExtensionClass>& classes) {
  Json out = Json::array();
  for (const ExtensionClass& c : classes) {
    Json orientations = Json::array();
    for (const Orientation& o : c.orientations) orientations.push_back(to_string(o));
    out.push_back({{"orientations", std::move(orientations)}, {"extensions", permutations_to_json(c.extensions)}});
  }
  return out;
}

inline Json structure_to_json(const PathStructure& s) {
  Json j{{"component_count", big_to_json(s.component_count)}};
  if (s.classes_listed) j["classes"] = extension_classes_to_json(s.classes);
  return j;
}

inline Json structure_to_json(const CycleStructure& s) {
  Json j{{"component_count", big_to_json(s.component_count)},
         {"nu", s.nu},
         {"toric_count", big_to_json(s.toric_count)}};
  if (s.double_flip_classes) j["double_flip_classes"] = *s.double_flip_classes;
  if (s.classes_listed) j["classes"] = extension_classes_to_json(s.classes);
  return j;
}

inline Json structure_to_json(const StarStructure& s) {
  Json sizes = Json::array();
  for (const SizeClass& c : s.sizes) {
    sizes.push_back({{"size", big_to_json(c.size)}, {"multiplicity", big_to_json(c.multiplicity)}});
  }
  return Json{{"case", s.case_name}, {"component_count", big_to_json(s.component_count)}, {"sizes", std::move(sizes)}};
}

namespace detail {

inline Json mask_to_json(VertexMask m) {
  Json out = Json::array();
  for (int v : members(m)) out.push_back(v + 1);
  return out;
}

inline Json path_to_json(const std::vector<int>& path) {
  Json out = Json::array();
  for (int v : path) out.push_back(v + 1);
  return out;
}

}  // namespace detail

inline Json verdict_to_json(const ConnectivityVerdict& v) {
  Json witness = std::visit(
      [](const auto& w) -> Json {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, std::monostate> || std::is_same_v<W, SmallOrderWitness>) {
          return Json::object();
        } else if constexpr (std::is_same_v<W, FamilyWitness>) {
          Json j{{"family", w.family},
                 {"graph", w.roles_swapped ? "Y" : "X"},
                 {"isomorphism", detail::path_to_json(w.isomorphism)}};
          if (w.component_count) j["component_count"] = big_to_json(*w.component_count);
          return j;
        } else if constexpr (std::is_same_v<W, DisconnectedFactorWitness>) {
          Json comps = Json::array();
          for (VertexMask c : w.components) comps.push_back(detail::mask_to_json(c));
          return Json{{"graph", w.roles_swapped ? "Y" : "X"}, {"components", std::move(comps)}};
        } else if constexpr (std::is_same_v<W, BipartitionWitness>) {
          return Json{{"x_sides", {detail::mask_to_json(w.x_sides.first), detail::mask_to_json(w.x_sides.second)}},
                      {"y_sides", {detail::mask_to_json(w.y_sides.first), detail::mask_to_json(w.y_sides.second)}}};
        } else if constexpr (std::is_same_v<W, CutPathWitness>) {
          return Json{{"graph", w.roles_swapped ? "Y" : "X"},
                      {"path", detail::path_to_json(w.path)},
                      {"low_degree_vertex", w.low_degree_vertex + 1}};
        } else if constexpr (std::is_same_v<W, CutVertexWitness>) {
          return Json{{"x0", w.x0 + 1}, {"y0", w.y0 + 1}, {"matrix_count", w.matrix_count}};
        } else {
          return Json{{"graph", w.roles_swapped ? "Y" : "X"},
                      {"hamiltonian_path", detail::path_to_json(w.hamiltonian_path)},
                      {"steps", w.steps}};
        }
      },
      v.witness);
  Json j{{"status", to_string(v.status)}};
  if (v.status != Status::unknown) j["theorem"] = v.theorem;
  j["witness"] = std::move(witness);
  return j;
}

inline Json hereditary_to_json(const HereditaryResult& r) {
  Json trace = Json::array();
  for (const HereditaryStep& s : r.trace) {
    Json step{{"depth", s.depth}, {"order", s.order}, {"connected", s.connected}, {"method", s.method}};
    if (s.removed_x >= 0) step["removed_x"] = s.removed_x + 1;
    trace.push_back(std::move(step));
  }
  return Json{{"proven_connected", r.proven_connected},
              {"hamiltonian_path", detail::path_to_json(r.hamiltonian_path)},
              {"trace", std::move(trace)}};
}

}  // namespace fsg
