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

#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "fsgraph/fsgraph.hpp"

namespace {

using namespace fsg;

constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;

struct RunConfig {
  std::uint64_t state_cap = 400000;
  std::uint64_t listing_cap = 10000;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 1;
};

struct GraphArgs {
  std::string x, y, g, family;
};

Limits limits_for(const RunConfig& cfg) {
  Limits l;
  l.state_cap = cfg.state_cap;
  l.max_order = kMaxPermutationSize;
  return l;
}

Graph require_graph(const std::string& spec, const std::string& fallback, const char* flag) {
  if (!spec.empty()) return parse_graph_spec(spec);
  if (!fallback.empty()) return parse_family(fallback);
  throw InvalidArgument(std::string("missing ") + flag);
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

void add_graph_flags(CLI::App* cmd, GraphArgs& args, bool pair) {
  if (pair) {
    cmd->add_option("--x", args.x, "graph X: JSON, graph6, family:name:params or @file");
    cmd->add_option("--y", args.y, "graph Y");
    cmd->add_option("--family", args.family, "name:params for X when --x is absent");
  } else {
    cmd->add_option("--g", args.g, "graph G: JSON, graph6, family:name:params or @file");
    cmd->add_option("--family", args.family, "name:params for G when --g is absent");
  }
}

FlipKind parse_kind(const std::string& text) {
  if (text == "toric") return FlipKind::toric();
  if (text == "double_flip") return FlipKind::double_flip();
  if (text == "local_double_flip") return FlipKind::local_double_flip();
  if (text.starts_with("ab:")) {
    const std::string rest = text.substr(3);
    const std::size_t comma = rest.find(',');
    try {
      if (comma != std::string::npos) {
        return FlipKind::ab(std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1)));
      }
    } catch (const std::logic_error&) {
    }
  }
  throw InvalidArgument("unknown move kind: " + text + " (toric, double_flip, local_double_flip, ab:a,b)");
}

// oracle-sweep: random instances checked against brute force.

struct SweepResult {
  Status status = Status::unknown;
  std::string theorem;
  std::uint64_t brute_count = 0;
  bool certificate_ok = true;
};

Json sweep(int n, int count, double p, const RunConfig& cfg) {
  detail::require(n >= 1 && n <= 8, "oracle-sweep supports 1 <= n <= 8");
  detail::require(count >= 0, "count must be nonnegative");
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::pair<Graph, Graph>> instances;
  for (int i = 0; i < count; ++i) {
    Graph x = random_graph(n, p, rng);
    Graph y = random_graph(n, p, rng);
    instances.emplace_back(std::move(x), std::move(y));
  }
  std::vector<SweepResult> results(instances.size());
  std::atomic<std::size_t> next{0};
  const Limits limits = limits_for(cfg);
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
      const auto& [x, y] = instances[i];
      const ConnectivityVerdict v = decide_connectivity(x, y);
      results[i] = {v.status, v.theorem, components(FSInstance(x, y), limits).component_count,
                    verify_certificate(x, y, v)};
    }
  };
  const unsigned workers = std::min<unsigned>(cfg.workers, std::max<std::size_t>(1, instances.size()));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();

  std::map<std::string, std::uint64_t> by_theorem;
  std::uint64_t contradictions = 0, unknown = 0, bad_certificates = 0, connected = 0;
  Json failures = Json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const SweepResult& r = results[i];
    connected += r.brute_count == 1;
    bad_certificates += !r.certificate_ok;
    if (r.status == Status::unknown) {
      ++unknown;
      continue;
    }
    ++by_theorem[r.theorem];
    if ((r.status == Status::connected) != (r.brute_count == 1)) {
      ++contradictions;
      failures.push_back({{"index", i},
                          {"x", to_graph6(instances[i].first)},
                          {"y", to_graph6(instances[i].second)},
                          {"theorem", r.theorem},
                          {"brute_count", r.brute_count}});
    }
  }
  Json theorems = Json::object();
  for (const auto& [name, k] : by_theorem) theorems[name] = k;
  return Json{{"n", n},
              {"instances", count},
              {"seed", cfg.seed},
              {"connected", connected},
              {"unknown", unknown},
              {"contradictions", contradictions},
              {"bad_certificates", bad_certificates},
              {"theorems", std::move(theorems)},
              {"failures", std::move(failures)}};
}

int run(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("FS_STATE_CAP")) {
    try {
      cfg.state_cap = std::stoull(env);
    } catch (const std::logic_error&) {
      throw InvalidArgument(std::string("FS_STATE_CAP is not an integer: ") + env);
    }
  }

  CLI::App app{"Friends-and-strangers graphs: components, orientation classes and connectivity certificates"};
  app.require_subcommand(1);
  app.add_option("--state-cap", cfg.state_cap, "max FS vertices explored by brute force")
      ->check(CLI::PositiveNumber);
  app.add_option("--listing-cap", cfg.listing_cap, "max permutations listed in structure reports")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers, "threads for oracle-sweep")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for oracle-sweep");
  app.fallthrough();

  GraphArgs args;
  std::string format = "json";
  std::string sigma_text;
  std::string kind_text = "toric";
  bool list = false;
  long long tx = 2, ty = 0;
  bool no_hereditary = false;
  int sweep_n = 6, sweep_count = 100;
  double sweep_p = 0.5;
  std::function<int()> action;

  auto* fs = app.add_subcommand("fs", "brute-force exploration of FS(X, Y)");
  fs->require_subcommand(1);
  auto* fs_components = fs->add_subcommand("components", "component count, sizes and least representatives");
  add_graph_flags(fs_components, args, true);
  fs_components->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  fs_components->callback([&] {
    action = [&] {
      const FSInstance inst(require_graph(args.x, args.family, "--x"), require_graph(args.y, "", "--y"));
      if (format == "dot") {
        write_fs_dot(std::cout, inst);
      } else {
        emit(report_to_json(inst, components(inst, limits_for(cfg))));
      }
      return 0;
    };
  });
  auto* fs_connected = fs->add_subcommand("connected", "whether FS(X, Y) is connected");
  add_graph_flags(fs_connected, args, true);
  fs_connected->callback([&] {
    action = [&] {
      const FSInstance inst(require_graph(args.x, args.family, "--x"), require_graph(args.y, "", "--y"));
      emit(Json{{"connected", is_connected(inst, limits_for(cfg))}});
      return 0;
    };
  });
  auto* fs_neighbors = fs->add_subcommand("neighbors", "friendly swaps from one permutation");
  add_graph_flags(fs_neighbors, args, true);
  fs_neighbors->add_option("--sigma", sigma_text, "one-line word, e.g. 31524")->required();
  fs_neighbors->callback([&] {
    action = [&] {
      const FSInstance inst(require_graph(args.x, args.family, "--x"), require_graph(args.y, "", "--y"));
      const Permutation sigma = parse_permutation(sigma_text);
      emit(Json{{"sigma", to_string(sigma)}, {"neighbors", permutations_to_json(friendly_neighbors(inst, sigma))}});
      return 0;
    };
  });

  auto structure_options = [&] {
    StructureOptions o;
    o.list_classes = list;
    o.listing_cap = cfg.listing_cap;
    return o;
  };
  auto add_structure = [&](const char* name, const char* help, auto body) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->require_subcommand(1);
    auto* st = cmd->add_subcommand("structure", "component structure from orientation classes");
    st->add_option("--y", args.y, "graph Y")->required();
    st->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    st->add_flag("--list", list, "list classes with their linear extensions");
    st->callback([&, body] {
      action = [&, body] {
        body(parse_graph_spec(args.y));
        return 0;
      };
    });
  };
  add_structure("path", "X = Path_n", [&](const Graph& y) {
    if (format == "dot") return write_graph_dot(std::cout, complement(y), "complement");
    emit(structure_to_json(path_fs_structure(y, structure_options())));
  });
  add_structure("cycle", "X = Cycle_n", [&](const Graph& y) {
    if (format == "dot") return write_graph_dot(std::cout, complement(y), "complement");
    emit(structure_to_json(cycle_fs_structure(y, structure_options())));
  });
  add_structure("star", "X = Star_n with biconnected Y", [&](const Graph& y) {
    if (format == "dot") return write_graph_dot(std::cout, y, "Y");
    auto s = star_fs_structure(y);
    if (!s) throw InvalidArgument("the star case needs a biconnected Y");
    emit(structure_to_json(*s));
  });

  auto* acyc = app.add_subcommand("acyc", "acyclic orientations and their classes");
  acyc->require_subcommand(1);
  auto* acyc_enum = acyc->add_subcommand("enumerate", "all acyclic orientations");
  add_graph_flags(acyc_enum, args, false);
  acyc_enum->callback([&] {
    action = [&] {
      const auto all = enumerate_acyclic(require_graph(args.g, args.family, "--g"));
      Json list_json = Json::array();
      for (const Orientation& o : all) list_json.push_back(orientation_to_json(o));
      emit(Json{{"count", all.size()}, {"orientations", std::move(list_json)}});
      return 0;
    };
  });
  auto* acyc_part = acyc->add_subcommand("partition", "classes under a move kind");
  add_graph_flags(acyc_part, args, false);
  acyc_part->add_option("--kind", kind_text, "toric, double_flip, local_double_flip or ab:a,b");
  acyc_part->callback([&] {
    action = [&] {
      emit(partition_to_json(partition_by_moves(require_graph(args.g, args.family, "--g"), parse_kind(kind_text))));
      return 0;
    };
  });
  auto* acyc_phi = acyc->add_subcommand("phi", "the class map on double-flip classes");
  add_graph_flags(acyc_phi, args, false);
  acyc_phi->callback([&] {
    action = [&] {
      const OrientationPartition p =
          partition_by_moves(require_graph(args.g, args.family, "--g"), FlipKind::double_flip());
      Json image = Json::array();
      for (int c = 0; c < static_cast<int>(p.size()); ++c) image.push_back(phi(p, c, true));
      Json j = partition_to_json(p);
      j["phi"] = std::move(image);
      emit(j);
      return 0;
    };
  });

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial evaluations");
  tutte->require_subcommand(1);
  auto* tutte_cmd = tutte->add_subcommand("eval", "exact T_G(x, y)");
  add_graph_flags(tutte_cmd, args, false);
  tutte_cmd->add_option("--x", tx, "integer x")->required();
  tutte_cmd->add_option("--y", ty, "integer y")->required();
  tutte_cmd->callback([&] {
    action = [&] {
      std::cout << big_to_string(tutte_eval(require_graph(args.g, args.family, "--g"), tx, ty)) << '\n';
      return 0;
    };
  });

  auto* decide = app.add_subcommand("decide", "connectivity verdict with a checkable witness");
  add_graph_flags(decide, args, true);
  decide->add_flag("--no-hereditary", no_hereditary, "skip the recursive sufficiency search");
  decide->callback([&] {
    action = [&] {
      DecideOptions o;
      o.use_hereditary = !no_hereditary;
      emit(verdict_to_json(
          decide_connectivity(require_graph(args.x, args.family, "--x"), require_graph(args.y, "", "--y"), o)));
      return 0;
    };
  });

  auto* oracle = app.add_subcommand("oracle-sweep", "random instances: verdicts against brute force");
  oracle->add_option("--n", sweep_n, "order")->check(CLI::Range(1, 8));
  oracle->add_option("--count", sweep_count, "instances")->check(CLI::NonNegativeNumber);
  oracle->add_option("--p", sweep_p, "edge probability")->check(CLI::Range(0.0, 1.0));
  oracle->callback([&] {
    action = [&] {
      const Json j = sweep(sweep_n, sweep_count, sweep_p, cfg);
      emit(j);
      return j["contradictions"].get<std::uint64_t>() == 0 && j["bad_certificates"].get<std::uint64_t>() == 0 ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }
  return action ? action() : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fsg::InvalidArgument& e) {
    std::cerr << "fsgraph: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const fsg::InvalidMove& e) {
    std::cerr << "fsgraph: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const fsg::ResourceLimit& e) {
    std::cerr << "fsgraph: " << e.what() << '\n';
    return kExitResource;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "fsgraph: " << e.what() << '\n';
    return kExitInvalid;
  }
}
