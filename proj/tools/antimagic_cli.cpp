// Copyright 2026 The Antimagic Authors.
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

// antimagic: construct, verify and search D-antimagic labelings of oriented
// graphs.
//
// Exit codes: 0 success / found / verified, 1 valid but negative result,
// 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "antimagic/constructions.hpp"
#include "antimagic/error.hpp"
#include "antimagic/io.hpp"
#include "antimagic/search.hpp"

namespace {

using namespace antimagic;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Graph given by file or by one generator flag.
struct GraphSource {
  std::string file;
  std::size_t path = 0;
  std::string orientation = "forward";
  std::size_t cycle = 0;
  std::string forest;

  void attach(CLI::App& cmd) {
    auto* f = cmd.add_option("--graph", file, "graph JSON file");
    auto* p = cmd.add_option("--path", path, "path P_n");
    cmd.add_option("--orientation", orientation,
                   "path orientation: forward, theta-prime, theta-double-prime, or a "
                   "bitmask like 0b1011 (bit i: v{i+1} -> v{i+2})");
    auto* c = cmd.add_option("--cycle", cycle, "unidirectional cycle C_n");
    auto* s = cmd.add_option("--forest", forest, "Phi-oriented linear forest, e.g. 2x3,1x5");
    f->excludes(p)->excludes(c)->excludes(s);
    p->excludes(c)->excludes(s);
    c->excludes(s);
  }

  bool given() const { return !file.empty() || path || cycle || !forest.empty(); }

  std::optional<LinearForestSpec> forest_spec() const {
    if (forest.empty()) return std::nullopt;
    return parse_forest_spec(forest);
  }

  // Returns the graph and, when the file holds a construction result, its
  // labeling and distance set.
  OrientedGraph load(std::optional<Labeling>* labeling = nullptr,
                     std::optional<DistanceSet>* d = nullptr) const {
    if (!file.empty()) {
      const Json j = parse_json(read_file(file));
      if (j.is_object() && j.contains("graph")) {
        if (labeling && j.contains("labeling")) *labeling = labeling_from_json(j["labeling"]);
        if (d && j.contains("D")) {
          *d = DistanceSet(j["D"].get<std::vector<std::size_t>>());
        }
        return graph_from_json(j["graph"]);
      }
      return graph_from_json(j);
    }
    if (path) {
      if (orientation == "forward") return build_path(path, PathOrientation::kForward);
      if (orientation == "theta-prime") return build_path(path, PathOrientation::kThetaPrime);
      if (orientation == "theta-double-prime") {
        return build_path(path, PathOrientation::kThetaDoublePrime);
      }
      return build_path(path, parse_bitmask(orientation));
    }
    if (cycle) return build_cycle(cycle);
    if (!forest.empty()) return build_forest(*forest_spec());
    throw UsageError("no graph given (use --graph, --path, --cycle or --forest)");
  }
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("ANTIMAGIC_BUDGET")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("ANTIMAGIC_BUDGET is not a count: ") + env);
  }
  return kDefaultBudget;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 1;
  std::size_t k = 1;
  std::string d;
  std::string spec;
  std::string out;
  std::string dot;
};

int run_construct(const ConstructArgs& a) {
  const auto need_d = [&] {
    if (a.d.empty()) throw UsageError("--D is required for family " + a.family);
    return parse_distance_set(a.d);
  };
  std::optional<ConstructionResult> result;
  if (a.family == "uni-path") {
    result = label_unidirectional_path(a.n, need_d());
  } else if (a.family == "theta-prime") {
    result = label_theta_prime(a.n, a.d.empty() ? DistanceSet{0, a.n >= 2 ? a.n - 2 : 0}
                                                : parse_distance_set(a.d));
  } else if (a.family == "theta-double-prime") {
    result = label_theta_double_prime(
        a.n, a.d.empty() ? DistanceSet{0, a.n >= 2 ? a.n - 2 : 0} : parse_distance_set(a.d));
  } else if (a.family == "mpn") {
    result = label_mpn(a.m, a.n, a.k);
  } else if (a.family == "mpn-general") {
    result = label_mpn_general(a.m, a.n, need_d());
  } else if (a.family == "forest") {
    if (a.spec.empty()) throw UsageError("--spec is required for family forest");
    result = label_forest(parse_forest_spec(a.spec));
  } else {
    throw UsageError("unknown family " + a.family);
  }
  write_output(a.out, dump(to_json(*result)));
  if (!a.dot.empty()) {
    write_output(a.dot, to_dot(result->graph, {result->labeling, result->weights,
                                               result->forest}));
  }
  return kExitOk;
}

struct VerifyArgs {
  GraphSource source;
  std::string labeling_file;
  std::string labels;
  std::string d;
  bool clamp = false;
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  std::optional<Labeling> f;
  std::optional<DistanceSet> d;
  const auto g = a.source.load(&f, &d);
  if (!a.labeling_file.empty()) f = labeling_from_json(parse_json(read_file(a.labeling_file)));
  if (!a.labels.empty()) {
    std::vector<Label> values;
    std::istringstream in(a.labels);
    for (std::string item; std::getline(in, item, ',');) {
      std::size_t used = 0;
      unsigned long value = 0;
      try {
        value = std::stoul(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != item.size()) throw UsageError("bad label '" + item + "'");
      values.push_back(static_cast<Label>(value));
    }
    if (values.size() != g.order()) throw UsageError("--labels needs one label per vertex");
    f = Labeling(std::move(values));
  }
  if (!a.d.empty()) d = parse_distance_set(a.d);
  if (!f) throw UsageError("no labeling given (use --labeling or --labels)");
  if (!d) throw UsageError("no distance set given (use --D)");
  if (f->size() != g.order()) {
    throw Error(ErrorKind::kInvalidLabeling, "labeling size does not match the graph order");
  }
  const auto policy = a.clamp ? DistancePolicy::kClamp : DistancePolicy::kStrict;
  const auto profile = weight_profile(DistanceMatrix(g), *f, *d, policy);
  const auto lambda = magic_constant(DistanceMatrix(g), *f, *d, policy);
  if (a.json) {
    Json j = to_json(profile);
    j["D"] = to_json(*d);
    j["lambda"] = lambda ? Json(*lambda) : Json(nullptr);
    std::cout << dump(j);
  } else {
    std::cout << "D = " << d->to_string() << "\nweights:";
    for (const Weight w : profile.weights) std::cout << ' ' << w;
    std::cout << "\n";
    if (profile.distinct) {
      std::cout << "D-antimagic: yes\n";
    } else {
      std::cout << "D-antimagic: no\ncollisions:";
      for (const auto& [u, v] : profile.collisions) {
        std::cout << ' ' << vertex_name(u) << '=' << vertex_name(v);
      }
      std::cout << "\n";
    }
    if (lambda) std::cout << "D-magic with constant " << *lambda << "\n";
  }
  return profile.distinct ? kExitOk : kExitNegative;
}

struct SearchArgs {
  GraphSource source;
  std::size_t order = 0;
  std::string d;
  bool magic = false;
  std::optional<Weight> lambda;
  std::optional<std::uint64_t> budget;
  unsigned jobs = 1;
  bool no_shortcut = false;
  bool clamp = false;
};

int run_search(const SearchArgs& a) {
  const auto d = parse_distance_set(a.d);
  SearchOptions options;
  options.budget = a.budget ? *a.budget : default_budget();
  options.jobs = a.jobs;
  options.neighborhood_shortcut = !a.no_shortcut;
  options.policy = a.clamp ? DistancePolicy::kClamp : DistancePolicy::kStrict;

  if (a.order) {
    if (a.source.given()) throw UsageError("--order excludes an explicit graph");
    if (!a.magic) throw UsageError("--order searches graphs and needs --magic");
    const auto report = find_magic_graph(a.order, d, a.lambda, options);
    std::cout << dump(to_json(report));
    return report.found() ? kExitOk : kExitNegative;
  }
  const auto g = a.source.load();
  if (a.magic) {
    Json list = Json::array();
    for (const auto& m : exhaustive_magic_search(g, d, options.policy)) {
      if (a.lambda && m.constant != *a.lambda) continue;
      Json entry = to_json(m.labeling);
      entry["lambda"] = m.constant;
      list.push_back(std::move(entry));
    }
    const bool any = !list.empty();
    std::cout << dump(Json{{"outcome", any ? "found" : "exhausted-none"},
                           {"magic_labelings", std::move(list)}});
    return any ? kExitOk : kExitNegative;
  }
  const auto report = exhaustive_labeling_search(g, d, options);
  std::cout << dump(to_json(report));
  return report.found() ? kExitOk : kExitNegative;
}

struct SweepArgs {
  std::string name;
  std::size_t n_max = 0;
  std::size_t order = 4;
  std::size_t order_min = 3;
  std::size_t order_max = 5;
  std::uint64_t trials = 0;
  std::vector<std::string> specs;
  std::vector<std::string> distance_sets;
  unsigned jobs = 1;
  bool json = false;
};

int run_sweep(const SweepArgs& a) {
  SearchOptions options;
  options.budget = default_budget();
  options.jobs = a.jobs;
  std::vector<CharacterizationCheck> checks;
  if (a.name == "path-characterizations") {
    checks = check_path_characterizations(a.n_max ? a.n_max : 6, options);
  } else if (a.name == "tree-characterization") {
    checks.push_back(check_tree_characterization(a.n_max ? a.n_max : 5, options));
  } else if (a.name == "forest-lemmas") {
    std::vector<LinearForestSpec> forests;
    const std::vector<std::string> default_specs{"2x2", "2x3", "3x2", "1x2,1x3", "2x4"};
    for (const auto& s : a.specs.empty() ? default_specs : a.specs) {
      forests.push_back(parse_forest_spec(s));
    }
    std::vector<DistanceSet> sets;
    const std::vector<std::string> default_sets{"0", "1", "2", "0,1", "0,2", "0,3",
                                                "1,2", "0,1,2", "2,3", "0,1,3"};
    for (const auto& s : a.distance_sets.empty() ? default_sets : a.distance_sets) {
      sets.push_back(parse_distance_set(s));
    }
    checks = check_forest_lemmas(forests, sets, options);
  } else if (a.name == "union-counterexample") {
    checks.push_back(check_union_counterexample());
  } else if (a.name == "duality") {
    checks.push_back(check_duality_sweep(a.order, a.trials));
  } else if (a.name == "magic-bounds") {
    checks.push_back(check_magic_bounds(a.order_min, a.order_max));
  } else if (a.name == "constructions") {
    checks.push_back(check_constructions());
  } else if (a.name == "neighborhood-sufficiency") {
    checks.push_back(check_neighborhood_sufficiency(a.order));
  } else {
    throw UsageError("unknown sweep " + a.name);
  }
  if (a.json) {
    Json list = Json::array();
    for (const auto& c : checks) list.push_back(to_json(c));
    std::cout << dump(list);
  } else {
    std::cout << render_table(checks);
  }
  for (const auto& c : checks) {
    if (!c.agree) return kExitNegative;
  }
  return kExitOk;
}

struct ExportArgs {
  GraphSource source;
  std::string format = "json";
  std::string labeling_file;
  std::string d;
  std::string out;
};

int run_export(const ExportArgs& a) {
  std::optional<Labeling> f;
  std::optional<DistanceSet> d;
  const auto g = a.source.load(&f, &d);
  if (a.format == "json") {
    write_output(a.out, dump(to_json(g)));
    return kExitOk;
  }
  if (a.format != "dot") throw UsageError("unknown format " + a.format);
  if (!a.labeling_file.empty()) f = labeling_from_json(parse_json(read_file(a.labeling_file)));
  if (!a.d.empty()) d = parse_distance_set(a.d);
  DotOptions options;
  options.labels = f;
  options.forest = a.source.forest_spec();
  if (f && d) options.weights = weight_profile(DistanceMatrix(g), *f, *d);
  write_output(a.out, to_dot(g, options));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, verify and search D-antimagic labelings of oriented graphs"};
  app.require_subcommand(1);

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "closed-form D-antimagic labelings");
  construct_cmd->add_option("--family", construct.family)
      ->required()
      ->check(CLI::IsMember({"uni-path", "theta-prime", "theta-double-prime", "mpn",
                             "mpn-general", "forest"}));
  construct_cmd->add_option("--n", construct.n, "path order");
  construct_cmd->add_option("--m", construct.m, "number of copies");
  construct_cmd->add_option("--k", construct.k, "k in D = {0,k} for mpn");
  construct_cmd->add_option("--D", construct.d, "distance set, e.g. 0,2,3");
  construct_cmd->add_option("--spec", construct.spec, "forest spec, e.g. 2x3,1x5,1x7");
  construct_cmd->add_option("--out", construct.out, "JSON output file (default stdout)");
  construct_cmd->add_option("--dot", construct.dot, "also write DOT to this file");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "check a labeling's D-weights");
  verify.source.attach(*verify_cmd);
  verify_cmd->add_option("--labeling", verify.labeling_file, "labeling JSON file");
  verify_cmd->add_option("--labels", verify.labels, "inline labels, e.g. 1,3,2");
  verify_cmd->add_option("--D", verify.d, "distance set");
  verify_cmd->add_flag("--clamp", verify.clamp, "let distances beyond the diameter match nothing");
  verify_cmd->add_flag("--json", verify.json, "JSON output");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "exhaustive labeling or magic-graph search");
  search.source.attach(*search_cmd);
  search_cmd->add_option("--order", search.order, "search all oriented graphs of this order");
  search_cmd->add_option("--D", search.d, "distance set")->required();
  search_cmd->add_flag("--magic", search.magic, "look for D-magic labelings");
  search_cmd->add_option("--lambda", search.lambda, "required magic constant");
  search_cmd->add_option("--budget", search.budget,
                         "candidate budget (default ANTIMAGIC_BUDGET or 10!)");
  search_cmd->add_option("--jobs", search.jobs, "worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_flag("--no-shortcut", search.no_shortcut,
                       "enumerate even when two vertices share a D-neighborhood");
  search_cmd->add_flag("--clamp", search.clamp, "let distances beyond the diameter match nothing");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "check a characterization against the oracle");
  sweep_cmd->add_option("check", sweep.name, "sweep name")
      ->required()
      ->check(CLI::IsMember({"path-characterizations", "tree-characterization",
                             "forest-lemmas", "union-counterexample", "duality",
                             "magic-bounds", "constructions", "neighborhood-sufficiency"}));
  sweep_cmd->add_option("--n-max", sweep.n_max, "largest order for path/tree sweeps");
  sweep_cmd->add_option("--order", sweep.order, "graph order for duality/neighborhood sweeps");
  sweep_cmd->add_option("--order-min", sweep.order_min, "smallest order for magic-bounds");
  sweep_cmd->add_option("--order-max", sweep.order_max, "largest order for magic-bounds");
  sweep_cmd->add_option("--trials", sweep.trials, "labelings per (graph, D); 0 = all");
  sweep_cmd->add_option("--spec", sweep.specs, "forest specs for forest-lemmas");
  sweep_cmd->add_option("--D", sweep.distance_sets, "distance sets for forest-lemmas");
  sweep_cmd->add_option("--jobs", sweep.jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--json", sweep.json, "JSON output");

  ExportArgs export_args;
  auto* export_cmd = app.add_subcommand("export", "re-emit a graph as canonical JSON or DOT");
  export_args.source.attach(*export_cmd);
  export_cmd->add_option("--input", export_args.source.file, "graph or construction JSON");
  export_cmd->add_option("--format", export_args.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("--labeling", export_args.labeling_file, "labeling JSON for DOT labels");
  export_cmd->add_option("--D", export_args.d, "distance set for DOT weights");
  export_cmd->add_option("--out", export_args.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct_cmd) return run_construct(construct);
    if (*verify_cmd) return run_verify(verify);
    if (*search_cmd) return run_search(search);
    if (*sweep_cmd) return run_sweep(sweep);
    if (*export_cmd) return run_export(export_args);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: parse-error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
