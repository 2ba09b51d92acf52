// Copyright 2026 The divopt Authors.
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

#include "divopt/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "divopt/dispersion.hpp"
#include "divopt/errors.hpp"
#include "divopt/matchings.hpp"
#include "divopt/min_weight_bases.hpp"
#include "divopt/oracle.hpp"
#include "divopt/shortest_paths.hpp"
#include "divopt/spanning_trees.hpp"
#include "report.hpp"

namespace divopt::cli {
namespace {

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;
  int k = 1;
  std::string c_text = "1";
  std::uint64_t seed = 0;
  int repeats = 0;  // 0 picks the default schedule
  std::uint64_t modulus = kMersenne61;
  std::string mode = "lagrangian-2";
  std::string eps_text = "1/10";
  int source = -1;
  int target = -1;
  int start = 0;
  bool oracle = false;
  bool skip_triangle = false;
  std::string problem;
  int vertices = 0;
  double edge_probability = 0.5;
  int clique = 0;
  std::string graph_output;
  std::string edge_distance = "2";
  std::string nonedge_distance = "1";
};

using Clock = std::chrono::steady_clock;

std::uint64_t environment_seed() {
  const char* text = std::getenv("DIVOPT_SEED");
  if (!text || !*text) return 0;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(text, &used);
    if (used != std::string(text).size()) throw std::invalid_argument("trailing");
    return value;
  } catch (const std::exception&) {
    throw InputError(std::string("DIVOPT_SEED is not an unsigned integer: ") + text);
  }
}

Rational parse_factor(const std::string& text) {
  const Rational c = parse_rational(text);
  if (c < 1) throw InvalidArgument("approximation factor c must be at least 1");
  return c;
}

Graph load_undirected(const RunConfig& cfg) {
  Graph graph = read_graph_file(cfg.input);
  if (graph.directed()) throw InputError("this command needs an undirected graph");
  return graph;
}

// Directed view for path problems; undirected inputs become arc pairs.
struct PathInstance {
  Graph graph;
  bool arc_expanded = false;
};

PathInstance load_paths(const RunConfig& cfg) {
  Graph graph = read_graph_file(cfg.input);
  if (graph.directed()) return {std::move(graph), false};
  return {expand_to_arcs(graph), true};
}

Json dispersion_command(const RunConfig& cfg) {
  const FiniteMetric metric = read_metric_file(cfg.input, !cfg.skip_triangle);
  const std::vector<int> points = furthest_insertion(metric, cfg.k, cfg.start);
  const Rational value = dispersion_value(metric, points);

  Json j;
  j["problem"] = "dispersion";
  j["n"] = metric.size();
  j["m"] = nullptr;
  j["k"] = cfg.k;
  j["c"] = "1";
  j["guarantee"] = {{"alpha", "2"}, {"beta", "1"}, {"type", nullptr}};
  j["diversity"] = to_string(value);
  j["solutions"] = Json::array({points});
  Json pairwise = Json::array();
  for (int a : points) {
    Json row = Json::array();
    for (int b : points) row.push_back(to_string(metric(a, b)));
    pairwise.push_back(std::move(row));
  }
  j["pairwise"] = std::move(pairwise);
  Json trace = Json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    Rational gain = 0;
    for (std::size_t h = 0; h < i; ++h) gain += metric(points[h], points[i]);
    trace.push_back({{"iteration", i + 1}, {"point", points[i]}, {"gain", to_string(gain)}});
  }
  j["trace"] = std::move(trace);
  j["seed"] = cfg.seed;
  if (cfg.oracle) {
    const DispersionOptimum best = exact_dispersion(metric, cfg.k);
    const double ratio = best.value == 0 ? 1.0 : to_double(value / best.value);
    j["oracle"] = {{"diversity", to_string(best.value)},
                   {"points", best.indices},
                   {"ratio", ratio},
                   {"bound", "1/2"},
                   {"pass", 2 * value >= best.value}};
  }
  return j;
}

Json spanning_tree_command(const RunConfig& cfg) {
  const Graph graph = load_undirected(cfg);
  DiverseRunReport report = diverse_spanning_trees(graph, cfg.k);
  report.seed = cfg.seed;
  return run_report("diverse-st", graph.vertex_count(), graph.edge_count(), cfg.k, Rational(1),
                    report);
}

Json shortest_path_command(const RunConfig& cfg) {
  const PathInstance instance = load_paths(cfg);
  const Rational c = parse_factor(cfg.c_text);
  DiverseRunReport report =
      diverse_short_paths(instance.graph, cfg.source, cfg.target, cfg.k, c);
  report.seed = cfg.seed;
  Json j = run_report("diverse-sp", instance.graph.vertex_count(), instance.graph.edge_count(),
                      cfg.k, c, report);
  j["source"] = cfg.source;
  j["target"] = cfg.target;
  j["arc_expanded"] = instance.arc_expanded;
  return j;
}

FieldConfig field_config(const RunConfig& cfg, int vertex_count) {
  FieldConfig field;
  field.modulus = cfg.modulus;
  field.seed = cfg.seed;
  field.repeats = cfg.repeats > 0 ? cfg.repeats : default_repeats(cfg.k, vertex_count);
  return field;
}

Json matching_command(const RunConfig& cfg) {
  const Graph graph = load_undirected(cfg);
  const Rational c = parse_factor(cfg.c_text);
  const FieldConfig field = field_config(cfg, graph.vertex_count());
  const DiverseRunReport report = diverse_matchings(graph, cfg.k, c, field);
  Json j = run_report("diverse-matching", graph.vertex_count(), graph.edge_count(), cfg.k, c,
                      report);
  j["repeats"] = field.repeats;
  j["modulus"] = field.modulus;
  return j;
}

ConstrainedBasisOptions basis_options(const RunConfig& cfg) {
  ConstrainedBasisOptions options;
  options.mode = parse_basis_mode(cfg.mode);
  options.epsilon = parse_rational(cfg.eps_text);
  if (options.epsilon <= 0) throw InvalidArgument("eps must be positive");
  return options;
}

Json min_weight_basis_command(const RunConfig& cfg) {
  const Graph graph = load_undirected(cfg);
  const Rational c = parse_factor(cfg.c_text);
  const ConstrainedBasisOptions options = basis_options(cfg);
  if (options.mode == BasisMode::kPseudoExact) {
    for (const Rational& w : graph.weights()) {
      if (!is_integer(w)) throw InputError("pseudo-exact mode needs integer edge weights");
    }
  }
  const GraphicMatroid matroid(graph);
  DiverseRunReport report =
      diverse_min_weight_bases(matroid, graph.weights(), cfg.k, c, options);
  report.seed = cfg.seed;
  Json j = run_report("diverse-mst", graph.vertex_count(), graph.edge_count(), cfg.k, c,
                      report);
  const Rational optimum = subset_weight(graph.weights(), report.solutions.front().ids());
  j["mode"] = std::string(basis_mode_name(options.mode));
  j["epsilon"] = to_string(options.epsilon);
  j["budget"] = to_string(c * optimum);
  j["weights"] = Json::array();
  for (const EdgeSubset& b : report.solutions) {
    j["weights"].push_back(to_string(subset_weight(graph.weights(), b.ids())));
  }
  return j;
}

struct OracleVerdict {
  std::size_t feasible = 0;
  std::optional<std::int64_t> optimum;
};

OracleVerdict best_over(const std::vector<EdgeSubset>& feasible, int k) {
  OracleVerdict verdict;
  verdict.feasible = feasible.size();
  if (static_cast<int>(feasible.size()) >= k) {
    verdict.optimum = best_k_subset_diversity(feasible, k).diversity;
  }
  return verdict;
}

OracleVerdict oracle_for(const std::string& problem, const RunConfig& cfg) {
  const Rational c = problem == "st" ? Rational(1) : parse_factor(cfg.c_text);
  if (problem == "st") return best_over(enumerate_spanning_trees(load_undirected(cfg)), cfg.k);
  if (problem == "sp") {
    const PathInstance instance = load_paths(cfg);
    const auto dist = shortest_distance(instance.graph, cfg.source, cfg.target);
    std::vector<EdgeSubset> feasible;
    if (dist) {
      for (EdgeSubset& p : enumerate_st_paths(instance.graph, cfg.source, cfg.target)) {
        if (path_weight(instance.graph, p) <= c * *dist) feasible.push_back(std::move(p));
      }
    }
    return best_over(feasible, cfg.k);
  }
  if (problem == "matching") {
    const Graph graph = load_undirected(cfg);
    const int max_size = maximum_matching(graph).size();
    std::vector<EdgeSubset> feasible;
    for (EdgeSubset& mm : enumerate_matchings(graph)) {
      if (c * mm.size() >= max_size) feasible.push_back(std::move(mm));
    }
    return best_over(feasible, cfg.k);
  }
  if (problem == "mst") {
    const Graph graph = load_undirected(cfg);
    const GraphicMatroid matroid(graph);
    const Rational budget =
        c * subset_weight(graph.weights(), min_weight_basis(matroid, graph.weights()).ids());
    std::vector<EdgeSubset> feasible;
    for (EdgeSubset& b : enumerate_spanning_trees(graph)) {
      if (subset_weight(graph.weights(), b.ids()) <= budget) feasible.push_back(std::move(b));
    }
    return best_over(feasible, cfg.k);
  }
  throw InvalidArgument("unknown oracle problem '" + problem + "'");
}

Json oracle_check_command(const RunConfig& cfg) {
  if (cfg.problem == "dispersion") {
    RunConfig with_oracle = cfg;
    with_oracle.oracle = true;
    return dispersion_command(with_oracle);
  }
  const OracleVerdict verdict = oracle_for(cfg.problem, cfg);
  Json j;
  bool nonexistent = false;
  try {
    if (cfg.problem == "st") j = spanning_tree_command(cfg);
    else if (cfg.problem == "sp") j = shortest_path_command(cfg);
    else if (cfg.problem == "matching") j = matching_command(cfg);
    else j = min_weight_basis_command(cfg);
  } catch (const NonExistentError& e) {
    nonexistent = true;
    j = error_report(e.kind(), e.what());
    j["problem"] = cfg.problem;
  }
  Json oracle;
  oracle["feasible_count"] = verdict.feasible;
  if (!verdict.optimum) {
    oracle["diversity"] = nullptr;
    oracle["ratio"] = nullptr;
    oracle["pass"] = nonexistent;
  } else if (nonexistent) {
    oracle["diversity"] = *verdict.optimum;
    oracle["ratio"] = nullptr;
    oracle["pass"] = false;
  } else {
    const Rational alpha = parse_rational(j["guarantee"]["alpha"].get<std::string>());
    const std::int64_t found = j["diversity"].get<std::int64_t>();
    oracle["diversity"] = *verdict.optimum;
    oracle["ratio"] =
        *verdict.optimum == 0 ? 1.0 : static_cast<double>(found) / *verdict.optimum;
    oracle["bound"] = to_string(1 / alpha);
    oracle["pass"] = alpha * found >= *verdict.optimum;
  }
  j["oracle"] = std::move(oracle);
  return j;
}

void gen_gadget_command(const RunConfig& cfg, std::ostream& out) {
  std::optional<PlantedClique> planted;
  if (cfg.input.empty()) {
    planted = planted_clique_graph(cfg.vertices, cfg.edge_probability, cfg.clique, cfg.seed);
  }
  const Graph graph = planted ? planted->graph : load_undirected(cfg);
  const FiniteMetric metric = gadget_from_graph(graph, parse_rational(cfg.edge_distance),
                                                parse_rational(cfg.nonedge_distance));
  out << "c gadget metric: " << cfg.edge_distance << " on edges, " << cfg.nonedge_distance
      << " on non-edges\n";
  if (planted) {
    out << "c seed " << cfg.seed << ", planted clique";
    for (int v : planted->clique) out << ' ' << v;
    out << '\n';
  }
  write_metric(out, metric);
  if (!cfg.graph_output.empty()) {
    std::ofstream file(cfg.graph_output);
    if (!file) throw InputError("cannot write " + cfg.graph_output);
    write_graph(file, graph);
  }
}

void add_common(CLI::App* sub, RunConfig& cfg, bool needs_input) {
  auto* input = sub->add_option("-i,--input", cfg.input, "instance file");
  if (needs_input) input->required();
  sub->add_option("-o,--output", cfg.output, "report file (default: stdout)");
  sub->add_option("--seed", cfg.seed, "RNG seed (default: $DIVOPT_SEED or 0)");
}

void add_k(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-k", cfg.k, "number of solutions")
      ->check(CLI::PositiveNumber)
      ->required();
}

void add_c(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-c", cfg.c_text, "approximation factor, e.g. 3/2 or 1.5 (default 1)");
}

void add_paths(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-s", cfg.source, "source vertex")->required();
  sub->add_option("-t", cfg.target, "target vertex")->required();
}

void add_matching(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--repeats", cfg.repeats, "decisions per query (default ceil(3 ln(k n)))");
  sub->add_option("--modulus", cfg.modulus, "prime modulus of the random field");
}

void add_basis(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--mode", cfg.mode, "lagrangian-2 | ptas-eps | pseudo-exact");
  sub->add_option("--eps", cfg.eps_text, "epsilon for ptas-eps and pseudo-exact (default 1/10)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diverse near-optimal solutions for combinatorial problems", "divopt"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* dispersion = app.add_subcommand("dispersion", "max-sum k-dispersion on a metric file");
  add_common(dispersion, cfg, true);
  add_k(dispersion, cfg);
  dispersion->add_option("--start", cfg.start, "first point of the greedy (default 0)");
  dispersion->add_flag("--oracle", cfg.oracle, "compare with the exhaustive optimum");
  dispersion->add_flag("--no-triangle-check", cfg.skip_triangle,
                       "skip the O(n^3) triangle inequality check");

  auto* st = app.add_subcommand("diverse-st", "diverse spanning trees");
  add_common(st, cfg, true);
  add_k(st, cfg);

  auto* sp = app.add_subcommand("diverse-sp", "diverse c-approximate shortest st-paths");
  add_common(sp, cfg, true);
  add_k(sp, cfg);
  add_c(sp, cfg);
  add_paths(sp, cfg);

  auto* matching = app.add_subcommand("diverse-matching", "diverse c-maximum matchings");
  add_common(matching, cfg, true);
  add_k(matching, cfg);
  add_c(matching, cfg);
  add_matching(matching, cfg);

  auto* mst = app.add_subcommand("diverse-mst", "diverse c-approximate minimum spanning trees");
  add_common(mst, cfg, true);
  add_k(mst, cfg);
  add_c(mst, cfg);
  add_basis(mst, cfg);

  auto* check = app.add_subcommand("oracle-check", "run a solver against the brute-force oracle");
  add_common(check, cfg, true);
  add_k(check, cfg);
  add_c(check, cfg);
  check->add_option("--problem", cfg.problem, "dispersion | st | sp | matching | mst")
      ->required()
      ->check(CLI::IsMember({"dispersion", "st", "sp", "matching", "mst"}));
  check->add_option("-s", cfg.source, "source vertex (sp)");
  check->add_option("-t", cfg.target, "target vertex (sp)");
  check->add_option("--start", cfg.start, "first greedy point (dispersion)");
  add_matching(check, cfg);
  add_basis(check, cfg);

  auto* gadget = app.add_subcommand("gen-gadget", "dispersion gadget metric from a graph");
  add_common(gadget, cfg, false);
  gadget->add_option("-n", cfg.vertices, "vertices of a random graph (when no --input)");
  gadget->add_option("-p", cfg.edge_probability, "edge probability of the random graph");
  gadget->add_option("--clique", cfg.clique, "size of the planted clique");
  gadget->add_option("--graph-output", cfg.graph_output, "also write the graph here");
  gadget->add_option("--edge-distance", cfg.edge_distance, "distance of adjacent pairs");
  gadget->add_option("--nonedge-distance", cfg.nonedge_distance,
                     "distance of non-adjacent pairs");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  const auto started = Clock::now();
  std::ostringstream buffer;
  int status = kExitOk;
  try {
    if (app.get_subcommands().front()->get_option("--seed")->count() == 0) {
      cfg.seed = environment_seed();
    }
    if (cfg.command == "gen-gadget") {
      if (cfg.input.empty() && cfg.vertices < 1) {
        throw InvalidArgument("gen-gadget needs --input or -n");
      }
      gen_gadget_command(cfg, buffer);
    } else {
      Json report;
      if (cfg.command == "dispersion") report = dispersion_command(cfg);
      else if (cfg.command == "diverse-st") report = spanning_tree_command(cfg);
      else if (cfg.command == "diverse-sp") report = shortest_path_command(cfg);
      else if (cfg.command == "diverse-matching") report = matching_command(cfg);
      else if (cfg.command == "diverse-mst") report = min_weight_basis_command(cfg);
      else report = oracle_check_command(cfg);
      finish_report(report, started);
      buffer << report.dump(2) << '\n';
    }
  } catch (const Error& e) {
    status = e.kind() == "non-existent" ? kExitNonExistent : kExitInputError;
    err << "divopt: " << e.what() << '\n';
    buffer.str("");
    buffer << error_report(e.kind(), e.what()).dump(2) << '\n';
  } catch (const std::exception& e) {
    status = kExitInputError;
    err << "divopt: internal error: " << e.what() << '\n';
    buffer.str("");
    buffer << error_report("internal", e.what()).dump(2) << '\n';
  }

  if (cfg.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      err << "divopt: cannot write " << cfg.output << '\n';
      return kExitInputError;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace divopt::cli
