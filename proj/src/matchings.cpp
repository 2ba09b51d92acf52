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

#include "divopt/matchings.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "divopt/errors.hpp"

namespace divopt {
namespace {

constexpr int kExhaustiveGuard = 40;
constexpr int kWitnessAttempts = 8;

void require_undirected(const Graph& graph) {
  if (graph.directed()) throw InvalidArgument("matchings need an undirected graph");
}

EdgeSubset blossom_matching(const Graph& graph) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  const int n = graph.vertex_count();
  BoostGraph g(n);
  std::map<std::pair<int, int>, EdgeId> lookup;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    boost::add_edge(edge.u, edge.v, g);
    lookup[std::minmax(edge.u, edge.v)] = e;
  }
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(n);
  boost::edmonds_maximum_cardinality_matching(g, &mate[0]);
  const auto none = boost::graph_traits<BoostGraph>::null_vertex();
  std::vector<EdgeId> ids;
  for (int v = 0; v < n; ++v) {
    const auto w = mate[v];
    if (w != none && static_cast<int>(w) > v) ids.push_back(lookup.at({v, static_cast<int>(w)}));
  }
  return EdgeSubset(graph.edge_count(), std::move(ids), SolutionRole::kMatching);
}

void exhaustive_search(const Graph& graph, EdgeId next, std::vector<char>& covered,
                       std::vector<EdgeId>& current, std::vector<EdgeId>& best) {
  if (current.size() > best.size()) best = current;
  const int remaining_vertices =
      static_cast<int>(std::count(covered.begin(), covered.end(), 0));
  if (current.size() + static_cast<std::size_t>(remaining_vertices / 2) <= best.size()) return;
  for (EdgeId e = next; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    if (covered[edge.u] || covered[edge.v]) continue;
    covered[edge.u] = covered[edge.v] = 1;
    current.push_back(e);
    exhaustive_search(graph, e + 1, covered, current, best);
    current.pop_back();
    covered[edge.u] = covered[edge.v] = 0;
  }
}

EdgeSubset exhaustive_matching(const Graph& graph) {
  if (graph.edge_count() > kExhaustiveGuard) {
    throw InvalidArgument("exhaustive matching search limited to " +
                          std::to_string(kExhaustiveGuard) + " edges");
  }
  std::vector<char> covered(graph.vertex_count(), 0);
  std::vector<EdgeId> current, best;
  exhaustive_search(graph, 0, covered, current, best);
  return EdgeSubset(graph.edge_count(), std::move(best), SolutionRole::kMatching);
}

FieldMatrix lifted_matrix(const PrimeField& field, const LiftedGraph& lifted,
                          std::span<const std::uint64_t> random_entries,
                          std::span<const std::uint64_t> powers) {
  const int size = lifted.vertex_count();
  FieldMatrix a(size, std::vector<std::uint64_t>(size, 0));
  for (std::size_t idx = 0; idx < lifted.edges.size(); ++idx) {
    const auto& edge = lifted.edges[idx];
    const std::uint64_t value = field.mul(random_entries[idx], powers[edge.weight]);
    a[edge.u][edge.v] = value;
    a[edge.v][edge.u] = field.neg(value);
  }
  return a;
}

// Coefficients of one random Pfaffian polynomial in the weight variable.
std::vector<std::uint64_t> random_pfaffian_polynomial(const PrimeField& field,
                                                      const LiftedGraph& lifted,
                                                      std::mt19937_64& rng) {
  const std::int64_t degree = lifted.degree_bound();
  std::uniform_int_distribution<std::uint64_t> uniform(0, field.modulus() - 1);
  std::vector<std::uint64_t> random_entries(lifted.edges.size());
  for (auto& r : random_entries) r = uniform(rng);
  std::vector<std::uint64_t> values(degree + 1);
  std::vector<std::uint64_t> powers(degree + 1);
  for (std::int64_t point = 0; point <= degree; ++point) {
    powers[0] = 1;
    for (std::int64_t d = 1; d <= degree; ++d) {
      powers[d] = field.mul(powers[d - 1], field.reduce(point));
    }
    values[point] = pfaffian(field, lifted_matrix(field, lifted, random_entries, powers));
  }
  return interpolate(field, values);
}

PrimeField field_for(const LiftedGraph& lifted, std::uint64_t modulus) {
  PrimeField field(modulus);
  const std::uint64_t points = static_cast<std::uint64_t>(lifted.degree_bound()) + 1;
  if (modulus / 2 < points) throw FieldError("modulus too small for required degree");
  return field;
}

bool has_weight(const LiftedGraph& lifted, std::int64_t target, std::uint64_t modulus,
                int repeats, std::mt19937_64& rng) {
  if (target < 0 || target > lifted.degree_bound()) return false;
  const PrimeField field = field_for(lifted, modulus);
  for (int trial = 0; trial < repeats; ++trial) {
    if (random_pfaffian_polynomial(field, lifted, rng)[target] != 0) return true;
  }
  return false;
}

struct Grid {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

// Picks the preferred (x, y) among the feasible free-part pairs.
using PairChooser = std::optional<Grid> (*)(std::span<const Grid> feasible, int include_size,
                                            std::int64_t include_cost, int parameter);

std::optional<Grid> min_cost_choice(std::span<const Grid> feasible, int, std::int64_t, int) {
  std::optional<Grid> best;
  for (const Grid& g : feasible) {
    if (!best || g.y < best->y || (g.y == best->y && g.x > best->x)) best = g;
  }
  return best;
}

// parameter = number of earlier solutions i.
std::optional<Grid> max_farness_choice(std::span<const Grid> feasible, int include_size,
                                       std::int64_t include_cost, int parameter) {
  std::optional<Grid> best;
  std::int64_t best_value = 0;
  for (const Grid& g : feasible) {
    const std::int64_t value = static_cast<std::int64_t>(parameter) * (g.x + include_size) -
                               2 * (g.y + include_cost);
    if (!best || value > best_value || (value == best_value && g.y < best->y)) {
      best = g;
      best_value = value;
    }
  }
  return best;
}

void validate_restriction(const Graph& graph, std::span<const EdgeId> include,
                          std::span<const EdgeId> exclude) {
  if (!is_matching(graph, include)) throw InvalidArgument("include set is not a matching");
  for (EdgeId e : exclude) {
    if (e < 0 || e >= graph.edge_count()) throw InvalidArgument("excluded edge out of range");
    if (std::find(include.begin(), include.end(), e) != include.end()) {
      throw InvalidArgument("include and exclude sets intersect");
    }
  }
}

std::optional<EdgeSubset> restricted_matching(const Graph& graph, std::span<const int> cost,
                                              int min_total_size, std::span<const EdgeId> include,
                                              std::span<const EdgeId> exclude,
                                              const FieldConfig& config, std::mt19937_64& rng,
                                              PairChooser choose, int parameter) {
  const int n = graph.vertex_count();
  const int m = graph.edge_count();
  std::vector<char> removed_vertices(n, 0);
  std::vector<char> removed_edges(m, 0);
  std::int64_t include_cost = 0;
  for (EdgeId e : include) {
    removed_vertices[graph.edge(e).u] = removed_vertices[graph.edge(e).v] = 1;
    removed_edges[e] = 1;
    include_cost += cost[e];
  }
  for (EdgeId e : exclude) removed_edges[e] = 1;
  const int include_size = static_cast<int>(include.size());

  const LiftedGraph lifted = lift_graph(graph, cost, removed_vertices, removed_edges);
  const std::vector<bool> support =
      perfect_matching_weights(lifted, config.modulus, config.repeats, rng);
  std::vector<Grid> feasible;
  for (std::size_t w = 0; w < support.size(); ++w) {
    if (!support[w]) continue;
    Grid g{static_cast<std::int64_t>(w) / lifted.gamma,
           static_cast<std::int64_t>(w) % lifted.gamma};
    if (g.x + include_size >= min_total_size) feasible.push_back(g);
  }
  const std::optional<Grid> target = choose(feasible, include_size, include_cost, parameter);
  if (!target) return std::nullopt;

  for (int attempt = 0; attempt < kWitnessAttempts; ++attempt) {
    std::vector<char> dropped = removed_edges;
    for (const auto& edge : lifted.edges) {
      if (edge.original < 0) continue;
      dropped[edge.original] = 1;
      const LiftedGraph smaller = lift_graph(graph, cost, removed_vertices, dropped);
      if (!has_weight(smaller, smaller.encode(target->x, target->y), config.modulus,
                      config.repeats, rng)) {
        dropped[edge.original] = 0;
      }
    }
    std::vector<EdgeId> free_part;
    std::int64_t free_cost = 0;
    for (const auto& edge : lifted.edges) {
      if (edge.original >= 0 && !dropped[edge.original]) {
        free_part.push_back(edge.original);
        free_cost += cost[edge.original];
      }
    }
    if (static_cast<std::int64_t>(free_part.size()) == target->x && free_cost == target->y &&
        is_matching(graph, free_part)) {
      free_part.insert(free_part.end(), include.begin(), include.end());
      return EdgeSubset(m, std::move(free_part), SolutionRole::kMatching);
    }
  }
  throw FieldError("witness reconstruction failed repeatedly");
}

}  // namespace

bool is_matching(const Graph& graph, std::span<const EdgeId> edges) {
  std::vector<char> covered(graph.vertex_count(), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= graph.edge_count()) return false;
    const Edge& edge = graph.edge(e);
    if (covered[edge.u] || covered[edge.v]) return false;
    covered[edge.u] = covered[edge.v] = 1;
  }
  return true;
}

EdgeSubset maximum_matching(const Graph& graph, MatchingMethod method) {
  require_undirected(graph);
  switch (method) {
    case MatchingMethod::kBlossom: return blossom_matching(graph);
    case MatchingMethod::kExhaustive: return exhaustive_matching(graph);
    case MatchingMethod::kAuto:
      return graph.edge_count() <= kExhaustiveMatchingEdges ? exhaustive_matching(graph)
                                                            : blossom_matching(graph);
  }
  throw InvalidArgument("unknown matching method");
}

int default_repeats(int k, int vertex_count, double lambda) {
  const double product = std::max(1.0, static_cast<double>(k) * vertex_count);
  return std::max(1, static_cast<int>(std::ceil(lambda * std::log(product))));
}

std::int64_t LiftedGraph::degree_bound() const {
  return static_cast<std::int64_t>(active_count / 2) * (gamma + max_cost);
}

std::int64_t lifted_gamma(int vertex_count, std::int64_t max_cost) {
  return max_cost * ((vertex_count + 1) / 2) + 1;
}

LiftedGraph lift_graph(const Graph& graph, std::span<const int> cost,
                       std::span<const char> removed_vertices,
                       std::span<const char> removed_edges) {
  require_undirected(graph);
  if (static_cast<int>(cost.size()) != graph.edge_count()) {
    throw InvalidArgument("cost must have one value per edge");
  }
  auto vertex_removed = [&](VertexId v) {
    return !removed_vertices.empty() && removed_vertices[v];
  };
  LiftedGraph lifted;
  std::vector<int> index(graph.vertex_count(), -1);
  std::vector<EdgeId> usable;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (!removed_edges.empty() && removed_edges[e]) continue;
    const Edge& edge = graph.edge(e);
    if (vertex_removed(edge.u) || vertex_removed(edge.v)) continue;
    if (cost[e] < 0) throw InvalidArgument("costs must be non-negative");
    usable.push_back(e);
    lifted.max_cost = std::max<std::int64_t>(lifted.max_cost, cost[e]);
    for (VertexId v : {edge.u, edge.v}) {
      if (index[v] < 0) {
        index[v] = lifted.active_count++;
        lifted.active.push_back(v);
      }
    }
  }
  const int half = lifted.active_count;
  lifted.gamma = lifted_gamma(half, lifted.max_cost);
  for (EdgeId e : usable) {
    lifted.edges.push_back({index[graph.edge(e).u], index[graph.edge(e).v],
                            lifted.gamma + cost[e], e});
  }
  for (int v = 0; v < half; ++v) {
    for (int z = 0; z < half; ++z) lifted.edges.push_back({v, half + z, 0, -1});
  }
  for (int z1 = 0; z1 < half; ++z1) {
    for (int z2 = z1 + 1; z2 < half; ++z2) lifted.edges.push_back({half + z1, half + z2, 0, -1});
  }
  return lifted;
}

std::vector<bool> perfect_matching_weights(const LiftedGraph& lifted, std::uint64_t modulus,
                                           int repeats, std::mt19937_64& rng) {
  if (repeats < 1) throw InvalidArgument("repeats must be at least 1");
  const PrimeField field = field_for(lifted, modulus);
  std::vector<bool> support(lifted.degree_bound() + 1, false);
  for (int trial = 0; trial < repeats; ++trial) {
    const auto coeffs = random_pfaffian_polynomial(field, lifted, rng);
    for (std::size_t w = 0; w < coeffs.size(); ++w) {
      if (coeffs[w] != 0) support[w] = true;
    }
  }
  return support;
}

bool exact_weight_pm_decision(const LiftedGraph& lifted, std::int64_t target,
                              const FieldConfig& config) {
  if (config.repeats < 1) throw InvalidArgument("repeats must be at least 1");
  std::mt19937_64 rng(config.seed);
  return has_weight(lifted, target, config.modulus, config.repeats, rng);
}

std::optional<EdgeSubset> min_cost_c_maximum_matching(const Graph& graph,
                                                      const OccurrenceWeights& cost,
                                                      const Rational& c,
                                                      const FieldConfig& config,
                                                      std::span<const EdgeId> include,
                                                      std::span<const EdgeId> exclude) {
  require_undirected(graph);
  if (c < 1) throw InvalidArgument("approximation factor c must be at least 1");
  if (cost.edge_count() != graph.edge_count()) throw IncomparableSolutions();
  if (config.repeats < 1) throw InvalidArgument("repeats must be at least 1");
  validate_restriction(graph, include, exclude);
  const int max_size = maximum_matching(graph).size();
  const int min_size = static_cast<int>(to_int64(ceil_of(Rational(max_size) / c)));
  std::mt19937_64 rng(config.seed);
  return restricted_matching(graph, cost.counts(), min_size, include, exclude, config, rng,
                             min_cost_choice, 0);
}

MatchingBcoSolver::MatchingBcoSolver(const Graph& graph, const Rational& c,
                                     const FieldConfig& config)
    : graph_(graph), c_(c), config_(config), rng_(config.seed) {
  require_undirected(graph);
  if (c < 1) throw InvalidArgument("approximation factor c must be at least 1");
  if (config.repeats < 1) throw InvalidArgument("repeats must be at least 1");
  max_size_ = maximum_matching(graph).size();
  min_size_ = static_cast<int>(to_int64(ceil_of(Rational(max_size_) / c)));
}

std::optional<EdgeSubset> MatchingBcoSolver::solve(const OccurrenceWeights& occurrence,
                                                   const Rational& /*budget_factor*/,
                                                   const Restriction& restriction) {
  if (!is_matching(graph_, restriction.include)) return std::nullopt;
  for (EdgeId e : restriction.exclude) {
    if (std::find(restriction.include.begin(), restriction.include.end(), e) !=
        restriction.include.end()) {
      return std::nullopt;
    }
  }
  return restricted_matching(graph_, occurrence.counts(), min_size_, restriction.include,
                             restriction.exclude, config_, rng_, max_farness_choice,
                             occurrence.num_solutions());
}

DiverseRunReport diverse_matchings(const Graph& graph, int k, const Rational& c,
                                   const FieldConfig& config) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  MatchingBcoSolver solver(graph, c, config);
  DiverseSolveOptions options;
  options.type = ReductionType::kType1;
  options.seed = config.seed;
  return diverse_solve(solver, maximum_matching(graph), k, c, options);
}

}  // namespace divopt
