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

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "divopt/bco_engine.hpp"
#include "divopt/graph.hpp"
#include "divopt/prime_field.hpp"
#include "divopt/solution.hpp"

namespace divopt {

bool is_matching(const Graph& graph, std::span<const EdgeId> edges);

enum class MatchingMethod { kAuto, kBlossom, kExhaustive };

// Maximum-cardinality matching. kAuto uses exhaustive search for graphs with
// at most kExhaustiveMatchingEdges edges and Edmonds' blossom algorithm
// otherwise.
inline constexpr int kExhaustiveMatchingEdges = 16;
EdgeSubset maximum_matching(const Graph& graph, MatchingMethod method = MatchingMethod::kAuto);

struct FieldConfig {
  std::uint64_t modulus = kMersenne61;
  std::uint64_t seed = 0;
  int repeats = 1;
};

// ⌈lambda·ln(k·|V|)⌉, at least 1.
int default_repeats(int k, int vertex_count, double lambda = 3.0);

// Auxiliary graph on U = V' ∪ Z with |Z| = |V'|, where V' are the vertices
// touched by at least one usable edge. Original edges weigh gamma + cost,
// Z-Z and V'-Z edges weigh 0, so a perfect matching of weight x·gamma + y
// corresponds to a matching of G with x edges and total cost y.
struct LiftedGraph {
  struct LiftedEdge {
    int u = 0;
    int v = 0;
    std::int64_t weight = 0;
    EdgeId original = -1;  // -1 for auxiliary edges
  };

  int active_count = 0;       // |V'|; vertices 0..|V'|-1 of U are V'
  std::vector<VertexId> active;  // original id of each V' vertex
  std::int64_t gamma = 1;
  std::int64_t max_cost = 0;
  std::vector<LiftedEdge> edges;

  int vertex_count() const { return 2 * active_count; }
  // x·gamma + y is at most this for every perfect matching.
  std::int64_t degree_bound() const;
  std::int64_t encode(std::int64_t x, std::int64_t y) const { return x * gamma + y; }
};

// gamma = max_cost·⌈n/2⌉ + 1.
std::int64_t lifted_gamma(int vertex_count, std::int64_t max_cost);

// Lifts the edges of `graph` not flagged in `removed_edges` and with no
// endpoint in `removed_vertices` (empty spans remove nothing).
LiftedGraph lift_graph(const Graph& graph, std::span<const int> cost,
                       std::span<const char> removed_vertices = {},
                       std::span<const char> removed_edges = {});

// Which lifted weights carry a perfect matching: entry w is true when the
// weight-w coefficient of the random Pfaffian was nonzero in at least one
// of `repeats` trials. True entries are always correct; false entries may
// be wrong with small probability.
std::vector<bool> perfect_matching_weights(const LiftedGraph& lifted, std::uint64_t modulus,
                                           int repeats, std::mt19937_64& rng);

bool exact_weight_pm_decision(const LiftedGraph& lifted, std::int64_t target,
                              const FieldConfig& config);

// Matching M ⊇ include avoiding exclude with |M|·c ≥ Δ* (Δ* = maximum
// matching size of the full graph) and minimum Σ cost, ties broken towards
// larger |M|. Witnesses are reconstructed by edge-deletion self-reduction.
// Throws InvalidArgument when include is not a matching or meets exclude.
std::optional<EdgeSubset> min_cost_c_maximum_matching(const Graph& graph,
                                                      const OccurrenceWeights& cost,
                                                      const Rational& c,
                                                      const FieldConfig& config,
                                                      std::span<const EdgeId> include,
                                                      std::span<const EdgeId> exclude);

// Metric-form solver: among c-maximum matchings respecting the restriction,
// maximizes Σ_j d(M, M_j) = const + i·|M| − 2·cost(M).
class MatchingBcoSolver : public RestrictedBcoSolver {
 public:
  MatchingBcoSolver(const Graph& graph, const Rational& c, const FieldConfig& config);

  std::optional<EdgeSubset> solve(const OccurrenceWeights& occurrence,
                                  const Rational& budget_factor,
                                  const Restriction& restriction) override;
  int element_count() const override { return graph_.edge_count(); }
  BranchingKind branching() const override { return BranchingKind::kMembership; }
  ObjectiveForm objective_form() const override { return ObjectiveForm::kMetric; }
  bool fixed_cardinality() const override { return min_size_ == max_size_; }

  int maximum_size() const { return max_size_; }
  int minimum_size() const { return min_size_; }

 private:
  const Graph& graph_;
  Rational c_;
  FieldConfig config_;
  std::mt19937_64 rng_;
  int max_size_ = 0;
  int min_size_ = 0;
};

// k distinct c-maximum matchings with diversity at least half the optimum
// (with high probability). Undirected graphs only.
DiverseRunReport diverse_matchings(const Graph& graph, int k, const Rational& c,
                                   const FieldConfig& config);

}  // namespace divopt
