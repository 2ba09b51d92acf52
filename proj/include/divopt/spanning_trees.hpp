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

#include <optional>
#include <span>
#include <vector>

#include "divopt/bco_engine.hpp"
#include "divopt/graph.hpp"
#include "divopt/solution.hpp"

namespace divopt {

// True when `tree` has n-1 edges of `graph`, is acyclic and spans.
bool is_spanning_tree(const Graph& graph, const EdgeSubset& tree);

// Parent-array view of a spanning tree rooted at vertex 0. Construction
// verifies the tree.
class TreeCertificate {
 public:
  TreeCertificate(const Graph& graph, const EdgeSubset& tree);

  // parent()[0] == -1; parent_edge()[0] == -1.
  const std::vector<VertexId>& parent() const { return parent_; }
  const std::vector<EdgeId>& parent_edge() const { return parent_edge_; }

 private:
  std::vector<VertexId> parent_;
  std::vector<EdgeId> parent_edge_;
};

// Spanning tree minimizing Σ count(e): Kruskal over the weight classes
// E_0, E_1, ... with edge-id order inside a class. Throws InvalidArgument if
// the graph is disconnected or directed.
EdgeSubset min_tree_wrt_occurrence(const Graph& graph, const OccurrenceWeights& weights);

// As above, restricted to trees containing `include` and avoiding
// `exclude`. Returns nullopt when no such tree exists. Throws
// InvalidArgument when `include` contains a cycle.
std::optional<EdgeSubset> restricted_min_tree(const Graph& graph,
                                              const OccurrenceWeights& weights,
                                              std::span<const EdgeId> include,
                                              std::span<const EdgeId> exclude);

// Exact similarity solver for spanning trees (no budget).
class SpanningTreeBcoSolver : public RestrictedBcoSolver {
 public:
  explicit SpanningTreeBcoSolver(const Graph& graph);

  std::optional<EdgeSubset> solve(const OccurrenceWeights& occurrence,
                                  const Rational& budget_factor,
                                  const Restriction& restriction) override;
  int element_count() const override { return graph_.edge_count(); }
  BranchingKind branching() const override { return BranchingKind::kMembership; }
  bool fixed_cardinality() const override { return true; }

  long long tree_computations() const { return tree_computations_; }

 private:
  const Graph& graph_;
  long long tree_computations_ = 0;
};

// k distinct spanning trees whose diversity is at least half the optimum.
DiverseRunReport diverse_spanning_trees(const Graph& graph, int k);

}  // namespace divopt
