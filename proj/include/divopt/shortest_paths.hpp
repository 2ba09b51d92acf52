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
#include "divopt/rational.hpp"

namespace divopt {

// Vertices and edges hidden from a computation. Empty spans hide nothing.
struct SubgraphMask {
  std::span<const char> removed_vertices;
  std::span<const char> removed_edges;

  bool vertex_removed(VertexId v) const {
    return !removed_vertices.empty() && removed_vertices[v];
  }
  bool edge_removed(EdgeId e) const { return !removed_edges.empty() && removed_edges[e]; }
};

// Exact ω-distance from `source` to `target` by Dijkstra; nullopt when
// unreachable.
std::optional<Rational> shortest_distance(const Graph& graph, VertexId source,
                                          VertexId target, SubgraphMask mask = {});

// D(v, c') = minimum ω-length of a source→v path whose f-cost is at most c',
// for c' = 0..column_count-1. Column c' is filled by scanning the positive-f
// in-arcs against earlier columns, then a Dijkstra pass over the f = 0 arcs
// seeded with those values.
class BicriteriaTable {
 public:
  BicriteriaTable(const Graph& graph, VertexId source, std::span<const int> f,
                  int column_count, SubgraphMask mask = {});

  int vertex_count() const { return vertex_count_; }
  int column_count() const { return column_count_; }
  VertexId source() const { return source_; }

  // nullopt encodes ∞.
  const std::optional<Rational>& value(VertexId v, int column) const {
    return cells_[index(v, column)].value;
  }

  // Arcs of a path realizing value(v, column), in order from the source.
  std::vector<EdgeId> path_to(VertexId v, int column) const;

 private:
  struct Cell {
    std::optional<Rational> value;
    EdgeId via = -1;      // last arc of the realizing path
    int via_column = -1;  // column of the predecessor cell
  };
  std::size_t index(VertexId v, int column) const {
    return static_cast<std::size_t>(column) * vertex_count_ + v;
  }

  const Graph& graph_;
  VertexId source_;
  int vertex_count_;
  int column_count_;
  std::vector<Cell> cells_;
};

// Number of columns needed for second-criterion values in {0..max_f}.
int bicriteria_columns(const Graph& graph, std::span<const int> f);

// st-path minimizing Σ f subject to ω(P) ≤ c·dist_ω(s,t). Requires a
// directed graph with strictly positive weights. Throws InvalidArgument
// when t is unreachable.
EdgeSubset bicriteria_shortest_path(const Graph& graph, VertexId s, VertexId t,
                                    std::span<const int> f, const Rational& c);

// As above, restricted to paths that start with `prefix` (ordered arcs from
// s) and avoid `exclude`. The budget is c times the distance in the full
// graph. Returns nullopt when no such path exists; throws InvalidArgument
// when `prefix` is not a simple directed path from s.
std::optional<EdgeSubset> restricted_bicriteria(const Graph& graph, VertexId s,
                                                VertexId t, std::span<const int> f,
                                                const Rational& c,
                                                std::span<const EdgeId> prefix,
                                                std::span<const EdgeId> exclude);

// Arcs of an st-path in traversal order.
std::vector<EdgeId> path_edge_order(const Graph& graph, VertexId s, const EdgeSubset& path);

bool is_simple_st_path(const Graph& graph, VertexId s, VertexId t, const EdgeSubset& path);

Rational path_weight(const Graph& graph, const EdgeSubset& path);

// Replaces each undirected edge e={u,v} by arcs 2e = u→v and 2e+1 = v→u.
Graph expand_to_arcs(const Graph& undirected);

class ShortestPathBcoSolver : public RestrictedBcoSolver {
 public:
  ShortestPathBcoSolver(const Graph& graph, VertexId s, VertexId t);

  std::optional<EdgeSubset> solve(const OccurrenceWeights& occurrence,
                                  const Rational& budget_factor,
                                  const Restriction& restriction) override;
  int element_count() const override { return graph_.edge_count(); }
  BranchingKind branching() const override { return BranchingKind::kPrefix; }
  bool fixed_cardinality() const override { return false; }
  std::vector<EdgeId> branch_order(const EdgeSubset& y) const override;

 private:
  const Graph& graph_;
  VertexId s_, t_;
};

// k distinct c-approximate st-paths with diversity at least half the
// optimum. Throws NonExistentError if fewer than k such paths exist.
DiverseRunReport diverse_short_paths(const Graph& graph, VertexId s, VertexId t, int k,
                                     const Rational& c);

}  // namespace divopt
