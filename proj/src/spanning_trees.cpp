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

#include "divopt/spanning_trees.hpp"

#include <algorithm>
#include <queue>

#include "divopt/errors.hpp"
#include "divopt/union_find.hpp"

namespace divopt {

bool is_spanning_tree(const Graph& graph, const EdgeSubset& tree) {
  if (graph.directed() || tree.universe_size() != graph.edge_count()) return false;
  if (tree.size() != graph.vertex_count() - 1) return false;
  UnionFind uf(graph.vertex_count());
  for (EdgeId e : tree.ids()) {
    if (!uf.unite(graph.edge(e).u, graph.edge(e).v)) return false;
  }
  return uf.components() == 1;
}

TreeCertificate::TreeCertificate(const Graph& graph, const EdgeSubset& tree) {
  if (!is_spanning_tree(graph, tree)) throw InvalidArgument("not a spanning tree");
  const int n = graph.vertex_count();
  parent_.assign(n, -1);
  parent_edge_.assign(n, -1);
  std::vector<bool> seen(n, false);
  std::queue<VertexId> queue;
  queue.push(0);
  seen[0] = true;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    for (EdgeId e : graph.out_edges(v)) {
      if (!tree.contains(e)) continue;
      VertexId w = graph.other_end(e, v);
      if (seen[w]) continue;
      seen[w] = true;
      parent_[w] = v;
      parent_edge_[w] = e;
      queue.push(w);
    }
  }
}

std::optional<EdgeSubset> restricted_min_tree(const Graph& graph,
                                              const OccurrenceWeights& weights,
                                              std::span<const EdgeId> include,
                                              std::span<const EdgeId> exclude) {
  if (graph.directed()) throw InvalidArgument("spanning trees need an undirected graph");
  const int n = graph.vertex_count();
  const int m = graph.edge_count();
  if (weights.edge_count() != m) throw IncomparableSolutions();

  std::vector<char> banned(m, 0);
  for (EdgeId e : exclude) banned.at(e) = 1;
  UnionFind uf(n);
  std::vector<EdgeId> tree;
  bool conflicting = false;
  for (EdgeId e : include) {
    if (!uf.unite(graph.edge(e).u, graph.edge(e).v)) {
      throw InvalidArgument("include set contains a cycle");
    }
    if (banned[e]) conflicting = true;
    tree.push_back(e);
  }
  if (conflicting) return std::nullopt;

  // Counting sort by weight class, stable in edge id.
  const int classes = weights.max_count() + 1;
  std::vector<std::vector<EdgeId>> buckets(classes);
  for (EdgeId e = 0; e < m; ++e) {
    if (!banned[e]) buckets[weights.count(e)].push_back(e);
  }
  for (const auto& bucket : buckets) {
    for (EdgeId e : bucket) {
      if (uf.unite(graph.edge(e).u, graph.edge(e).v)) tree.push_back(e);
    }
  }
  if (uf.components() != 1) return std::nullopt;
  return EdgeSubset(m, std::move(tree), SolutionRole::kSpanningTree);
}

EdgeSubset min_tree_wrt_occurrence(const Graph& graph, const OccurrenceWeights& weights) {
  auto tree = restricted_min_tree(graph, weights, {}, {});
  if (!tree) throw InvalidArgument("graph is disconnected");
  return *tree;
}

SpanningTreeBcoSolver::SpanningTreeBcoSolver(const Graph& graph) : graph_(graph) {
  if (graph.directed()) throw InvalidArgument("spanning trees need an undirected graph");
}

std::optional<EdgeSubset> SpanningTreeBcoSolver::solve(const OccurrenceWeights& occurrence,
                                                       const Rational& /*budget_factor*/,
                                                       const Restriction& restriction) {
  ++tree_computations_;
  return restricted_min_tree(graph_, occurrence, restriction.include, restriction.exclude);
}

DiverseRunReport diverse_spanning_trees(const Graph& graph, int k) {
  SpanningTreeBcoSolver solver(graph);
  const EdgeSubset first =
      min_tree_wrt_occurrence(graph, OccurrenceWeights(graph.edge_count()));
  DiverseSolveOptions options;
  options.type = ReductionType::kType3;
  return diverse_solve(solver, first, k, Rational(1), options);
}

}  // namespace divopt
