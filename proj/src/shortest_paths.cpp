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

#include "divopt/shortest_paths.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "divopt/errors.hpp"

namespace divopt {
namespace {

struct QueueEntry {
  Rational dist;
  VertexId v;
  bool operator>(const QueueEntry& o) const {
    if (dist != o.dist) return dist > o.dist;
    return v > o.v;
  }
};
using MinQueue =
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<QueueEntry>>;

void require_directed_positive(const Graph& graph) {
  if (!graph.directed()) {
    throw InvalidArgument("shortest-path routines need a directed graph");
  }
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (graph.weight(e) <= 0) {
      throw InvalidArgument("edge weights must be strictly positive (edge " +
                            std::to_string(e) + ")");
    }
  }
}

void require_vertex(const Graph& graph, VertexId v, const char* name) {
  if (v < 0 || v >= graph.vertex_count()) {
    throw InvalidArgument(std::string(name) + " vertex out of range");
  }
}

std::vector<int> validated_costs(const Graph& graph, std::span<const int> f) {
  if (static_cast<int>(f.size()) != graph.edge_count()) {
    throw InvalidArgument("second criterion must have one value per edge");
  }
  for (int x : f) {
    if (x < 0) throw InvalidArgument("second criterion must be non-negative");
  }
  return {f.begin(), f.end()};
}

// Cheapest column whose target value fits the budget.
std::optional<int> cheapest_feasible_column(const BicriteriaTable& table, VertexId t,
                                            const Rational& budget) {
  for (int col = 0; col < table.column_count(); ++col) {
    const auto& value = table.value(t, col);
    if (value && *value <= budget) return col;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Rational> shortest_distance(const Graph& graph, VertexId source,
                                          VertexId target, SubgraphMask mask) {
  const int n = graph.vertex_count();
  std::vector<std::optional<Rational>> dist(n);
  dist[source] = Rational(0);
  MinQueue queue;
  queue.push({Rational(0), source});
  while (!queue.empty()) {
    QueueEntry top = queue.top();
    queue.pop();
    if (top.dist != *dist[top.v]) continue;
    if (top.v == target) return top.dist;
    for (EdgeId e : graph.out_edges(top.v)) {
      if (mask.edge_removed(e)) continue;
      VertexId w = graph.other_end(e, top.v);
      if (mask.vertex_removed(w)) continue;
      Rational cand = top.dist + graph.weight(e);
      if (!dist[w] || cand < *dist[w]) {
        dist[w] = cand;
        queue.push({cand, w});
      }
    }
  }
  return std::nullopt;
}

BicriteriaTable::BicriteriaTable(const Graph& graph, VertexId source,
                                 std::span<const int> f, int column_count,
                                 SubgraphMask mask)
    : graph_(graph),
      source_(source),
      vertex_count_(graph.vertex_count()),
      column_count_(column_count),
      cells_(static_cast<std::size_t>(column_count) * graph.vertex_count()) {
  if (column_count_ < 1) throw InvalidArgument("table needs at least one column");
  const int n = vertex_count_;
  for (int col = 0; col < column_count_; ++col) {
    // Case 1: last arc has positive f.
    for (VertexId v = 0; v < n; ++v) {
      if (v == source_ || mask.vertex_removed(v)) continue;
      Cell& cell = cells_[index(v, col)];
      for (EdgeId e : graph_.in_edges(v)) {
        const int cost = f[e];
        if (cost == 0 || cost > col || mask.edge_removed(e)) continue;
        VertexId x = graph_.edge(e).u;
        if (mask.vertex_removed(x)) continue;
        const auto& prev = cells_[index(x, col - cost)].value;
        if (!prev) continue;
        Rational cand = *prev + graph_.weight(e);
        if (!cell.value || cand < *cell.value) {
          cell.value = cand;
          cell.via = e;
          cell.via_column = col - cost;
        }
      }
    }
    // Case 2: extend by f = 0 arcs, seeded with the Case 1 values.
    cells_[index(source_, col)] = Cell{Rational(0), -1, -1};
    MinQueue queue;
    for (VertexId v = 0; v < n; ++v) {
      if (const auto& value = cells_[index(v, col)].value) queue.push({*value, v});
    }
    while (!queue.empty()) {
      QueueEntry top = queue.top();
      queue.pop();
      if (top.dist != *cells_[index(top.v, col)].value) continue;
      for (EdgeId e : graph_.out_edges(top.v)) {
        if (f[e] != 0 || mask.edge_removed(e)) continue;
        VertexId w = graph_.edge(e).v;
        if (w == source_ || mask.vertex_removed(w)) continue;
        Cell& cell = cells_[index(w, col)];
        Rational cand = top.dist + graph_.weight(e);
        if (!cell.value || cand < *cell.value) {
          cell.value = cand;
          cell.via = e;
          cell.via_column = col;
          queue.push({cand, w});
        }
      }
    }
  }
}

std::vector<EdgeId> BicriteriaTable::path_to(VertexId v, int column) const {
  if (!value(v, column)) throw InvalidArgument("no path realizes an infinite cell");
  std::vector<EdgeId> arcs;
  const std::size_t limit = cells_.size();
  while (v != source_) {
    const Cell& cell = cells_[index(v, column)];
    arcs.push_back(cell.via);
    v = graph_.edge(cell.via).u;
    column = cell.via_column;
    if (arcs.size() > limit) throw InvalidArgument("corrupt backpointers");
  }
  std::reverse(arcs.begin(), arcs.end());
  return arcs;
}

int bicriteria_columns(const Graph& graph, std::span<const int> f) {
  const int r = f.empty() ? 0 : *std::max_element(f.begin(), f.end());
  return r * std::max(graph.vertex_count() - 1, 0) + 1;
}

EdgeSubset bicriteria_shortest_path(const Graph& graph, VertexId s, VertexId t,
                                    std::span<const int> f, const Rational& c) {
  require_directed_positive(graph);
  require_vertex(graph, s, "source");
  require_vertex(graph, t, "target");
  if (c < 1) throw InvalidArgument("approximation factor c must be at least 1");
  const std::vector<int> costs = validated_costs(graph, f);
  const auto dist = shortest_distance(graph, s, t);
  if (!dist) throw InvalidArgument("target unreachable");
  BicriteriaTable table(graph, s, costs, bicriteria_columns(graph, costs));
  const auto col = cheapest_feasible_column(table, t, c * *dist);
  if (!col) throw InvalidArgument("no path within budget");
  return EdgeSubset(graph.edge_count(), table.path_to(t, *col), SolutionRole::kStPath);
}

std::optional<EdgeSubset> restricted_bicriteria(const Graph& graph, VertexId s,
                                                VertexId t, std::span<const int> f,
                                                const Rational& c,
                                                std::span<const EdgeId> prefix,
                                                std::span<const EdgeId> exclude) {
  require_directed_positive(graph);
  require_vertex(graph, s, "source");
  require_vertex(graph, t, "target");
  const std::vector<int> costs = validated_costs(graph, f);
  const int n = graph.vertex_count();
  const int m = graph.edge_count();

  std::vector<char> removed_vertices(n, 0);
  std::vector<char> removed_edges(m, 0);
  VertexId end = s;
  Rational prefix_weight = 0;
  std::vector<char> on_prefix(n, 0);
  on_prefix[s] = 1;
  for (EdgeId e : prefix) {
    if (e < 0 || e >= m || graph.edge(e).u != end || on_prefix[graph.edge(e).v]) {
      throw InvalidArgument("malformed prefix");
    }
    removed_vertices[end] = 1;
    end = graph.edge(e).v;
    on_prefix[end] = 1;
    prefix_weight += graph.weight(e);
  }
  for (EdgeId e : exclude) {
    if (e < 0 || e >= m) throw InvalidArgument("excluded edge out of range");
    removed_edges[e] = 1;
  }
  for (EdgeId e : prefix) {
    if (removed_edges[e]) return std::nullopt;
  }
  if (end != t && removed_vertices[t]) return std::nullopt;

  const auto dist = shortest_distance(graph, s, t);
  if (!dist) return std::nullopt;
  const Rational remaining = c * *dist - prefix_weight;
  if (remaining < 0) return std::nullopt;

  std::vector<EdgeId> arcs(prefix.begin(), prefix.end());
  if (end != t) {
    SubgraphMask mask{removed_vertices, removed_edges};
    BicriteriaTable table(graph, end, costs, bicriteria_columns(graph, costs), mask);
    const auto col = cheapest_feasible_column(table, t, remaining);
    if (!col) return std::nullopt;
    const auto suffix = table.path_to(t, *col);
    arcs.insert(arcs.end(), suffix.begin(), suffix.end());
  }
  return EdgeSubset(m, std::move(arcs), SolutionRole::kStPath);
}

std::vector<EdgeId> path_edge_order(const Graph& graph, VertexId s, const EdgeSubset& path) {
  std::vector<EdgeId> order;
  std::vector<char> used(graph.edge_count(), 0);
  VertexId v = s;
  while (static_cast<int>(order.size()) < path.size()) {
    EdgeId next = -1;
    for (EdgeId e : graph.out_edges(v)) {
      if (path.contains(e) && !used[e]) {
        next = e;
        break;
      }
    }
    if (next < 0) throw InvalidArgument("edge set is not a path from the source");
    used[next] = 1;
    order.push_back(next);
    v = graph.edge(next).v;
  }
  return order;
}

bool is_simple_st_path(const Graph& graph, VertexId s, VertexId t, const EdgeSubset& path) {
  if (!graph.directed() || path.universe_size() != graph.edge_count()) return false;
  std::vector<char> visited(graph.vertex_count(), 0);
  visited[s] = 1;
  VertexId v = s;
  int steps = 0;
  while (v != t) {
    EdgeId next = -1;
    for (EdgeId e : graph.out_edges(v)) {
      if (path.contains(e)) {
        if (next >= 0) return false;  // branching
        next = e;
      }
    }
    if (next < 0) return false;
    v = graph.edge(next).v;
    if (visited[v]) return false;
    visited[v] = 1;
    ++steps;
  }
  return steps == path.size();
}

Rational path_weight(const Graph& graph, const EdgeSubset& path) {
  Rational total = 0;
  for (EdgeId e : path.ids()) total += graph.weight(e);
  return total;
}

Graph expand_to_arcs(const Graph& undirected) {
  if (undirected.directed()) throw InvalidArgument("graph is already directed");
  std::vector<Edge> arcs;
  std::vector<Rational> weights;
  for (EdgeId e = 0; e < undirected.edge_count(); ++e) {
    const Edge& edge = undirected.edge(e);
    arcs.push_back({edge.u, edge.v});
    arcs.push_back({edge.v, edge.u});
    weights.push_back(undirected.weight(e));
    weights.push_back(undirected.weight(e));
  }
  return Graph(undirected.vertex_count(), true, std::move(arcs), std::move(weights));
}

ShortestPathBcoSolver::ShortestPathBcoSolver(const Graph& graph, VertexId s, VertexId t)
    : graph_(graph), s_(s), t_(t) {
  require_directed_positive(graph);
  require_vertex(graph, s, "source");
  require_vertex(graph, t, "target");
  if (s == t) throw InvalidArgument("source and target must differ");
}

std::optional<EdgeSubset> ShortestPathBcoSolver::solve(const OccurrenceWeights& occurrence,
                                                       const Rational& budget_factor,
                                                       const Restriction& restriction) {
  const auto counts = occurrence.counts();
  return restricted_bicriteria(graph_, s_, t_, counts, budget_factor, restriction.include,
                               restriction.exclude);
}

std::vector<EdgeId> ShortestPathBcoSolver::branch_order(const EdgeSubset& y) const {
  return path_edge_order(graph_, s_, y);
}

DiverseRunReport diverse_short_paths(const Graph& graph, VertexId s, VertexId t, int k,
                                     const Rational& c) {
  ShortestPathBcoSolver solver(graph, s, t);
  if (c < 1) throw InvalidArgument("approximation factor c must be at least 1");
  if (!shortest_distance(graph, s, t)) {
    throw NonExistentError("Non-existent: target unreachable");
  }
  const std::vector<int> zero(graph.edge_count(), 0);
  const EdgeSubset first = bicriteria_shortest_path(graph, s, t, zero, Rational(1));
  DiverseSolveOptions options;
  options.type = ReductionType::kType3;
  try {
    return diverse_solve(solver, first, k, c, options);
  } catch (const NonExistentError&) {
    throw NonExistentError("Non-existent: fewer than k distinct c-approximate st-paths");
  }
}

}  // namespace divopt
