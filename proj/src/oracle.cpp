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

#include "divopt/oracle.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <tuple>

#include "divopt/errors.hpp"
#include "divopt/solution.hpp"
#include "divopt/union_find.hpp"

namespace divopt {
namespace {

void check_guard(std::size_t count, const char* what) {
  if (static_cast<long long>(count) > kOracleSolutionGuard) {
    throw OracleGuardError(std::string("more than ") + std::to_string(kOracleSolutionGuard) +
                           " " + what);
  }
}

void tree_search(const Graph& graph, EdgeId next, const UnionFind& uf,
                 std::vector<EdgeId>& chosen, std::vector<EdgeSubset>& out) {
  const int need = graph.vertex_count() - 1 - static_cast<int>(chosen.size());
  if (need == 0) {
    out.emplace_back(graph.edge_count(), chosen, SolutionRole::kSpanningTree);
    check_guard(out.size(), "spanning trees");
    return;
  }
  for (EdgeId e = next; e + need <= graph.edge_count(); ++e) {
    UnionFind extended = uf;
    if (!extended.unite(graph.edge(e).u, graph.edge(e).v)) continue;
    chosen.push_back(e);
    tree_search(graph, e + 1, extended, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

BigInt kirchhoff_tree_count(const Graph& graph) {
  if (graph.directed()) throw InvalidArgument("tree counting needs an undirected graph");
  const int n = graph.vertex_count();
  if (n == 1) return 1;
  std::vector<std::vector<Rational>> lap(n - 1, std::vector<Rational>(n - 1, 0));
  for (const Edge& edge : graph.edges()) {
    if (edge.u < n - 1) lap[edge.u][edge.u] += 1;
    if (edge.v < n - 1) lap[edge.v][edge.v] += 1;
    if (edge.u < n - 1 && edge.v < n - 1) {
      lap[edge.u][edge.v] -= 1;
      lap[edge.v][edge.u] -= 1;
    }
  }
  Rational det = 1;
  for (int col = 0; col < n - 1; ++col) {
    int pivot = col;
    while (pivot < n - 1 && lap[pivot][col] == 0) ++pivot;
    if (pivot == n - 1) return 0;
    if (pivot != col) {
      std::swap(lap[pivot], lap[col]);
      det = -det;
    }
    det *= lap[col][col];
    for (int r = col + 1; r < n - 1; ++r) {
      if (lap[r][col] == 0) continue;
      const Rational factor = lap[r][col] / lap[col][col];
      for (int c = col; c < n - 1; ++c) lap[r][c] -= factor * lap[col][c];
    }
  }
  return boost::multiprecision::numerator(det);
}

std::vector<EdgeSubset> enumerate_spanning_trees(const Graph& graph) {
  if (graph.directed()) throw InvalidArgument("spanning trees need an undirected graph");
  if (kirchhoff_tree_count(graph) > kOracleSolutionGuard) {
    throw OracleGuardError("more than " + std::to_string(kOracleSolutionGuard) +
                           " spanning trees");
  }
  std::vector<EdgeSubset> out;
  std::vector<EdgeId> chosen;
  tree_search(graph, 0, UnionFind(graph.vertex_count()), chosen, out);
  return out;
}

std::vector<EdgeSubset> enumerate_st_paths(const Graph& graph, VertexId s, VertexId t) {
  if (!graph.directed()) throw InvalidArgument("path enumeration needs a directed graph");
  std::vector<EdgeSubset> out;
  std::vector<char> visited(graph.vertex_count(), 0);
  std::vector<EdgeId> path;
  std::function<void(VertexId)> dfs = [&](VertexId v) {
    if (v == t) {
      out.emplace_back(graph.edge_count(), path, SolutionRole::kStPath);
      check_guard(out.size(), "st-paths");
      return;
    }
    for (EdgeId e : graph.out_edges(v)) {
      const VertexId w = graph.edge(e).v;
      if (visited[w]) continue;
      visited[w] = 1;
      path.push_back(e);
      dfs(w);
      path.pop_back();
      visited[w] = 0;
    }
  };
  visited[s] = 1;
  if (s != t) dfs(s);
  return out;
}

std::vector<EdgeSubset> enumerate_matchings(const Graph& graph) {
  if (graph.directed()) throw InvalidArgument("matchings need an undirected graph");
  std::vector<EdgeSubset> out;
  std::vector<char> covered(graph.vertex_count(), 0);
  std::vector<EdgeId> chosen;
  std::function<void(EdgeId)> search = [&](EdgeId next) {
    out.emplace_back(graph.edge_count(), chosen, SolutionRole::kMatching);
    check_guard(out.size(), "matchings");
    for (EdgeId e = next; e < graph.edge_count(); ++e) {
      const Edge& edge = graph.edge(e);
      if (covered[edge.u] || covered[edge.v]) continue;
      covered[edge.u] = covered[edge.v] = 1;
      chosen.push_back(e);
      search(e + 1);
      chosen.pop_back();
      covered[edge.u] = covered[edge.v] = 0;
    }
  };
  search(0);
  return out;
}

std::vector<EdgeSubset> enumerate_bases(const MatroidOracle& matroid) {
  const int m = matroid.ground_size();
  const int r = matroid.rank();
  std::vector<EdgeSubset> out;
  std::vector<int> chosen;
  std::function<void(int)> search = [&](int next) {
    if (static_cast<int>(chosen.size()) == r) {
      out.emplace_back(m, chosen, SolutionRole::kMatroidBasis);
      check_guard(out.size(), "bases");
      return;
    }
    for (int e = next; e + (r - static_cast<int>(chosen.size())) <= m; ++e) {
      chosen.push_back(e);
      if (matroid.is_independent(chosen)) search(e + 1);
      chosen.pop_back();
    }
  };
  search(0);
  return out;
}

std::vector<std::vector<std::optional<Rational>>> brute_force_bicriteria(
    const Graph& graph, VertexId source, std::span<const int> f, int column_count) {
  if (!graph.directed()) throw InvalidArgument("bicriteria oracle needs a directed graph");
  const int n = graph.vertex_count();
  std::vector<std::vector<std::optional<Rational>>> table(
      n, std::vector<std::optional<Rational>>(column_count));
  // best[v][cost] over enumerated simple paths, then prefix minima.
  std::vector<char> visited(n, 0);
  long long visits = 0;
  std::function<void(VertexId, int, const Rational&)> dfs = [&](VertexId v, int cost,
                                                                const Rational& length) {
    if (++visits > kOracleSolutionGuard) throw OracleGuardError("too many simple paths");
    if (cost < column_count) {
      auto& cell = table[v][cost];
      if (!cell || length < *cell) cell = length;
    }
    for (EdgeId e : graph.out_edges(v)) {
      const VertexId w = graph.edge(e).v;
      if (visited[w]) continue;
      visited[w] = 1;
      dfs(w, cost + f[e], length + graph.weight(e));
      visited[w] = 0;
    }
  };
  visited[source] = 1;
  dfs(source, 0, Rational(0));
  for (auto& row : table) {
    for (int c = 1; c < column_count; ++c) {
      if (row[c - 1] && (!row[c] || *row[c - 1] < *row[c])) row[c] = row[c - 1];
    }
  }
  return table;
}

SubsetOptimum best_k_subset_diversity(std::span<const EdgeSubset> solutions, int k) {
  const int n = static_cast<int>(solutions.size());
  if (k < 1 || k > n) throw InvalidArgument("k must lie in [1, number of solutions]");
  if (k == 1) return {{0}, 0};
  if (static_cast<long long>(n) * n > 64LL * kOracleSolutionGuard) {
    throw OracleGuardError("too many candidate solutions for subset search");
  }
  std::vector<std::vector<std::int64_t>> dist(n, std::vector<std::int64_t>(n, 0));
  std::vector<std::tuple<std::int64_t, int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      dist[a][b] = dist[b][a] = hamming_distance(solutions[a], solutions[b]);
      pairs.emplace_back(-dist[a][b], a, b);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  const std::int64_t all_pairs = static_cast<std::int64_t>(k) * (k - 1) / 2;

  SubsetOptimum best;
  best.diversity = -1;
  std::vector<int> chosen;
  std::vector<int> candidates;
  std::int64_t cap = 0;
  std::function<void(std::size_t, std::int64_t)> extend = [&](std::size_t from,
                                                               std::int64_t value) {
    const std::int64_t picked = static_cast<std::int64_t>(chosen.size());
    if (picked == k) {
      if (value > best.diversity) {
        best.diversity = value;
        best.indices = chosen;
      }
      return;
    }
    const std::int64_t open_pairs = all_pairs - picked * (picked - 1) / 2;
    if (value + open_pairs * cap <= best.diversity) return;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const int c = candidates[i];
      std::int64_t gain = 0;
      for (int x : chosen) gain += dist[x][c];
      chosen.push_back(c);
      extend(i + 1, value + gain);
      chosen.pop_back();
    }
  };

  for (const auto& [neg, a, b] : pairs) {
    cap = -neg;
    if (all_pairs * cap <= best.diversity) break;
    candidates.clear();
    for (int c = 0; c < n; ++c) {
      if (c != a && c != b && dist[a][c] <= cap && dist[b][c] <= cap) candidates.push_back(c);
    }
    chosen = {a, b};
    extend(0, cap);
  }
  std::sort(best.indices.begin(), best.indices.end());
  return best;
}

}  // namespace divopt
