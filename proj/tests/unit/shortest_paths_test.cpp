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

#include <algorithm>

#include "doctest.h"
#include "generators.hpp"

#include "divopt/errors.hpp"
#include "divopt/oracle.hpp"
#include "divopt/shortest_paths.hpp"

using namespace divopt;

namespace {

Graph parallel_routes() {
  // 0→1→3 has length 1, 0→2→3 has length 3/2
  return Graph(4, true, {{0, 1}, {1, 3}, {0, 2}, {2, 3}},
               {Rational(1, 2), Rational(1, 2), Rational(3, 4), Rational(3, 4)});
}

Graph grid(int side) {
  std::vector<Edge> edges;
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      const int v = r * side + c;
      if (c + 1 < side) edges.push_back({v, v + 1});
      if (r + 1 < side) edges.push_back({v, v + side});
    }
  }
  return Graph::unit_weight(side * side, false, std::move(edges));
}

Graph random_dag(int n, double p, int max_weight, testing::Rng& rng) {
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) {
        edges.push_back({u, v});
        weights.push_back(testing::uniform_int(rng, 1, max_weight));
      }
    }
  }
  return Graph(n, true, std::move(edges), std::move(weights));
}

std::vector<int> random_costs(int m, int r, testing::Rng& rng) {
  std::vector<int> f(m);
  for (int& x : f) x = testing::uniform_int(rng, 0, r);
  return f;
}

void check_table_against_oracle(const Graph& g, VertexId s, const std::vector<int>& f) {
  const int columns = bicriteria_columns(g, f);
  const BicriteriaTable table(g, s, f, columns);
  const auto expected = brute_force_bicriteria(g, s, f, columns);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (int col = 0; col < columns; ++col) {
      REQUIRE(table.value(v, col) == expected[v][col]);
      if (col > 0 && table.value(v, col - 1)) {
        CHECK(*table.value(v, col) <= *table.value(v, col - 1));
      }
      if (!table.value(v, col) || v == s) continue;
      const EdgeSubset path(g.edge_count(), table.path_to(v, col), SolutionRole::kStPath);
      CHECK(is_simple_st_path(g, s, v, path));
      CHECK(path_weight(g, path) == *table.value(v, col));
      int cost = 0;
      for (EdgeId e : path.ids()) cost += f[e];
      CHECK(cost <= col);
    }
  }
}

}  // namespace

TEST_SUITE("shortest_paths") {
  TEST_CASE("shortest distance") {
    const Graph g = parallel_routes();
    CHECK(shortest_distance(g, 0, 3) == Rational(1));
    CHECK_FALSE(shortest_distance(g, 3, 0).has_value());
  }

  TEST_CASE("zero second criterion gives a shortest path") {
    const Graph g = parallel_routes();
    const std::vector<int> f(4, 0);
    const EdgeSubset p = bicriteria_shortest_path(g, 0, 3, f, Rational(1));
    CHECK(p == EdgeSubset(4, {0, 1}));
  }

  TEST_CASE("budget decides between the parallel routes") {
    const Graph g = parallel_routes();
    const std::vector<int> f{1, 0, 0, 0};
    CHECK(bicriteria_shortest_path(g, 0, 3, f, Rational(2)) == EdgeSubset(4, {2, 3}));
    CHECK(bicriteria_shortest_path(g, 0, 3, f, Rational(6, 5)) == EdgeSubset(4, {0, 1}));
  }

  TEST_CASE("input validation") {
    const Graph zero(3, true, {{0, 1}, {1, 2}}, {Rational(0), Rational(1)});
    const std::vector<int> f(2, 0);
    CHECK_THROWS_AS(bicriteria_shortest_path(zero, 0, 2, f, Rational(1)), InvalidArgument);
    const Graph g = parallel_routes();
    const std::vector<int> f4(4, 0);
    CHECK_THROWS_AS(bicriteria_shortest_path(g, 3, 0, f4, Rational(1)), InvalidArgument);
    CHECK_THROWS_AS(bicriteria_shortest_path(g, 0, 3, f4, Rational(1, 2)), InvalidArgument);
    const Graph undirected = Graph::unit_weight(2, false, {{0, 1}});
    const std::vector<int> f1(1, 0);
    CHECK_THROWS_AS(bicriteria_shortest_path(undirected, 0, 1, f1, Rational(1)),
                    InvalidArgument);
  }

  TEST_CASE("restricted completions") {
    const Graph g = parallel_routes();
    const std::vector<int> f(4, 0);
    const std::vector<EdgeId> full{0, 1};
    CHECK(restricted_bicriteria(g, 0, 3, f, Rational(1), full, {}) == EdgeSubset(4, full));
    const std::vector<EdgeId> into_t{1, 3};
    CHECK_FALSE(restricted_bicriteria(g, 0, 3, f, Rational(2), {}, into_t).has_value());
    const std::vector<EdgeId> worse{2};
    CHECK_FALSE(restricted_bicriteria(g, 0, 3, f, Rational(1), worse, {}).has_value());
    CHECK(restricted_bicriteria(g, 0, 3, f, Rational(3, 2), worse, {}) ==
          EdgeSubset(4, {2, 3}));
    const std::vector<EdgeId> broken{1};
    CHECK_THROWS_AS(restricted_bicriteria(g, 0, 3, f, Rational(2), broken, {}),
                    InvalidArgument);
  }

  TEST_CASE("diamond prefix takes the cheapest completion of its branch") {
    // 0→1 1→3 0→2 2→3 2→1
    const Graph g(4, true, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {2, 1}},
                  {Rational(1), Rational(1), Rational(2), Rational(2), Rational(2)});
    const std::vector<int> f{0, 0, 0, 1, 0};
    const std::vector<EdgeId> prefix{2};
    CHECK(restricted_bicriteria(g, 0, 3, f, Rational(3), prefix, {}) ==
          EdgeSubset(5, {1, 2, 4}));
    CHECK(restricted_bicriteria(g, 0, 3, f, Rational(2), prefix, {}) ==
          EdgeSubset(5, {2, 3}));
  }

  TEST_CASE("table matches path enumeration on random DAGs") {
    testing::Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = testing::uniform_int(rng, 2, 8);
      const Graph g = random_dag(n, 0.5, 4, rng);
      check_table_against_oracle(g, 0, random_costs(g.edge_count(), 3, rng));
    }
  }

  TEST_CASE("table matches path enumeration on general digraphs") {
    testing::Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = testing::uniform_int(rng, 2, 7);
      const Graph g = testing::random_digraph(n, 0.4, 5, rng, trial % 2 == 1);
      check_table_against_oracle(g, testing::uniform_int(rng, 0, n - 1),
                                 random_costs(g.edge_count(), 2, rng));
    }
  }

  TEST_CASE("bicriteria optimum matches enumeration") {
    testing::Rng rng(43);
    for (int trial = 0; trial < 80; ++trial) {
      const int n = testing::uniform_int(rng, 3, 7);
      const Graph g = testing::random_digraph(n, 0.5, 6, rng);
      if (!shortest_distance(g, 0, n - 1)) continue;
      const std::vector<int> f = random_costs(g.edge_count(), 3, rng);
      const Rational c(testing::uniform_int(rng, 10, 20), 10);
      const EdgeSubset p = bicriteria_shortest_path(g, 0, n - 1, f, c);
      const Rational budget = c * *shortest_distance(g, 0, n - 1);
      CHECK(is_simple_st_path(g, 0, n - 1, p));
      CHECK(path_weight(g, p) <= budget);
      auto cost = [&](const EdgeSubset& q) {
        int total = 0;
        for (EdgeId e : q.ids()) total += f[e];
        return total;
      };
      for (const EdgeSubset& q : enumerate_st_paths(g, 0, n - 1)) {
        if (path_weight(g, q) <= budget) CHECK(cost(p) <= cost(q));
      }
    }
  }

  TEST_CASE("arc expansion") {
    const Graph g = expand_to_arcs(Graph::unit_weight(3, false, {{0, 1}, {1, 2}}));
    CHECK(g.directed());
    CHECK(g.edge_count() == 4);
    CHECK(g.edge(1).u == 1);
    CHECK(g.edge(1).v == 0);
    CHECK_THROWS_AS(expand_to_arcs(g), InvalidArgument);
  }

  TEST_CASE("two disjoint routes of equal length") {
    const Graph g = Graph::unit_weight(4, true, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
    const DiverseRunReport r = diverse_short_paths(g, 0, 3, 2, Rational(1));
    CHECK(r.diversity == 4);
    CHECK_THROWS_AS(diverse_short_paths(g, 0, 3, 3, Rational(1)), NonExistentError);
    CHECK_THROWS_AS(diverse_short_paths(g, 3, 0, 1, Rational(1)), NonExistentError);
  }

  TEST_CASE("3x3 grid reaches half the optimum") {
    const Graph g = expand_to_arcs(grid(3));
    const Rational c(3, 2);
    const DiverseRunReport r = diverse_short_paths(g, 0, 8, 3, c);
    std::vector<EdgeSubset> feasible;
    for (const EdgeSubset& p : enumerate_st_paths(g, 0, 8)) {
      if (path_weight(g, p) <= c * 4) feasible.push_back(p);
    }
    for (const EdgeSubset& p : r.solutions) {
      CHECK(is_simple_st_path(g, 0, 8, p));
      CHECK(path_weight(g, p) <= c * 4);
    }
    CHECK(2 * r.diversity >= best_k_subset_diversity(feasible, 3).diversity);
  }

  TEST_CASE("random runs stay within budget and half the optimum") {
    testing::Rng rng(44);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
      const int n = testing::uniform_int(rng, 3, 6);
      const Graph g = testing::random_digraph(n, 0.5, 3, rng);
      const auto dist = shortest_distance(g, 0, n - 1);
      if (!dist) continue;
      const Rational c(testing::uniform_int(rng, 10, 25), 10);
      std::vector<EdgeSubset> feasible;
      for (const EdgeSubset& p : enumerate_st_paths(g, 0, n - 1)) {
        if (path_weight(g, p) <= c * *dist) feasible.push_back(p);
      }
      const int k = std::min<int>(3, static_cast<int>(feasible.size()));
      const DiverseRunReport r = diverse_short_paths(g, 0, n - 1, k, c);
      auto sorted = r.solutions;
      std::sort(sorted.begin(), sorted.end());
      CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
      for (const EdgeSubset& p : r.solutions) {
        CHECK(is_simple_st_path(g, 0, n - 1, p));
        CHECK(path_weight(g, p) <= c * *dist);
      }
      CHECK(2 * r.diversity >= best_k_subset_diversity(feasible, k).diversity);
      if (static_cast<int>(feasible.size()) == k) {
        CHECK_THROWS_AS(diverse_short_paths(g, 0, n - 1, k + 1, c), NonExistentError);
      }
      ++checked;
    }
    CHECK(checked > 10);
  }

  TEST_CASE("occurrence objective ignores path length") {
    // 0→5 is shortest; longer zero-occurrence paths are farther from it.
    const std::vector<Edge> arcs{{0, 1}, {0, 2}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                 {2, 0}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 2}, {3, 4},
                                 {3, 5}, {4, 0}, {4, 2}, {4, 5}, {5, 3}};
    const std::vector<int> lengths{2, 1, 2, 2, 1, 2, 1, 1, 1, 1, 1, 1, 2, 2, 1, 2, 2, 2, 1};
    std::vector<Rational> weights(lengths.begin(), lengths.end());
    const Graph g(6, true, arcs, weights);
    const Rational c(2);
    const DiverseRunReport r = diverse_short_paths(g, 0, 5, 2, c);
    CHECK(r.solutions[0] == EdgeSubset(19, {2}));
    CHECK(r.diversity == 3);
    std::vector<EdgeSubset> feasible;
    std::int64_t farthest = 0;
    for (const EdgeSubset& p : enumerate_st_paths(g, 0, 5)) {
      if (path_weight(g, p) > c * 2) continue;
      feasible.push_back(p);
      farthest = std::max(farthest, hamming_distance(p, r.solutions[0]));
    }
    CHECK(farthest == 5);
    CHECK(best_k_subset_diversity(feasible, 2).diversity == 7);
  }
}
