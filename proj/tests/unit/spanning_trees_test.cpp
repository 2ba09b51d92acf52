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
#include "divopt/spanning_trees.hpp"

using namespace divopt;

namespace {

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::unit_weight(n, false, std::move(edges));
}

}  // namespace

TEST_SUITE("spanning_trees") {
  TEST_CASE("zero weights give the first tree in edge order") {
    const Graph g = testing::complete_graph(4);  // 01 02 03 12 13 23
    const EdgeSubset t = min_tree_wrt_occurrence(g, OccurrenceWeights(6));
    CHECK(t == EdgeSubset(6, {0, 1, 2}));
    CHECK(is_spanning_tree(g, t));
  }

  TEST_CASE("K3 with one earlier tree") {
    const Graph g = testing::complete_graph(3);
    const std::vector<EdgeSubset> s{EdgeSubset(3, {0, 1})};
    const EdgeSubset t = min_tree_wrt_occurrence(g, occurrence_weights(s, 3));
    CHECK(t == EdgeSubset(3, {0, 2}));
  }

  TEST_CASE("a tree graph has one spanning tree") {
    const Graph g = path_graph(5);
    const OccurrenceWeights w({3, 3, 3, 3}, 3);
    CHECK(min_tree_wrt_occurrence(g, w) == EdgeSubset(4, {0, 1, 2, 3}));
    const DiverseRunReport r = diverse_spanning_trees(g, 1);
    CHECK(r.solutions.front() == EdgeSubset(4, {0, 1, 2, 3}));
    CHECK_THROWS_AS(diverse_spanning_trees(g, 2), NonExistentError);
  }

  TEST_CASE("restricted trees") {
    const Graph p = path_graph(4);
    const std::vector<EdgeId> bridge{1};
    CHECK_FALSE(restricted_min_tree(p, OccurrenceWeights(3), {}, bridge).has_value());

    const Graph k4 = testing::complete_graph(4);
    const std::vector<EdgeId> forced{3, 4, 5};  // 12 13 23 has a cycle
    CHECK_THROWS_AS(restricted_min_tree(k4, OccurrenceWeights(6), forced, {}), InvalidArgument);
    const std::vector<EdgeId> star{0, 1, 2};
    CHECK(restricted_min_tree(k4, OccurrenceWeights(6), star, {}) == EdgeSubset(6, star));

    const std::vector<EdgeId> drop{0};
    const auto t = restricted_min_tree(k4, OccurrenceWeights(6), {}, drop);
    REQUIRE(t);
    // first tree of K4 − e01 in edge order: 02 03 12
    CHECK(*t == EdgeSubset(6, {1, 2, 3}));
  }

  TEST_CASE("disconnected graphs are rejected") {
    const Graph g = Graph::unit_weight(4, false, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(min_tree_wrt_occurrence(g, OccurrenceWeights(2)), InvalidArgument);
  }

  TEST_CASE("tree certificate") {
    const Graph g = testing::complete_graph(4);
    const TreeCertificate cert(g, EdgeSubset(6, {0, 3, 5}));  // 01 12 23
    CHECK(cert.parent()[0] == -1);
    CHECK(cert.parent()[1] == 0);
    CHECK(cert.parent()[2] == 1);
    CHECK(cert.parent()[3] == 2);
    CHECK(cert.parent_edge()[3] == 5);
    CHECK_THROWS_AS(TreeCertificate(g, EdgeSubset(6, {0, 1})), InvalidArgument);
  }

  TEST_CASE("K3 diverse trees reach the optimum") {
    const DiverseRunReport r = diverse_spanning_trees(testing::complete_graph(3), 3);
    CHECK(r.diversity == 6);
    CHECK(r.guarantee.alpha == 2);
  }

  TEST_CASE("occurrence-minimal tree has maximum farness") {
    testing::Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = testing::random_connected_graph(testing::uniform_int(rng, 2, 6), 0.5, 1,
                                                      1, rng);
      const auto trees = enumerate_spanning_trees(g);
      std::vector<EdgeSubset> prior;
      const int i = testing::uniform_int(rng, 1, 4);
      for (int j = 0; j < i; ++j) prior.push_back(trees[rng() % trees.size()]);
      const auto occ = occurrence_weights(prior, g.edge_count());
      const std::vector<std::int64_t> sizes(i, g.vertex_count() - 1);
      const EdgeSubset best = min_tree_wrt_occurrence(g, occ);
      const std::int64_t far = farness_objective(best, occ, sizes);
      for (const EdgeSubset& t : trees) CHECK(farness_objective(t, occ, sizes) <= far);
    }
  }

  TEST_CASE("tree cost identity") {
    testing::Rng rng(32);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = testing::random_connected_graph(6, 0.5, 1, 1, rng);
      const auto trees = enumerate_spanning_trees(g);
      std::vector<EdgeSubset> prior;
      const int i = testing::uniform_int(rng, 1, 4);
      for (int j = 0; j < i; ++j) prior.push_back(trees[rng() % trees.size()]);
      const auto occ = occurrence_weights(prior, g.edge_count());
      for (const EdgeSubset& t : trees) {
        std::int64_t total = 0;
        for (const EdgeSubset& p : prior) total += hamming_distance(t, p);
        CHECK(2 * occurrence_cost(t, occ) == 2 * (g.vertex_count() - 1) * i - total);
      }
    }
  }

  TEST_CASE("runs stay distinct and within half of the optimum") {
    testing::Rng rng(33);
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = testing::random_connected_graph(5, 0.5, 1, 1, rng);
      const auto trees = enumerate_spanning_trees(g);
      const int k = std::min<int>(3, static_cast<int>(trees.size()));
      const DiverseRunReport r = diverse_spanning_trees(g, k);
      auto sorted = r.solutions;
      std::sort(sorted.begin(), sorted.end());
      CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
      for (const EdgeSubset& t : r.solutions) CHECK(is_spanning_tree(g, t));
      CHECK(2 * r.diversity >= best_k_subset_diversity(trees, k).diversity);
    }
  }

  TEST_CASE("tree computations grow with k times the partition width") {
    testing::Rng rng(34);
    const Graph g = testing::random_connected_graph(12, 0.4, 1, 1, rng);
    const int n = g.vertex_count();
    for (int k : {2, 4, 8, 16}) {
      SpanningTreeBcoSolver solver(g);
      diverse_solve(solver, min_tree_wrt_occurrence(g, OccurrenceWeights(g.edge_count())), k,
                    Rational(1));
      long long bound = 0;
      for (int i = 1; i < k; ++i) bound += 1 + static_cast<long long>(i + 1) * (n - 1);
      CHECK(solver.tree_computations() <= bound);
    }
  }
}
