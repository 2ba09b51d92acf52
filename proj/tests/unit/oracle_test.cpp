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
#include "divopt/matroid.hpp"
#include "divopt/oracle.hpp"
#include "divopt/spanning_trees.hpp"

using namespace divopt;

namespace {

std::int64_t naive_best(std::span<const EdgeSubset> solutions, int k) {
  const int n = static_cast<int>(solutions.size());
  std::vector<char> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  std::int64_t best = 0;
  do {
    std::vector<EdgeSubset> chosen;
    for (int i = 0; i < n; ++i) {
      if (pick[i]) chosen.push_back(solutions[i]);
    }
    best = std::max(best, diversity_sum(chosen));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("tree counts") {
    for (int n = 1; n <= 7; ++n) {
      BigInt expected = 1;
      for (int i = 0; i < n - 2; ++i) expected *= n;
      CHECK(kirchhoff_tree_count(testing::complete_graph(n)) == expected);
    }
    CHECK(kirchhoff_tree_count(Graph::unit_weight(4, false, {{0, 1}, {2, 3}})) == 0);
    CHECK(enumerate_spanning_trees(testing::complete_graph(5)).size() == 125);
  }

  TEST_CASE("enumerated trees agree with the matrix-tree count") {
    testing::Rng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = testing::random_connected_graph(testing::uniform_int(rng, 1, 7), 0.5, 1,
                                                      1, rng);
      const auto trees = enumerate_spanning_trees(g);
      CHECK(BigInt(trees.size()) == kirchhoff_tree_count(g));
      for (const EdgeSubset& t : trees) CHECK(is_spanning_tree(g, t));
      auto sorted = trees;
      std::sort(sorted.begin(), sorted.end());
      CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
  }

  TEST_CASE("guard refuses large enumerations") {
    CHECK_THROWS_AS(enumerate_spanning_trees(testing::complete_graph(10)), OracleGuardError);
  }

  TEST_CASE("path, matching and basis counts") {
    std::vector<Edge> arcs;
    for (int u = 0; u < 6; ++u) {
      for (int v = u + 1; v < 6; ++v) arcs.push_back({u, v});
    }
    const Graph dag = Graph::unit_weight(6, true, arcs);
    CHECK(enumerate_st_paths(dag, 0, 5).size() == 16);
    CHECK(enumerate_st_paths(dag, 5, 0).empty());
    CHECK(enumerate_matchings(testing::complete_graph(4)).size() == 10);
    CHECK(enumerate_matchings(testing::complete_graph(6)).size() == 76);
    CHECK(enumerate_bases(UniformMatroid(5, 2)).size() == 10);
    CHECK(enumerate_bases(GraphicMatroid(testing::complete_graph(4))).size() == 16);
  }

  TEST_CASE("bicriteria oracle on a small digraph") {
    const Graph g(3, true, {{0, 1}, {1, 2}, {0, 2}}, {Rational(1), Rational(1), Rational(5)});
    const std::vector<int> f{1, 1, 0};
    const auto table = brute_force_bicriteria(g, 0, f, 3);
    CHECK(table[0][0] == Rational(0));
    CHECK(table[1][0] == std::nullopt);
    CHECK(table[1][1] == Rational(1));
    CHECK(table[2][0] == Rational(5));
    CHECK(table[2][1] == Rational(5));
    CHECK(table[2][2] == Rational(2));
  }

  TEST_CASE("subset search matches exhaustive choice") {
    testing::Rng rng(72);
    for (int trial = 0; trial < 60; ++trial) {
      const int m = testing::uniform_int(rng, 1, 8);
      const int count = testing::uniform_int(rng, 1, 10);
      std::vector<EdgeSubset> pool;
      for (int i = 0; i < count; ++i) pool.push_back(testing::random_subset(m, rng));
      const int k = testing::uniform_int(rng, 1, count);
      const SubsetOptimum best = best_k_subset_diversity(pool, k);
      CHECK(best.diversity == naive_best(pool, k));
      REQUIRE(static_cast<int>(best.indices.size()) == k);
      std::vector<EdgeSubset> chosen;
      for (int i : best.indices) chosen.push_back(pool[i]);
      CHECK(diversity_sum(chosen) == best.diversity);
    }
    std::vector<EdgeSubset> two{EdgeSubset(2, {0}), EdgeSubset(2, {1})};
    CHECK_THROWS_AS(best_k_subset_diversity(two, 3), InvalidArgument);
  }
}
