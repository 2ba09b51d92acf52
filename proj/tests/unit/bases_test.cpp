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
#include "divopt/min_weight_bases.hpp"
#include "divopt/oracle.hpp"
#include "divopt/spanning_trees.hpp"

using namespace divopt;

namespace {

std::vector<int> members(unsigned mask, int n) {
  std::vector<int> out;
  for (int e = 0; e < n; ++e) {
    if (mask >> e & 1U) out.push_back(e);
  }
  return out;
}

void check_axioms(const MatroidOracle& matroid) {
  const int n = matroid.ground_size();
  REQUIRE(n <= 10);
  std::vector<char> independent(1U << n);
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    independent[mask] = matroid.is_independent(members(mask, n));
  }
  CHECK(independent[0]);
  int rank = 0;
  for (unsigned a = 0; a < (1U << n); ++a) {
    if (!independent[a]) continue;
    rank = std::max(rank, std::popcount(a));
    for (int e = 0; e < n; ++e) {
      if (a >> e & 1U) CHECK(independent[a & ~(1U << e)]);
    }
    for (unsigned b = 0; b < (1U << n); ++b) {
      if (!independent[b] || std::popcount(b) <= std::popcount(a)) continue;
      bool exchanged = false;
      for (int e = 0; e < n && !exchanged; ++e) {
        if ((b >> e & 1U) && !(a >> e & 1U)) exchanged = independent[a | (1U << e)];
      }
      CHECK(exchanged);
    }
  }
  CHECK(rank == matroid.rank());
}

struct Instance {
  Graph graph;
  std::vector<Rational> weight;
};

Instance weighted(const Graph& g) {
  return {g, std::vector<Rational>(g.weights().begin(), g.weights().end())};
}

std::int64_t ell_cost(std::span<const int> basis, const OccurrenceWeights& occ) {
  std::int64_t total = 0;
  for (int e : basis) total += occ.count(e);
  return total;
}

Rational factor_for(const ConstrainedBasisOptions& options) {
  switch (options.mode) {
    case BasisMode::kLagrangian2: return 2;
    case BasisMode::kPtasEps: return 1 + options.epsilon;
    case BasisMode::kPseudoExact: return 1;
  }
  return 0;
}

}  // namespace

TEST_SUITE("bases") {
  TEST_CASE("matroid axioms") {
    testing::Rng rng(61);
    for (int trial = 0; trial < 15; ++trial) {
      const Graph g = testing::random_graph(testing::uniform_int(rng, 2, 6), 0.5, rng);
      if (g.edge_count() > 10) continue;
      check_axioms(GraphicMatroid(g));
    }
    for (int n = 0; n <= 6; ++n) {
      for (int r = 0; r <= n; ++r) check_axioms(UniformMatroid(n, r));
    }
  }

  TEST_CASE("builders agree with the oracle") {
    const Graph g = testing::complete_graph(4);
    const GraphicMatroid graphic(g);
    auto b = graphic.builder();
    CHECK(b->try_add(0));
    CHECK(b->try_add(1));
    CHECK_FALSE(b->try_add(3));  // 12 closes the triangle 0-1-2
    CHECK(b->try_add(2));
    const UniformMatroid uniform(4, 2);
    auto u = uniform.builder();
    CHECK(u->try_add(3));
    CHECK(u->try_add(0));
    CHECK_FALSE(u->try_add(1));
  }

  TEST_CASE("restricted greedy") {
    const UniformMatroid u(4, 2);
    const std::vector<int> order{3, 2, 1, 0};
    const std::vector<char> none(4, 0);
    const std::vector<int> inc{0};
    CHECK(restricted_greedy(u, order, inc, none) == std::vector<int>{0, 3});
    const std::vector<char> most{0, 1, 1, 1};
    CHECK_FALSE(restricted_greedy(u, order, {}, most).has_value());
    const std::vector<int> too_many{0, 1, 2};
    CHECK_THROWS_AS(restricted_greedy(u, order, too_many, none), InvalidArgument);
  }

  TEST_CASE("minimum weight basis examples") {
    const Graph tree = Graph::unit_weight(4, false, {{0, 1}, {1, 2}, {1, 3}});
    const std::vector<Rational> ones(3, 1);
    CHECK(min_weight_basis(GraphicMatroid(tree), ones) == EdgeSubset(3, {0, 1, 2}));

    const Graph k3 = testing::complete_graph(3);
    const std::vector<Rational> w{1, 2, 3};
    const EdgeSubset b = min_weight_basis(GraphicMatroid(k3), w);
    CHECK(b == EdgeSubset(3, {0, 1}));
    CHECK(subset_weight(w, std::vector<int>(b.ids().begin(), b.ids().end())) == 3);

    const std::vector<Rational> desc{5, 4, 3, 2, 1};
    CHECK(min_weight_basis(UniformMatroid(5, 2), desc) == EdgeSubset(5, {3, 4}));
    CHECK(min_weight_basis(UniformMatroid(3, 0), std::vector<Rational>(3, 1)).empty());
  }

  TEST_CASE("mode names") {
    for (BasisMode mode : {BasisMode::kLagrangian2, BasisMode::kPtasEps, BasisMode::kPseudoExact}) {
      CHECK(parse_basis_mode(basis_mode_name(mode)) == mode);
    }
    CHECK(basis_mode_name(BasisMode::kLagrangian2) == "lagrangian-2");
    CHECK_THROWS_AS(parse_basis_mode("greedy"), InvalidArgument);
  }

  TEST_CASE("zero occurrence gives a minimum weight basis") {
    const Graph g(4, false, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}},
                  {Rational(3), Rational(1), Rational(2), Rational(5), Rational(1)});
    const auto inst = weighted(g);
    const GraphicMatroid m(inst.graph);
    const auto b = constrained_basis(m, inst.weight, OccurrenceWeights(5), Rational(10),
                                     ConstrainedBasisOptions{}, {}, {});
    REQUIRE(b);
    CHECK(*b == min_weight_basis(m, inst.weight));
  }

  TEST_CASE("modes differ on a tight triangle") {
    const Graph g(3, false, {{0, 1}, {1, 2}, {0, 2}}, {Rational(1), Rational(1), Rational(2)});
    const auto inst = weighted(g);
    const GraphicMatroid m(inst.graph);
    const OccurrenceWeights favour_heavy({1, 1, 0}, 1);
    ConstrainedBasisOptions options;
    options.mode = BasisMode::kPseudoExact;
    const auto strict = constrained_basis(m, inst.weight, favour_heavy, Rational(2), options, {}, {});
    CHECK(strict == EdgeSubset(3, {0, 1}));
    options.mode = BasisMode::kLagrangian2;
    const auto loose = constrained_basis(m, inst.weight, favour_heavy, Rational(2), options, {}, {});
    REQUIRE(loose);
    const std::vector<int> ids(loose->ids().begin(), loose->ids().end());
    CHECK(subset_weight(inst.weight, ids) <= 4);
    CHECK(ell_cost(ids, favour_heavy) <= 2);
  }

  TEST_CASE("modes honour their contracts against enumeration") {
    testing::Rng rng(62);
    for (int trial = 0; trial < 90; ++trial) {
      const int n = testing::uniform_int(rng, 2, 6);
      const Graph g = testing::random_connected_graph(n, 0.5, 1, 6, rng);
      const auto inst = weighted(g);
      const GraphicMatroid m(inst.graph);
      const int edges = g.edge_count();
      const int i = testing::uniform_int(rng, 1, 4);
      std::vector<int> counts(edges);
      for (int& x : counts) x = testing::uniform_int(rng, 0, i);
      const OccurrenceWeights occ(counts, i);
      const auto bases = enumerate_bases(m);
      Rational lo = -1, hi = 0;
      for (const EdgeSubset& b : bases) {
        const Rational w = subset_weight(inst.weight, {b.ids().begin(), b.ids().end()});
        if (lo < 0 || w < lo) lo = w;
        hi = std::max(hi, w);
      }
      const Rational budget = lo + (hi - lo) * testing::uniform_int(rng, 0, 4) / 4;
      std::vector<int> include, exclude;
      for (int e = 0; e < edges; ++e) {
        const int roll = testing::uniform_int(rng, 0, 9);
        if (roll == 0) {
          include.push_back(e);
          if (!m.is_independent(include)) include.pop_back();
        } else if (roll == 1) {
          exclude.push_back(e);
        }
      }
      auto respects = [&](const EdgeSubset& b) {
        for (int e : include) {
          if (!b.contains(e)) return false;
        }
        for (int e : exclude) {
          if (b.contains(e)) return false;
        }
        return true;
      };
      std::optional<std::int64_t> best;
      for (const EdgeSubset& b : bases) {
        const std::vector<int> ids(b.ids().begin(), b.ids().end());
        if (!respects(b) || subset_weight(inst.weight, ids) > budget) continue;
        const std::int64_t cost = ell_cost(ids, occ);
        if (!best || cost < *best) best = cost;
      }
      for (BasisMode mode :
           {BasisMode::kLagrangian2, BasisMode::kPtasEps, BasisMode::kPseudoExact}) {
        ConstrainedBasisOptions options;
        options.mode = mode;
        options.epsilon = Rational(1, testing::uniform_int(rng, 1, 4));
        const auto got = constrained_basis(m, inst.weight, occ, budget, options, include, exclude);
        CHECK(got.has_value() == best.has_value());
        if (!got || !best) continue;
        const std::vector<int> ids(got->ids().begin(), got->ids().end());
        CHECK(m.is_basis(ids));
        CHECK(respects(*got));
        CHECK(subset_weight(inst.weight, ids) <= factor_for(options) * budget);
        if (mode == BasisMode::kPseudoExact) {
          CHECK(ell_cost(ids, occ) <= (1 + options.epsilon) * *best);
        } else {
          CHECK(ell_cost(ids, occ) <= *best);
        }
      }
    }
  }

  TEST_CASE("uniform matroids with the general modes") {
    testing::Rng rng(63);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = testing::uniform_int(rng, 1, 7);
      const int r = testing::uniform_int(rng, 1, n);
      const UniformMatroid u(n, r);
      std::vector<Rational> w(n);
      std::vector<int> counts(n);
      for (int e = 0; e < n; ++e) {
        w[e] = testing::uniform_int(rng, 1, 9);
        counts[e] = testing::uniform_int(rng, 0, 3);
      }
      const OccurrenceWeights occ(counts, 3);
      const EdgeSubset lightest = min_weight_basis(u, w);
      const Rational budget =
          subset_weight(w, std::vector<int>(lightest.ids().begin(), lightest.ids().end())) +
          trial % 5;
      std::optional<std::int64_t> best;
      for (const EdgeSubset& b : enumerate_bases(u)) {
        const std::vector<int> ids(b.ids().begin(), b.ids().end());
        if (subset_weight(w, ids) > budget) continue;
        const std::int64_t cost = ell_cost(ids, occ);
        if (!best || cost < *best) best = cost;
      }
      REQUIRE(best);
      for (BasisMode mode : {BasisMode::kLagrangian2, BasisMode::kPtasEps}) {
        ConstrainedBasisOptions options;
        options.mode = mode;
        const auto got = constrained_basis(u, w, occ, budget, options, {}, {});
        REQUIRE(got);
        const std::vector<int> ids(got->ids().begin(), got->ids().end());
        CHECK(subset_weight(w, ids) <= factor_for(options) * budget);
        CHECK(ell_cost(ids, occ) <= *best);
      }
      ConstrainedBasisOptions pseudo;
      pseudo.mode = BasisMode::kPseudoExact;
      CHECK_THROWS_AS(constrained_basis(u, w, occ, budget, pseudo, {}, {}), InvalidArgument);
    }
  }

  TEST_CASE("invalid requests") {
    const Graph k3 = testing::complete_graph(3);
    const GraphicMatroid m(k3);
    const std::vector<Rational> w(3, 1);
    const std::vector<int> cycle{0, 1, 2};
    CHECK_THROWS_AS(constrained_basis(m, w, OccurrenceWeights(3), Rational(2),
                                      ConstrainedBasisOptions{}, cycle, {}),
                    InvalidArgument);
    ConstrainedBasisOptions pseudo;
    pseudo.mode = BasisMode::kPseudoExact;
    const std::vector<Rational> half{Rational(1, 2), 1, 1};
    CHECK_THROWS_AS(constrained_basis(m, half, OccurrenceWeights(3), Rational(2), pseudo, {}, {}),
                    InvalidArgument);
    const Graph split = Graph::unit_weight(4, false, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(constrained_basis(GraphicMatroid(split), std::vector<Rational>(2, 1),
                                      OccurrenceWeights(2), Rational(2), pseudo, {}, {}),
                    InvalidArgument);
  }

  TEST_CASE("ptas work cap") {
    const Graph k10 = testing::complete_graph(10);
    const GraphicMatroid m(k10);
    std::vector<Rational> w(k10.edge_count(), 1);
    std::vector<int> counts(k10.edge_count(), 1);
    for (EdgeId e = 0; e < k10.edge_count(); ++e) {
      if (k10.edge(e).u == 0) {
        w[e] = 2;
        counts[e] = 0;
      }
    }
    ConstrainedBasisOptions options;
    options.mode = BasisMode::kPtasEps;
    options.epsilon = Rational(1, 100);
    CHECK_THROWS_WITH_AS(constrained_basis(m, w, OccurrenceWeights(counts, 1), Rational(10),
                                           options, {}, {}),
                         doctest::Contains("work cap"), InvalidArgument);
  }

  TEST_CASE("equal weights reduce to diverse spanning trees") {
    testing::Rng rng(64);
    for (int trial = 0; trial < 10; ++trial) {
      const Graph g = testing::random_connected_graph(5, 0.6, 1, 1, rng);
      const int k = std::min<int>(4, static_cast<int>(enumerate_spanning_trees(g).size()));
      const GraphicMatroid m(g);
      const std::vector<Rational> w(g.edge_count(), 1);
      const DiverseRunReport trees = diverse_spanning_trees(g, k);
      for (BasisMode mode : {BasisMode::kLagrangian2, BasisMode::kPtasEps, BasisMode::kPseudoExact}) {
        ConstrainedBasisOptions options;
        options.mode = mode;
        const DiverseRunReport bases = diverse_min_weight_bases(m, w, k, Rational(3, 2), options);
        CHECK(bases.diversity == trees.diversity);
      }
    }
  }

  TEST_CASE("a heavy edge outside every minimum tree is avoided") {
    std::vector<Rational> w(6, 1);
    w[0] = 5;
    const Graph k4(4, false, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, w);
    const GraphicMatroid m(k4);
    for (BasisMode mode : {BasisMode::kLagrangian2, BasisMode::kPtasEps, BasisMode::kPseudoExact}) {
      ConstrainedBasisOptions options;
      options.mode = mode;
      const DiverseRunReport r = diverse_min_weight_bases(m, w, 2, Rational(1), options);
      for (const EdgeSubset& t : r.solutions) CHECK_FALSE(t.contains(0));
    }
  }

  TEST_CASE("guarantee tags per mode") {
    const Graph g = testing::complete_graph(4);
    const GraphicMatroid m(g);
    const std::vector<Rational> w(6, 1);
    ConstrainedBasisOptions options;
    options.mode = BasisMode::kLagrangian2;
    auto r = diverse_min_weight_bases(m, w, 2, Rational(3, 2), options);
    CHECK(r.guarantee.type == 4);
    CHECK(r.guarantee.alpha == 4);
    CHECK(r.guarantee.beta == 3);
    options.mode = BasisMode::kPtasEps;
    r = diverse_min_weight_bases(m, w, 2, Rational(3, 2), options);
    CHECK(r.guarantee.beta == Rational(3, 2) * Rational(11, 10));
    options.mode = BasisMode::kPseudoExact;
    r = diverse_min_weight_bases(m, w, 2, Rational(3, 2), options);
    CHECK(r.guarantee.type == 5);
    CHECK(r.guarantee.beta == Rational(3, 2));
    REQUIRE(r.type5);
    CHECK(r.type5->diameter == 6);
  }

  TEST_CASE("outputs stay within budget and reach a quarter of the optimum") {
    testing::Rng rng(65);
    const Rational c(2);
    for (int trial = 0; trial < 8; ++trial) {
      const Graph g = testing::random_connected_graph(6, 0.5, 1, 5, rng);
      const GraphicMatroid m(g);
      const std::vector<Rational> w(g.weights().begin(), g.weights().end());
      const EdgeSubset mst = min_weight_basis(m, w);
      const Rational optimum = subset_weight(w, {mst.ids().begin(), mst.ids().end()});
      std::vector<EdgeSubset> feasible;
      for (const EdgeSubset& t : enumerate_spanning_trees(g)) {
        if (subset_weight(w, {t.ids().begin(), t.ids().end()}) <= c * optimum) feasible.push_back(t);
      }
      const int k = std::min<int>(3, static_cast<int>(feasible.size()));
      for (BasisMode mode : {BasisMode::kLagrangian2, BasisMode::kPtasEps, BasisMode::kPseudoExact}) {
        ConstrainedBasisOptions options;
        options.mode = mode;
        const DiverseRunReport r = diverse_min_weight_bases(m, w, k, c, options);
        auto sorted = r.solutions;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        for (const EdgeSubset& t : r.solutions) {
          CHECK(is_spanning_tree(g, t));
          CHECK(subset_weight(w, {t.ids().begin(), t.ids().end()}) <= r.guarantee.beta * optimum);
        }
        if (mode == BasisMode::kPseudoExact) {
          CHECK(4 * r.diversity >= best_k_subset_diversity(feasible, k).diversity);
        }
      }
    }
  }
}
