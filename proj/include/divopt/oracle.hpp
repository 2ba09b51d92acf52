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
#include <span>
#include <vector>

#include "divopt/graph.hpp"
#include "divopt/matroid.hpp"
#include "divopt/rational.hpp"

namespace divopt {

// Brute-force reference implementations for small instances. Every
// enumerator refuses (OracleGuardError) once it would list more than
// kOracleSolutionGuard solutions.
inline constexpr long long kOracleSolutionGuard = 500'000;

// Number of spanning trees by the matrix-tree theorem (exact).
BigInt kirchhoff_tree_count(const Graph& graph);

std::vector<EdgeSubset> enumerate_spanning_trees(const Graph& graph);

// All simple directed s→t paths.
std::vector<EdgeSubset> enumerate_st_paths(const Graph& graph, VertexId s, VertexId t);

// All matchings, including the empty one.
std::vector<EdgeSubset> enumerate_matchings(const Graph& graph);

std::vector<EdgeSubset> enumerate_bases(const MatroidOracle& matroid);

// table[v][c'] = min ω over simple source→v paths with Σ f ≤ c', by path
// enumeration; nullopt for ∞.
std::vector<std::vector<std::optional<Rational>>> brute_force_bicriteria(
    const Graph& graph, VertexId source, std::span<const int> f, int column_count);

struct SubsetOptimum {
  std::vector<int> indices;  // into the candidate list, ascending
  std::int64_t diversity = 0;
};

// Maximum diversity over all k-subsets of `solutions` by branch and bound on
// the largest pairwise distance. Throws InvalidArgument when k exceeds the
// number of solutions.
SubsetOptimum best_k_subset_diversity(std::span<const EdgeSubset> solutions, int k);

}  // namespace divopt
