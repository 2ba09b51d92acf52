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
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "divopt/graph.hpp"
#include "divopt/rational.hpp"

namespace divopt {

// Explicit n×n metric. Construction checks the zero diagonal, symmetry and
// non-negativity, and (when `validate_triangle`) all O(n³) triangle
// inequalities. The greedy guarantee assumes the triangle inequality holds.
class FiniteMetric {
 public:
  explicit FiniteMetric(std::vector<std::vector<Rational>> dist,
                        bool validate_triangle = true);

  int size() const { return static_cast<int>(dist_.size()); }
  const Rational& operator()(int i, int j) const { return dist_[i][j]; }

 private:
  std::vector<std::vector<Rational>> dist_;
};

// W(S): the sum of pairwise distances of the points in `points`.
Rational dispersion_value(const FiniteMetric& metric, std::span<const int> points);

// Furthest insertion from `start`: repeatedly add the unselected point with
// the largest total distance to the selection (lowest index on ties).
std::vector<int> furthest_insertion(const FiniteMetric& metric, int k, int start);

struct DispersionOptimum {
  std::vector<int> indices;
  Rational value;
};

inline constexpr long long kExactDispersionGuard = 10'000'000;

// Exhaustive maximum of W(S) over all k-subsets; the first optimal subset in
// lexicographic order wins. Refuses instances with C(n,k) above the guard.
DispersionOptimum exact_dispersion(const FiniteMetric& metric, int k);

// Metric on the vertices of an undirected simple graph: `edge_distance` for
// adjacent pairs, `nonedge_distance` otherwise, 0 on the diagonal.
FiniteMetric gadget_from_graph(const Graph& graph,
                               const Rational& edge_distance = Rational(2),
                               const Rational& nonedge_distance = Rational(1));

struct PlantedClique {
  Graph graph;
  std::vector<int> clique;  // ascending vertex ids
};

// G(n, p) with every pair inside a random `clique_size`-subset joined.
// Unit weights; deterministic for a given seed.
PlantedClique planted_clique_graph(int vertex_count, double edge_probability,
                                   int clique_size, std::uint64_t seed);

// Text format: `p metric <n>` followed by n rows of n rationals. Lines
// starting with `c` are comments.
FiniteMetric parse_metric(std::istream& in, bool validate_triangle = true);
FiniteMetric read_metric_file(const std::filesystem::path& path,
                              bool validate_triangle = true);
void write_metric(std::ostream& out, const FiniteMetric& metric);

}  // namespace divopt
