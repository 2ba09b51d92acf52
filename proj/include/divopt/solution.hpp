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
#include <span>
#include <vector>

#include "divopt/graph.hpp"

namespace divopt {

// |a △ b|. Throws IncomparableSolutions when the ground sets differ.
std::int64_t hamming_distance(const EdgeSubset& a, const EdgeSubset& b);

// Sum of pairwise Hamming distances; 0 for a single solution. Throws
// InvalidArgument on an empty list.
std::int64_t diversity_sum(std::span<const EdgeSubset> solutions);

// Full symmetric distance matrix with zero diagonal.
std::vector<std::vector<std::int64_t>> pairwise_distances(
    std::span<const EdgeSubset> solutions);

// Per-element count of appearances among a list of solutions.
class OccurrenceWeights {
 public:
  OccurrenceWeights() = default;
  // All-zero weights over `edge_count` elements with no solutions recorded.
  explicit OccurrenceWeights(int edge_count);
  // Explicit counts; each must lie in [0, num_solutions].
  OccurrenceWeights(std::vector<int> counts, int num_solutions);

  int count(EdgeId e) const { return counts_[e]; }
  std::span<const int> counts() const { return counts_; }
  int num_solutions() const { return num_solutions_; }
  int edge_count() const { return static_cast<int>(counts_.size()); }
  int max_count() const;

 private:
  std::vector<int> counts_;
  int num_solutions_ = 0;
};

OccurrenceWeights occurrence_weights(std::span<const EdgeSubset> solutions,
                                     int edge_count);

// Σ_{e∈y} count(e).
std::int64_t occurrence_cost(const EdgeSubset& y, const OccurrenceWeights& weights);

// Σ_j d(y, y_j) recovered from the counts alone:
//   Σ_j |y_j| + i·|y| − 2·Σ_{e∈y} count(e)
// `solution_sizes` holds |y_j| for the list the weights were built from.
std::int64_t farness_objective(const EdgeSubset& y, const OccurrenceWeights& weights,
                               std::span<const std::int64_t> solution_sizes);

}  // namespace divopt
