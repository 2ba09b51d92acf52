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

#include "divopt/solution.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "divopt/errors.hpp"

namespace divopt {

std::int64_t hamming_distance(const EdgeSubset& a, const EdgeSubset& b) {
  if (a.universe_size() != b.universe_size()) throw IncomparableSolutions();
  auto x = a.ids();
  auto y = b.ids();
  std::size_t i = 0, j = 0;
  std::int64_t common = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) {
      ++common;
      ++i;
      ++j;
    } else if (x[i] < y[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return static_cast<std::int64_t>(x.size() + y.size()) - 2 * common;
}

std::int64_t diversity_sum(std::span<const EdgeSubset> solutions) {
  if (solutions.empty()) throw InvalidArgument("diversity of an empty solution list");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    for (std::size_t j = i + 1; j < solutions.size(); ++j) {
      total += hamming_distance(solutions[i], solutions[j]);
    }
  }
  return total;
}

std::vector<std::vector<std::int64_t>> pairwise_distances(
    std::span<const EdgeSubset> solutions) {
  const std::size_t k = solutions.size();
  std::vector<std::vector<std::int64_t>> d(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      d[i][j] = d[j][i] = hamming_distance(solutions[i], solutions[j]);
    }
  }
  return d;
}

OccurrenceWeights::OccurrenceWeights(int edge_count) : counts_(edge_count, 0) {
  if (edge_count < 0) throw InvalidArgument("negative edge count");
}

OccurrenceWeights::OccurrenceWeights(std::vector<int> counts, int num_solutions)
    : counts_(std::move(counts)), num_solutions_(num_solutions) {
  if (num_solutions_ < 0) throw InvalidArgument("negative solution count");
  for (std::size_t e = 0; e < counts_.size(); ++e) {
    if (counts_[e] < 0 || counts_[e] > num_solutions_) {
      throw InvalidArgument("occurrence count out of range at element " +
                            std::to_string(e));
    }
  }
}

int OccurrenceWeights::max_count() const {
  return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
}

OccurrenceWeights occurrence_weights(std::span<const EdgeSubset> solutions,
                                     int edge_count) {
  std::vector<int> counts(edge_count, 0);
  for (const EdgeSubset& y : solutions) {
    if (y.universe_size() != edge_count) throw IncomparableSolutions();
    for (EdgeId e : y.ids()) ++counts[e];
  }
  return OccurrenceWeights(std::move(counts), static_cast<int>(solutions.size()));
}

std::int64_t occurrence_cost(const EdgeSubset& y, const OccurrenceWeights& weights) {
  if (y.universe_size() != weights.edge_count()) throw IncomparableSolutions();
  std::int64_t total = 0;
  for (EdgeId e : y.ids()) total += weights.count(e);
  return total;
}

std::int64_t farness_objective(const EdgeSubset& y, const OccurrenceWeights& weights,
                               std::span<const std::int64_t> solution_sizes) {
  if (static_cast<int>(solution_sizes.size()) != weights.num_solutions()) {
    throw InvalidArgument("solution sizes do not match the occurrence weights");
  }
  const std::int64_t sizes =
      std::accumulate(solution_sizes.begin(), solution_sizes.end(), std::int64_t{0});
  return sizes + static_cast<std::int64_t>(weights.num_solutions()) * y.size() -
         2 * occurrence_cost(y, weights);
}

}  // namespace divopt
