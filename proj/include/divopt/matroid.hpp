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

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "divopt/graph.hpp"
#include "divopt/union_find.hpp"

namespace divopt {

// Grows an independent set one element at a time.
class IndependentSetBuilder {
 public:
  virtual ~IndependentSetBuilder() = default;
  // Adds `element` if the set stays independent; reports whether it did.
  virtual bool try_add(int element) = 0;
};

// Independence-oracle view of a matroid over elements 0..ground_size()-1.
// Oracle calls are pure.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;

  virtual int ground_size() const = 0;
  virtual bool is_independent(std::span<const int> subset) const = 0;
  virtual int rank() const = 0;
  // Generic builder re-queries is_independent on every addition.
  virtual std::unique_ptr<IndependentSetBuilder> builder() const;

  bool is_basis(std::span<const int> subset) const {
    return static_cast<int>(subset.size()) == rank() && is_independent(subset);
  }
};

// Independent sets are the forests of an undirected graph; elements are
// edge ids.
class GraphicMatroid : public MatroidOracle {
 public:
  explicit GraphicMatroid(const Graph& graph);

  int ground_size() const override { return graph_.edge_count(); }
  bool is_independent(std::span<const int> subset) const override;
  int rank() const override { return rank_; }
  std::unique_ptr<IndependentSetBuilder> builder() const override;

  const Graph& graph() const { return graph_; }

 private:
  const Graph& graph_;
  int rank_ = 0;
};

// U(n, r): every set of at most r distinct elements is independent.
class UniformMatroid : public MatroidOracle {
 public:
  UniformMatroid(int ground_size, int rank);

  int ground_size() const override { return n_; }
  bool is_independent(std::span<const int> subset) const override;
  int rank() const override { return r_; }

 private:
  int n_;
  int r_;
};

// Greedy over `order`: include first, then each non-excluded element of
// `order` that keeps the set independent. Returns nullopt when the result is
// not a basis. Throws InvalidArgument when `include` is dependent.
std::optional<std::vector<int>> restricted_greedy(const MatroidOracle& matroid,
                                                  std::span<const int> order,
                                                  std::span<const int> include,
                                                  std::span<const char> excluded);

}  // namespace divopt
