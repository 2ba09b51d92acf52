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

#include "divopt/matroid.hpp"

#include <algorithm>
#include <set>

#include "divopt/errors.hpp"

namespace divopt {
namespace {

class OracleBuilder : public IndependentSetBuilder {
 public:
  explicit OracleBuilder(const MatroidOracle& matroid) : matroid_(matroid) {}

  bool try_add(int element) override {
    current_.push_back(element);
    if (matroid_.is_independent(current_)) return true;
    current_.pop_back();
    return false;
  }

 private:
  const MatroidOracle& matroid_;
  std::vector<int> current_;
};

class ForestBuilder : public IndependentSetBuilder {
 public:
  explicit ForestBuilder(const Graph& graph) : graph_(graph), uf_(graph.vertex_count()) {}

  bool try_add(int element) override {
    const Edge& edge = graph_.edge(element);
    return uf_.unite(edge.u, edge.v);
  }

 private:
  const Graph& graph_;
  UnionFind uf_;
};

bool distinct_in_range(std::span<const int> subset, int n) {
  std::set<int> seen;
  for (int e : subset) {
    if (e < 0 || e >= n || !seen.insert(e).second) return false;
  }
  return true;
}

}  // namespace

std::unique_ptr<IndependentSetBuilder> MatroidOracle::builder() const {
  return std::make_unique<OracleBuilder>(*this);
}

GraphicMatroid::GraphicMatroid(const Graph& graph) : graph_(graph) {
  if (graph.directed()) throw InvalidArgument("graphic matroids need an undirected graph");
  UnionFind uf(graph.vertex_count());
  for (const Edge& edge : graph.edges()) uf.unite(edge.u, edge.v);
  rank_ = graph.vertex_count() - uf.components();
}

bool GraphicMatroid::is_independent(std::span<const int> subset) const {
  if (!distinct_in_range(subset, ground_size())) return false;
  UnionFind uf(graph_.vertex_count());
  for (int e : subset) {
    if (!uf.unite(graph_.edge(e).u, graph_.edge(e).v)) return false;
  }
  return true;
}

std::unique_ptr<IndependentSetBuilder> GraphicMatroid::builder() const {
  return std::make_unique<ForestBuilder>(graph_);
}

UniformMatroid::UniformMatroid(int ground_size, int rank) : n_(ground_size), r_(rank) {
  if (ground_size < 0 || rank < 0 || rank > ground_size) {
    throw InvalidArgument("uniform matroid needs 0 <= rank <= ground size");
  }
}

bool UniformMatroid::is_independent(std::span<const int> subset) const {
  return static_cast<int>(subset.size()) <= r_ && distinct_in_range(subset, n_);
}

std::optional<std::vector<int>> restricted_greedy(const MatroidOracle& matroid,
                                                  std::span<const int> order,
                                                  std::span<const int> include,
                                                  std::span<const char> excluded) {
  auto builder = matroid.builder();
  std::vector<int> basis;
  std::vector<char> taken(matroid.ground_size(), 0);
  for (int e : include) {
    if (e < 0 || e >= matroid.ground_size() || taken[e] || !builder->try_add(e)) {
      throw InvalidArgument("dependent include set");
    }
    taken[e] = 1;
    basis.push_back(e);
  }
  for (int e : order) {
    if (static_cast<int>(basis.size()) == matroid.rank()) break;
    if (taken[e] || (!excluded.empty() && excluded[e])) continue;
    if (builder->try_add(e)) {
      taken[e] = 1;
      basis.push_back(e);
    }
  }
  if (static_cast<int>(basis.size()) != matroid.rank()) return std::nullopt;
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace divopt
