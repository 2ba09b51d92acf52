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

#include <compare>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "divopt/rational.hpp"

namespace divopt {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
};

// Simple graph with dense edge ids 0..m-1. For directed graphs an edge is
// the arc u -> v. Weights are exact, non-negative rationals.
class Graph {
 public:
  Graph(int vertex_count, bool directed, std::vector<Edge> edges,
        std::vector<Rational> weights);

  // Every edge gets weight 1.
  static Graph unit_weight(int vertex_count, bool directed,
                           std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool directed() const { return directed_; }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  const Rational& weight(EdgeId e) const { return weights_[e]; }
  std::span<const Rational> weights() const { return weights_; }

  // Out-arcs for directed graphs; incident edges for undirected ones.
  std::span<const EdgeId> out_edges(VertexId v) const;
  // In-arcs for directed graphs; incident edges for undirected ones.
  std::span<const EdgeId> in_edges(VertexId v) const;

  VertexId other_end(EdgeId e, VertexId v) const;

 private:
  int vertex_count_;
  bool directed_;
  std::vector<Edge> edges_;
  std::vector<Rational> weights_;
  std::vector<int> out_offset_, in_offset_;
  std::vector<EdgeId> out_list_, in_list_;
};

// Line-oriented instance format:
//
//   c <free text>                 comment, ignored (also blank lines)
//   p <directed|undirected> <n> <m>
//   e <u> <v> <weight>            exactly m times, 0-based vertices
//
// Edge ids follow the order of the `e` lines. Weights are integers, "p/q"
// fractions or decimals. Self-loops and duplicate edges are rejected.
Graph parse_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);
void write_graph(std::ostream& out, const Graph& graph);

enum class SolutionRole { kGeneric, kSpanningTree, kStPath, kMatching, kMatroidBasis };

std::string_view role_name(SolutionRole role);

// A solution as a sorted, duplicate-free set of edge ids drawn from a ground
// set of `universe_size` elements. Equality and ordering look only at the
// ground set and the ids; the role is descriptive.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  EdgeSubset(int universe_size, std::vector<EdgeId> ids,
             SolutionRole role = SolutionRole::kGeneric);

  std::span<const EdgeId> ids() const { return ids_; }
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  int universe_size() const { return universe_size_; }
  SolutionRole role() const { return role_; }
  bool contains(EdgeId e) const;

  friend bool operator==(const EdgeSubset& a, const EdgeSubset& b) {
    return a.universe_size_ == b.universe_size_ && a.ids_ == b.ids_;
  }
  friend std::strong_ordering operator<=>(const EdgeSubset& a,
                                          const EdgeSubset& b) {
    if (auto c = a.universe_size_ <=> b.universe_size_; c != 0) return c;
    return a.ids_ <=> b.ids_;
  }

 private:
  int universe_size_ = 0;
  std::vector<EdgeId> ids_;
  SolutionRole role_ = SolutionRole::kGeneric;
};

}  // namespace divopt
