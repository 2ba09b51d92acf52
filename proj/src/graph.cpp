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

#include "divopt/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "divopt/errors.hpp"

namespace divopt {
namespace {

void build_csr(int n, const std::vector<std::pair<VertexId, EdgeId>>& pairs,
               std::vector<int>& offset, std::vector<EdgeId>& list) {
  offset.assign(n + 1, 0);
  for (const auto& [v, e] : pairs) ++offset[v + 1];
  for (int v = 0; v < n; ++v) offset[v + 1] += offset[v];
  list.assign(pairs.size(), 0);
  std::vector<int> cursor(offset.begin(), offset.end() - 1);
  // pairs are generated in edge-id order, so each bucket stays sorted
  for (const auto& [v, e] : pairs) list[cursor[v]++] = e;
}

}  // namespace

Graph::Graph(int vertex_count, bool directed, std::vector<Edge> edges,
             std::vector<Rational> weights)
    : vertex_count_(vertex_count),
      directed_(directed),
      edges_(std::move(edges)),
      weights_(std::move(weights)) {
  if (vertex_count_ <= 0) throw InputError("vertex count must be positive");
  if (weights_.size() != edges_.size()) {
    throw InputError("weight count does not match edge count");
  }
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_) {
      throw InputError("edge " + std::to_string(i) + " has an endpoint out of range");
    }
    if (e.u == e.v) throw InputError("self-loop at edge " + std::to_string(i));
    auto key = directed_ ? std::make_pair(e.u, e.v)
                         : std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
    if (!seen.insert(key).second) {
      throw InputError("duplicate edge " + std::to_string(i));
    }
    if (weights_[i] < 0) throw InputError("negative weight on edge " + std::to_string(i));
  }
  std::vector<std::pair<VertexId, EdgeId>> out_pairs, in_pairs;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    out_pairs.emplace_back(edges_[e].u, e);
    if (directed_) {
      in_pairs.emplace_back(edges_[e].v, e);
    } else {
      out_pairs.emplace_back(edges_[e].v, e);
    }
  }
  build_csr(vertex_count_, out_pairs, out_offset_, out_list_);
  if (directed_) {
    build_csr(vertex_count_, in_pairs, in_offset_, in_list_);
  } else {
    in_offset_ = out_offset_;
    in_list_ = out_list_;
  }
}

Graph Graph::unit_weight(int vertex_count, bool directed, std::vector<Edge> edges) {
  std::vector<Rational> weights(edges.size(), Rational(1));
  return Graph(vertex_count, directed, std::move(edges), std::move(weights));
}

std::span<const EdgeId> Graph::out_edges(VertexId v) const {
  return std::span<const EdgeId>(out_list_).subspan(
      out_offset_[v], out_offset_[v + 1] - out_offset_[v]);
}

std::span<const EdgeId> Graph::in_edges(VertexId v) const {
  return std::span<const EdgeId>(in_list_).subspan(
      in_offset_[v], in_offset_[v + 1] - in_offset_[v]);
}

VertexId Graph::other_end(EdgeId e, VertexId v) const {
  return edges_[e].u == v ? edges_[e].v : edges_[e].u;
}

Graph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  bool directed = false;
  int n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  auto fail = [&](const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (have_header) fail("duplicate header");
      std::string kind;
      if (!(ls >> kind >> n >> m)) fail("malformed header");
      if (kind == "directed") {
        directed = true;
      } else if (kind != "undirected") {
        fail("graph kind must be 'directed' or 'undirected'");
      }
      if (n <= 0 || m < 0) fail("header counts out of range");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) fail("edge before header");
      long long u = 0, v = 0;
      std::string w;
      if (!(ls >> u >> v >> w)) fail("malformed edge line");
      if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex out of range");
      edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
      try {
        weights.push_back(parse_rational(w));
      } catch (const InputError& e) {
        fail(e.what());
      }
    } else {
      fail("unknown line tag '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
  }
  if (!have_header) throw InputError("missing 'p' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw InputError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph(n, directed, std::move(edges), std::move(weights));
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& graph) {
  out << "p " << (graph.directed() ? "directed" : "undirected") << ' '
      << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    out << "e " << graph.edge(e).u << ' ' << graph.edge(e).v << ' '
        << to_string(graph.weight(e)) << '\n';
  }
}

std::string_view role_name(SolutionRole role) {
  switch (role) {
    case SolutionRole::kSpanningTree: return "spanning-tree";
    case SolutionRole::kStPath: return "st-path";
    case SolutionRole::kMatching: return "matching";
    case SolutionRole::kMatroidBasis: return "matroid-basis";
    case SolutionRole::kGeneric: break;
  }
  return "generic";
}

EdgeSubset::EdgeSubset(int universe_size, std::vector<EdgeId> ids, SolutionRole role)
    : universe_size_(universe_size), ids_(std::move(ids)), role_(role) {
  if (universe_size_ < 0) throw InvalidArgument("negative universe size");
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
    throw InvalidArgument("duplicate edge id in solution");
  }
  if (!ids_.empty() && (ids_.front() < 0 || ids_.back() >= universe_size_)) {
    throw InvalidArgument("edge id outside the ground set");
  }
}

bool EdgeSubset::contains(EdgeId e) const {
  return std::binary_search(ids_.begin(), ids_.end(), e);
}

}  // namespace divopt
