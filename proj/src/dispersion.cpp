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

#include "divopt/dispersion.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <ostream>
#include <sstream>
#include <string>

#include "divopt/errors.hpp"

namespace divopt {
namespace {

long long binomial_capped(int n, int k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long double acc = 1;
  long long exact = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > static_cast<long double>(cap)) return cap + 1;
    exact = exact * (n - k + i) / i;
  }
  return exact;
}

// Depth-first enumeration of k-subsets in lexicographic order with
// incremental subset weights. Keeps the first strict maximum.
template <typename Value>
struct SubsetSearch {
  const std::vector<std::vector<Value>>& d;
  int n;
  int k;
  std::vector<int> current;
  std::vector<int> best;
  std::optional<Value> best_value;

  void run(int next, const Value& value) {
    if (static_cast<int>(current.size()) == k) {
      if (!best_value || value > *best_value) {
        best_value = value;
        best = current;
      }
      return;
    }
    const int remaining = k - static_cast<int>(current.size());
    for (int x = next; x <= n - remaining; ++x) {
      Value add = Value(0);
      for (int s : current) add += d[s][x];
      current.push_back(x);
      run(x + 1, value + add);
      current.pop_back();
    }
  }
};

}  // namespace

FiniteMetric::FiniteMetric(std::vector<std::vector<Rational>> dist,
                           bool validate_triangle)
    : dist_(std::move(dist)) {
  const int n = size();
  if (n <= 0) throw InputError("metric must have at least one point");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(dist_[i].size()) != n) throw InputError("metric matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    if (dist_[i][i] != 0) throw InputError("metric diagonal must be zero");
    for (int j = 0; j < n; ++j) {
      if (dist_[i][j] < 0) throw InputError("metric distances must be non-negative");
      if (dist_[i][j] != dist_[j][i]) throw InputError("metric must be symmetric");
    }
  }
  if (!validate_triangle) return;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int m = 0; m < n; ++m) {
        if (dist_[i][m] > dist_[i][j] + dist_[j][m]) {
          throw InputError("triangle inequality violated at (" + std::to_string(i) +
                           "," + std::to_string(j) + "," + std::to_string(m) + ")");
        }
      }
    }
  }
}

Rational dispersion_value(const FiniteMetric& metric, std::span<const int> points) {
  Rational total = 0;
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      total += metric(points[a], points[b]);
    }
  }
  return total;
}

std::vector<int> furthest_insertion(const FiniteMetric& metric, int k, int start) {
  const int n = metric.size();
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (k > n) throw InvalidArgument("insufficient points");
  if (start < 0 || start >= n) throw InvalidArgument("start point out of range");

  std::vector<int> selected{start};
  std::vector<bool> taken(n, false);
  taken[start] = true;
  std::vector<Rational> to_selection(n);
  for (int x = 0; x < n; ++x) to_selection[x] = metric(start, x);

  while (static_cast<int>(selected.size()) < k) {
    int best = -1;
    for (int x = 0; x < n; ++x) {
      if (taken[x]) continue;
      if (best < 0 || to_selection[x] > to_selection[best]) best = x;
    }
    selected.push_back(best);
    taken[best] = true;
    for (int x = 0; x < n; ++x) to_selection[x] += metric(best, x);
  }
  return selected;
}

DispersionOptimum exact_dispersion(const FiniteMetric& metric, int k) {
  const int n = metric.size();
  if (k < 1 || k > n) throw InvalidArgument("insufficient points");
  if (binomial_capped(n, k, kExactDispersionGuard) > kExactDispersionGuard) {
    throw OracleGuardError("C(" + std::to_string(n) + "," + std::to_string(k) +
                           ") subsets exceed the limit");
  }

  // Scale to a common denominator; use machine integers when the largest
  // possible subset weight fits comfortably.
  BigInt lcm = 1;
  BigInt max_num = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(metric(i, j)));
    }
  }
  std::vector<std::vector<BigInt>> scaled(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      scaled[i][j] = boost::multiprecision::numerator(metric(i, j)) *
                     (lcm / boost::multiprecision::denominator(metric(i, j)));
      max_num = std::max(max_num, scaled[i][j]);
    }
  }
  const BigInt pairs = BigInt(k) * (k - 1) / 2;
  DispersionOptimum result;
  if (max_num * (pairs + 1) < BigInt(std::numeric_limits<long long>::max() / 4)) {
    std::vector<std::vector<long long>> d(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = scaled[i][j].convert_to<long long>();
    }
    SubsetSearch<long long> search{d, n, k, {}, {}, std::nullopt};
    search.run(0, 0);
    result.indices = search.best;
  } else {
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = metric(i, j);
    }
    SubsetSearch<Rational> search{d, n, k, {}, {}, std::nullopt};
    search.run(0, Rational(0));
    result.indices = search.best;
  }
  result.value = dispersion_value(metric, result.indices);
  return result;
}

FiniteMetric gadget_from_graph(const Graph& graph, const Rational& edge_distance,
                               const Rational& nonedge_distance) {
  if (graph.directed()) throw InvalidArgument("gadget requires an undirected graph");
  const int n = graph.vertex_count();
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, nonedge_distance));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : graph.edges()) {
    d[e.u][e.v] = edge_distance;
    d[e.v][e.u] = edge_distance;
  }
  return FiniteMetric(std::move(d), true);
}

FiniteMetric parse_metric(std::istream& in, bool validate_triangle) {
  std::string line;
  int n = -1;
  int line_no = 0;
  std::vector<std::vector<Rational>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c") continue;
    if (first == "p") {
      std::string kind;
      if (n >= 0 || !(ls >> kind >> n) || kind != "metric" || n <= 0) {
        throw InputError("line " + std::to_string(line_no) + ": malformed metric header");
      }
      continue;
    }
    if (n < 0) throw InputError("line " + std::to_string(line_no) + ": row before header");
    std::vector<Rational> row;
    row.push_back(parse_rational(first));
    std::string tok;
    while (ls >> tok) row.push_back(parse_rational(tok));
    if (static_cast<int>(row.size()) != n) {
      throw InputError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(n) + " entries");
    }
    rows.push_back(std::move(row));
  }
  if (n < 0) throw InputError("missing 'p metric' header");
  if (static_cast<int>(rows.size()) != n) {
    throw InputError("expected " + std::to_string(n) + " metric rows, found " +
                     std::to_string(rows.size()));
  }
  return FiniteMetric(std::move(rows), validate_triangle);
}

FiniteMetric read_metric_file(const std::filesystem::path& path, bool validate_triangle) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_metric(in, validate_triangle);
}

void write_metric(std::ostream& out, const FiniteMetric& metric) {
  out << "p metric " << metric.size() << '\n';
  for (int i = 0; i < metric.size(); ++i) {
    for (int j = 0; j < metric.size(); ++j) {
      out << (j ? " " : "") << to_string(metric(i, j));
    }
    out << '\n';
  }
}

PlantedClique planted_clique_graph(int vertex_count, double edge_probability,
                                   int clique_size, std::uint64_t seed) {
  if (vertex_count < 1) throw InvalidArgument("vertex count must be positive");
  if (clique_size < 0 || clique_size > vertex_count) {
    throw InvalidArgument("clique size must lie in [0, n]");
  }
  if (edge_probability < 0 || edge_probability > 1) {
    throw InvalidArgument("edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> order(vertex_count);
  std::iota(order.begin(), order.end(), 0);
  // Fisher-Yates with raw draws keeps the output identical across libraries.
  for (int i = vertex_count - 1; i > 0; --i) {
    std::swap(order[i], order[rng() % static_cast<std::uint64_t>(i + 1)]);
  }
  std::vector<int> clique(order.begin(), order.begin() + clique_size);
  std::sort(clique.begin(), clique.end());
  std::vector<char> in_clique(vertex_count, 0);
  for (int v : clique) in_clique[v] = 1;

  const long double threshold =
      static_cast<long double>(edge_probability) * 18446744073709551616.0L;
  std::vector<Edge> edges;
  for (int u = 0; u < vertex_count; ++u) {
    for (int v = u + 1; v < vertex_count; ++v) {
      const bool coin = static_cast<long double>(rng()) < threshold;
      if (coin || (in_clique[u] && in_clique[v])) edges.push_back({u, v});
    }
  }
  return {Graph::unit_weight(vertex_count, false, std::move(edges)), std::move(clique)};
}

}  // namespace divopt
