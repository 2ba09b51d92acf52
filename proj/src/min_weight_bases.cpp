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

#include "divopt/min_weight_bases.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <string>

#include "divopt/errors.hpp"
#include "divopt/prime_field.hpp"
#include "divopt/union_find.hpp"

namespace divopt {
namespace {

constexpr std::uint64_t kSecondPrime = (std::uint64_t{1} << 62) - 57;

struct Problem {
  const MatroidOracle& matroid;
  std::span<const Rational> weight;
  std::span<const int> ell;
  Rational budget;
  std::vector<int> include;
  std::vector<char> excluded;
  Rational include_weight;
};

std::int64_t ell_of(std::span<const int> ell, std::span<const int> elements) {
  std::int64_t total = 0;
  for (int e : elements) total += ell[e];
  return total;
}

std::vector<int> free_elements(const Problem& p) {
  std::vector<char> taken(p.matroid.ground_size(), 0);
  for (int e : p.include) taken[e] = 1;
  std::vector<int> result;
  for (int e = 0; e < p.matroid.ground_size(); ++e) {
    if (!taken[e] && !p.excluded[e]) result.push_back(e);
  }
  return result;
}

// Lexicographic comparison of candidate bases by (ℓ, w, ids).
bool better_basis(const Problem& p, const std::vector<int>& a, const std::vector<int>& b) {
  const std::int64_t la = ell_of(p.ell, a), lb = ell_of(p.ell, b);
  if (la != lb) return la < lb;
  const Rational wa = subset_weight(p.weight, a), wb = subset_weight(p.weight, b);
  if (wa != wb) return wa < wb;
  return a < b;
}

std::vector<int> sorted_by(std::vector<int> elements,
                           const std::function<bool(int, int)>& less) {
  std::sort(elements.begin(), elements.end(), less);
  return elements;
}

std::optional<std::vector<int>> greedy_at(const Problem& p, const std::vector<int>& free,
                                          const Rational& lambda, bool heavy_first) {
  auto order = sorted_by(free, [&](int a, int b) {
    const Rational ka = p.ell[a] + lambda * p.weight[a];
    const Rational kb = p.ell[b] + lambda * p.weight[b];
    if (ka != kb) return ka < kb;
    if (p.weight[a] != p.weight[b]) {
      return heavy_first ? p.weight[a] > p.weight[b] : p.weight[a] < p.weight[b];
    }
    return a < b;
  });
  return restricted_greedy(p.matroid, order, p.include, p.excluded);
}

bool is_basis_after_swap(const MatroidOracle& matroid, const std::vector<int>& basis,
                         int out, int in) {
  std::vector<int> swapped;
  for (int e : basis) {
    if (e != out) swapped.push_back(e);
  }
  swapped.push_back(in);
  return matroid.is_basis(swapped);
}

// Exact-ℓ search with weight at most budget + the heaviest usable element.
std::optional<std::vector<int>> lagrangian(Problem p) {
  for (int e = 0; e < p.matroid.ground_size(); ++e) {
    if (p.weight[e] > p.budget - p.include_weight) p.excluded[e] = 1;
  }
  for (int e : p.include) p.excluded[e] = 0;
  const std::vector<int> free = free_elements(p);

  const auto lightest = restricted_greedy(
      p.matroid,
      sorted_by(free,
                [&](int a, int b) {
                  return p.weight[a] != p.weight[b] ? p.weight[a] < p.weight[b] : a < b;
                }),
      p.include, p.excluded);
  if (!lightest || subset_weight(p.weight, *lightest) > p.budget) return std::nullopt;

  const auto unconstrained = greedy_at(p, free, Rational(0), false);
  if (subset_weight(p.weight, *unconstrained) <= p.budget) return unconstrained;

  std::set<Rational> breakpoints;
  for (std::size_t i = 0; i < free.size(); ++i) {
    for (std::size_t j = i + 1; j < free.size(); ++j) {
      const int a = free[i], b = free[j];
      const Rational dl = p.ell[a] - p.ell[b];
      const Rational dw = p.weight[b] - p.weight[a];
      if (dw != 0 && dl / dw > 0) breakpoints.insert(dl / dw);
    }
  }
  const std::vector<Rational> lambdas(breakpoints.begin(), breakpoints.end());
  if (lambdas.empty()) throw InvalidArgument("no breakpoint separates the budget");
  std::size_t lo = 0, hi = lambdas.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (subset_weight(p.weight, *greedy_at(p, free, lambdas[mid], false)) <= p.budget) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  std::vector<int> current = *greedy_at(p, free, lambdas[lo], false);
  const std::vector<int> heavy = *greedy_at(p, free, lambdas[lo], true);

  // Exchange walk between two optimal bases of the combined weight.
  while (subset_weight(p.weight, current) < p.budget && current != heavy) {
    int in = -1, out = -1;
    for (int e : heavy) {
      if (std::binary_search(current.begin(), current.end(), e)) continue;
      for (int f : current) {
        if (std::binary_search(heavy.begin(), heavy.end(), f)) continue;
        if (is_basis_after_swap(p.matroid, current, f, e) &&
            is_basis_after_swap(p.matroid, heavy, e, f)) {
          in = e;
          out = f;
          break;
        }
      }
      if (in >= 0) break;
    }
    if (in < 0) throw InvalidArgument("basis exchange failed; matroid oracle inconsistent");
    current.erase(std::find(current.begin(), current.end(), out));
    current.insert(std::upper_bound(current.begin(), current.end(), in), in);
  }
  return current;
}

double log2_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) /
         std::log(2.0);
}

// Calls visit on every k-subset of `items` (lexicographic by position).
void for_each_combination(const std::vector<int>& items, int k,
                          const std::function<void(const std::vector<int>&)>& visit) {
  const int n = static_cast<int>(items.size());
  if (k > n) return;
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[i] = i;
  std::vector<int> chosen(k);
  while (true) {
    for (int i = 0; i < k; ++i) chosen[i] = items[pos[i]];
    visit(chosen);
    int i = k - 1;
    while (i >= 0 && pos[i] == n - k + i) --i;
    if (i < 0) return;
    ++pos[i];
    for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

std::optional<std::vector<int>> exhaustive_best(const Problem& p, long long work_cap) {
  const std::vector<int> free = free_elements(p);
  const int need = p.matroid.rank() - static_cast<int>(p.include.size());
  if (log2_binomial(static_cast<int>(free.size()), need) > std::log2(double(work_cap))) {
    throw InvalidArgument("ptas-eps work cap exceeded; increase eps");
  }
  std::optional<std::vector<int>> best;
  for_each_combination(free, need, [&](const std::vector<int>& extra) {
    std::vector<int> basis = p.include;
    basis.insert(basis.end(), extra.begin(), extra.end());
    std::sort(basis.begin(), basis.end());
    if (subset_weight(p.weight, basis) > p.budget || !p.matroid.is_basis(basis)) return;
    if (!best || better_basis(p, basis, *best)) best = std::move(basis);
  });
  return best;
}

// The (ℓ, w, id) greedy basis when it already fits the budget.
std::optional<std::vector<int>> fitting_greedy(const Problem& p) {
  auto basis = greedy_at(p, free_elements(p), Rational(0), false);
  if (basis && subset_weight(p.weight, *basis) <= p.budget) return basis;
  return std::nullopt;
}

std::optional<std::vector<int>> guessing_ptas(const Problem& p, const Rational& epsilon,
                                              long long work_cap) {
  if (auto basis = fitting_greedy(p)) return basis;
  const int guess = static_cast<int>(to_int64(ceil_of(1 / epsilon)));
  const int need = p.matroid.rank() - static_cast<int>(p.include.size());
  if (need <= guess) return exhaustive_best(p, work_cap);

  std::vector<int> free = free_elements(p);
  std::sort(free.begin(), free.end(), [&](int a, int b) {
    return p.weight[a] != p.weight[b] ? p.weight[a] < p.weight[b] : a < b;
  });
  std::vector<int> rank_of(p.matroid.ground_size(), -1);
  for (std::size_t i = 0; i < free.size(); ++i) rank_of[free[i]] = static_cast<int>(i);
  if (log2_binomial(static_cast<int>(free.size()), guess) > std::log2(double(work_cap))) {
    throw InvalidArgument("ptas-eps work cap exceeded; increase eps");
  }

  std::optional<std::vector<int>> best;
  for_each_combination(free, guess, [&](const std::vector<int>& heaviest) {
    if (p.include_weight + subset_weight(p.weight, heaviest) > p.budget) return;
    Problem sub = p;
    sub.include.insert(sub.include.end(), heaviest.begin(), heaviest.end());
    if (!p.matroid.is_independent(sub.include)) return;
    sub.include_weight += subset_weight(p.weight, heaviest);
    const int lightest_guess = rank_of[heaviest.front()];
    for (std::size_t i = lightest_guess + 1; i < free.size(); ++i) {
      if (!std::binary_search(heaviest.begin(), heaviest.end(), free[i],
                              [&](int a, int b) { return rank_of[a] < rank_of[b]; })) {
        sub.excluded[free[i]] = 1;
      }
    }
    auto candidate = lagrangian(std::move(sub));
    if (candidate && (!best || better_basis(p, *candidate, *best))) best = std::move(candidate);
  });
  return best;
}

// Bivariate spanning-tree generating polynomial, coefficient [w][ℓ] nonzero
// iff a tree of that weight and cost exists.
class TreePolynomial {
 public:
  TreePolynomial(int vertex_count, std::vector<Edge> edges, std::vector<int> w,
                 std::vector<int> ell, long long work_cap)
      : n_(vertex_count), edges_(std::move(edges)), w_(std::move(w)), ell_(std::move(ell)) {
    auto top_sum = [&](std::vector<int> values) {
      std::sort(values.rbegin(), values.rend());
      std::int64_t total = 0;
      for (int i = 0; i < n_ - 1 && i < static_cast<int>(values.size()); ++i) total += values[i];
      return total;
    };
    w_degree_ = top_sum(w_);
    ell_degree_ = top_sum(ell_);
    if ((w_degree_ + 1) * (ell_degree_ + 1) > work_cap) {
      throw InvalidArgument("pseudo-exact table too large for the work cap");
    }
    const double bits = log2_binomial(static_cast<int>(edges_.size()), n_ - 1);
    if (bits >= 120) throw InvalidArgument("pseudo-exact instance too large");
    primes_.push_back(kMersenne61);
    if (bits >= 60) primes_.push_back(kSecondPrime);
  }

  std::int64_t w_degree() const { return w_degree_; }
  std::int64_t ell_degree() const { return ell_degree_; }

  // nonzero[a][b] for the subgraph of edges with keep[e] set.
  std::vector<std::vector<char>> support(const std::vector<char>& keep) const {
    std::vector<std::vector<char>> result(w_degree_ + 1,
                                          std::vector<char>(ell_degree_ + 1, 0));
    for (std::uint64_t prime : primes_) {
      const PrimeField field(prime);
      const auto coeffs = coefficients(field, keep);
      for (std::size_t a = 0; a < coeffs.size(); ++a) {
        for (std::size_t b = 0; b < coeffs[a].size(); ++b) {
          if (coeffs[a][b] != 0) result[a][b] = 1;
        }
      }
    }
    return result;
  }

 private:
  std::vector<std::vector<std::uint64_t>> coefficients(const PrimeField& field,
                                                       const std::vector<char>& keep) const {
    const std::int64_t dw = w_degree_, dl = ell_degree_;
    // values[a][b] = det of the reduced Laplacian at y = a, z = b
    std::vector<std::vector<std::uint64_t>> by_z(dw + 1);
    for (std::int64_t a = 0; a <= dw; ++a) {
      std::vector<std::uint64_t> values(dl + 1);
      for (std::int64_t b = 0; b <= dl; ++b) {
        FieldMatrix lap(n_ - 1, std::vector<std::uint64_t>(n_ - 1, 0));
        for (std::size_t e = 0; e < edges_.size(); ++e) {
          if (!keep[e]) continue;
          const std::uint64_t x = field.mul(field.pow(a, w_[e]), field.pow(b, ell_[e]));
          const int u = edges_[e].u, v = edges_[e].v;
          if (u < n_ - 1) lap[u][u] = field.add(lap[u][u], x);
          if (v < n_ - 1) lap[v][v] = field.add(lap[v][v], x);
          if (u < n_ - 1 && v < n_ - 1) {
            lap[u][v] = field.sub(lap[u][v], x);
            lap[v][u] = field.sub(lap[v][u], x);
          }
        }
        values[b] = determinant(field, std::move(lap));
      }
      by_z[a] = interpolate(field, values);
    }
    std::vector<std::vector<std::uint64_t>> result(dw + 1, std::vector<std::uint64_t>(dl + 1));
    std::vector<std::uint64_t> column(dw + 1);
    for (std::int64_t b = 0; b <= dl; ++b) {
      for (std::int64_t a = 0; a <= dw; ++a) column[a] = by_z[a][b];
      const auto coeffs = interpolate(field, column);
      for (std::int64_t a = 0; a <= dw; ++a) result[a][b] = coeffs[a];
    }
    return result;
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<int> w_;
  std::vector<int> ell_;
  std::int64_t w_degree_ = 0;
  std::int64_t ell_degree_ = 0;
  std::vector<std::uint64_t> primes_;
};

std::optional<std::vector<int>> pseudo_exact(const Problem& p, long long work_cap) {
  const auto* graphic = dynamic_cast<const GraphicMatroid*>(&p.matroid);
  if (!graphic) throw InvalidArgument("pseudo-exact mode needs a graphic matroid");
  const Graph& graph = graphic->graph();
  if (graph.vertex_count() - p.matroid.rank() != 1) {
    throw InvalidArgument("pseudo-exact mode needs a connected graph");
  }
  for (const Rational& w : p.weight) {
    if (!is_integer(w) || w < 0) throw InvalidArgument("pseudo-exact mode needs integer weights");
  }
  const BigInt floor_budget = floor_of(p.budget - p.include_weight);
  if (floor_budget < 0) return std::nullopt;
  if (auto basis = fitting_greedy(p)) return basis;

  UnionFind uf(graph.vertex_count());
  for (int e : p.include) uf.unite(graph.edge(e).u, graph.edge(e).v);
  std::vector<int> component(graph.vertex_count(), -1);
  int count = 0;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    const int root = uf.find(v);
    if (component[root] < 0) component[root] = count++;
    component[v] = component[root];
  }
  std::vector<int> original;
  std::vector<Edge> contracted;
  std::vector<int> w, ell;
  for (int e : free_elements(p)) {
    const int cu = component[graph.edge(e).u], cv = component[graph.edge(e).v];
    if (cu == cv) continue;
    original.push_back(e);
    contracted.push_back({cu, cv});
    w.push_back(static_cast<int>(to_int64(p.weight[e])));
    ell.push_back(p.ell[e]);
  }
  if (count == 1) return p.include;

  const TreePolynomial poly(count, contracted, w, ell, work_cap);
  std::vector<char> keep(original.size(), 1);
  const auto support = poly.support(keep);
  const std::int64_t max_w =
      std::min<std::int64_t>(poly.w_degree(), static_cast<std::int64_t>(floor_budget));
  std::optional<std::pair<std::int64_t, std::int64_t>> target;  // (ℓ, w)
  for (std::int64_t b = 0; b <= poly.ell_degree() && !target; ++b) {
    for (std::int64_t a = 0; a <= max_w; ++a) {
      if (support[a][b]) {
        target = {b, a};
        break;
      }
    }
  }
  if (!target) return std::nullopt;

  for (std::size_t e = 0; e < original.size(); ++e) {
    keep[e] = 0;
    if (!poly.support(keep)[target->second][target->first]) keep[e] = 1;
  }
  std::vector<int> basis = p.include;
  for (std::size_t e = 0; e < original.size(); ++e) {
    if (keep[e]) basis.push_back(original[e]);
  }
  std::sort(basis.begin(), basis.end());
  if (!p.matroid.is_basis(basis)) throw FieldError("tree reconstruction failed");
  return basis;
}

}  // namespace

BasisMode parse_basis_mode(std::string_view text) {
  if (text == "lagrangian-2") return BasisMode::kLagrangian2;
  if (text == "ptas-eps") return BasisMode::kPtasEps;
  if (text == "pseudo-exact") return BasisMode::kPseudoExact;
  throw InvalidArgument("unknown mode '" + std::string(text) + "'");
}

std::string_view basis_mode_name(BasisMode mode) {
  switch (mode) {
    case BasisMode::kLagrangian2: return "lagrangian-2";
    case BasisMode::kPtasEps: return "ptas-eps";
    case BasisMode::kPseudoExact: return "pseudo-exact";
  }
  return "unknown";
}

Rational subset_weight(std::span<const Rational> weight, std::span<const int> elements) {
  Rational total = 0;
  for (int e : elements) total += weight[e];
  return total;
}

EdgeSubset min_weight_basis(const MatroidOracle& matroid, std::span<const Rational> weight) {
  if (static_cast<int>(weight.size()) != matroid.ground_size()) {
    throw InvalidArgument("weights must cover the ground set");
  }
  std::vector<int> order(matroid.ground_size());
  for (int e = 0; e < matroid.ground_size(); ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weight[a] < weight[b]; });
  auto basis = restricted_greedy(matroid, order, {}, {});
  if (!basis) throw InvalidArgument("matroid oracle reports no basis");
  return EdgeSubset(matroid.ground_size(), std::move(*basis), SolutionRole::kMatroidBasis);
}

std::optional<EdgeSubset> constrained_basis(const MatroidOracle& matroid,
                                            std::span<const Rational> weight,
                                            const OccurrenceWeights& occurrence,
                                            const Rational& budget,
                                            const ConstrainedBasisOptions& options,
                                            std::span<const int> include,
                                            std::span<const int> exclude) {
  const int m = matroid.ground_size();
  if (static_cast<int>(weight.size()) != m) {
    throw InvalidArgument("weights must cover the ground set");
  }
  if (occurrence.edge_count() != m) throw IncomparableSolutions();
  if (options.epsilon <= 0) throw InvalidArgument("epsilon must be positive");
  for (const Rational& w : weight) {
    if (w < 0) throw InvalidArgument("weights must be non-negative");
  }
  if (!matroid.is_independent(include)) throw InvalidArgument("dependent include set");

  Problem p{matroid, weight, occurrence.counts(), budget,
            {include.begin(), include.end()}, std::vector<char>(m, 0),
            subset_weight(weight, include)};
  for (int e : exclude) {
    if (e < 0 || e >= m) throw InvalidArgument("excluded element out of range");
    if (std::find(include.begin(), include.end(), e) != include.end()) return std::nullopt;
    p.excluded[e] = 1;
  }
  if (p.include_weight > budget) return std::nullopt;

  std::optional<std::vector<int>> basis;
  switch (options.mode) {
    case BasisMode::kLagrangian2: basis = lagrangian(p); break;
    case BasisMode::kPtasEps: basis = guessing_ptas(p, options.epsilon, options.work_cap); break;
    case BasisMode::kPseudoExact: basis = pseudo_exact(p, options.work_cap); break;
  }
  if (!basis) return std::nullopt;
  return EdgeSubset(m, std::move(*basis), SolutionRole::kMatroidBasis);
}

BasisBcoSolver::BasisBcoSolver(const MatroidOracle& matroid, std::span<const Rational> weight,
                               const Rational& budget, const ConstrainedBasisOptions& options)
    : matroid_(matroid), weight_(weight.begin(), weight.end()), budget_(budget),
      options_(options) {}

std::optional<EdgeSubset> BasisBcoSolver::solve(const OccurrenceWeights& occurrence,
                                                const Rational& /*budget_factor*/,
                                                const Restriction& restriction) {
  ++calls_;
  if (!matroid_.is_independent(restriction.include)) return std::nullopt;
  return constrained_basis(matroid_, weight_, occurrence, budget_, options_,
                           restriction.include, restriction.exclude);
}

BcoFactors BasisBcoSolver::factors() const {
  switch (options_.mode) {
    case BasisMode::kLagrangian2: return {Rational(1), Rational(2)};
    case BasisMode::kPtasEps: return {Rational(1), 1 + options_.epsilon};
    case BasisMode::kPseudoExact: return {1 + options_.epsilon, Rational(1)};
  }
  return {};
}

DiverseRunReport diverse_min_weight_bases(const MatroidOracle& matroid,
                                          std::span<const Rational> weight, int k,
                                          const Rational& c,
                                          const ConstrainedBasisOptions& options) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (c < 1) throw InvalidArgument("approximation factor c must be at least 1");
  const EdgeSubset first = min_weight_basis(matroid, weight);
  const Rational budget = c * subset_weight(weight, first.ids());
  BasisBcoSolver solver(matroid, weight, budget, options);
  DiverseSolveOptions run;
  if (options.mode == BasisMode::kPseudoExact) {
    run.type = ReductionType::kType5;
    run.epsilon = options.epsilon;
    run.diameter = 2 * static_cast<std::int64_t>(matroid.rank());
  } else {
    run.type = ReductionType::kType4;
  }
  return diverse_solve(solver, first, k, c, run);
}

}  // namespace divopt
