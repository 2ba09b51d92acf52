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
#include <string>
#include <vector>

#include "divopt/graph.hpp"
#include "divopt/rational.hpp"
#include "divopt/solution.hpp"

namespace divopt {

// How the partition enumeration splits a candidate's subspace.
enum class BranchingKind {
  // Include/exclude on set membership (trees, matchings, bases).
  kMembership,
  // Include sets are prefixes of the candidate's element order (st-paths).
  kPrefix,
};

// Which objective the solver optimizes. Similarity solvers minimize
// Σ_{e∈y} count(e); metric solvers maximize Σ_j d(y, y_j).
enum class ObjectiveForm { kSimilarity, kMetric };

// Restriction of the solution space used by the partition enumeration. For
// prefix branching `include` is ordered and must form a prefix.
struct Restriction {
  std::vector<EdgeId> include;
  std::vector<EdgeId> exclude;
};

// (a, b) advertised by a budget-constrained solver: objective within factor
// a, budget relaxed by factor b.
struct BcoFactors {
  Rational a{1};
  Rational b{1};
};

// A restricted budget-constrained optimizer for one problem instance.
//
// solve() returns a feasible solution containing every `include` element and
// no `exclude` element, within the budget b·c of the owning problem, whose
// objective is within factor a of the best such solution in the c-budgeted
// space. It returns nullopt when the restricted space is empty. Solvers are
// reused across sequential calls.
class RestrictedBcoSolver {
 public:
  virtual ~RestrictedBcoSolver() = default;

  virtual std::optional<EdgeSubset> solve(const OccurrenceWeights& occurrence,
                                          const Rational& budget_factor,
                                          const Restriction& restriction) = 0;

  virtual int element_count() const = 0;
  virtual BranchingKind branching() const = 0;
  virtual ObjectiveForm objective_form() const { return ObjectiveForm::kSimilarity; }
  // True when every feasible solution has the same number of elements.
  virtual bool fixed_cardinality() const = 0;
  virtual BcoFactors factors() const { return {}; }
  // Element order used for branching. Prefix solvers must return the
  // solution's traversal order.
  virtual std::vector<EdgeId> branch_order(const EdgeSubset& y) const {
    return {y.ids().begin(), y.ids().end()};
  }
};

// The five solver classes of the reduction. Types 1-2 use metric solvers,
// types 3-5 similarity solvers.
enum class ReductionType {
  kType1 = 1,  // (a,1) metric        -> (2a, c)
  kType2 = 2,  // (a,b) metric        -> (4a, bc)
  kType3 = 3,  // (1,1) similarity    -> (2, c)
  kType4 = 4,  // (1,b) similarity    -> (4, bc)
  kType5 = 5,  // (1+eps,1) similarity -> (4, c), conditional
};

// Declared (alpha, beta) of a run: the diversity is within factor alpha of
// the optimum over c-approximate solutions and every output is
// beta-approximate (beta already includes c).
struct Guarantee {
  Rational alpha;
  Rational beta;
  int type = 0;
};

Guarantee guarantee_for(ReductionType type, const BcoFactors& factors, const Rational& c);

// Side condition of type-5 runs: the optimal average pairwise distance must
// be at least diameter·4ε/(1+2ε). Recorded, not verified.
struct Type5Condition {
  Rational epsilon;
  std::int64_t diameter = 0;
  Rational threshold;
};

Type5Condition type5_condition(const Rational& epsilon, std::int64_t diameter);

struct IterationTrace {
  EdgeSubset chosen;
  std::int64_t occurrence_cost = 0;  // Σ_{e∈y} count(e) w.r.t. earlier picks
  std::int64_t farness = 0;          // Σ_j d(y, y_j) w.r.t. earlier picks
  int candidates_popped = 0;
  int solver_calls = 0;
};

struct DiverseRunReport {
  std::vector<EdgeSubset> solutions;
  std::int64_t diversity = 0;
  std::vector<std::vector<std::int64_t>> pairwise;
  Guarantee guarantee;
  std::vector<IterationTrace> trace;
  std::uint64_t seed = 0;
  std::optional<Type5Condition> type5;
  std::vector<std::string> warnings;
};

struct LawlerResult {
  std::optional<EdgeSubset> solution;
  int candidates_popped = 0;
  int solver_calls = 0;
};

// Best solution outside `forbidden` by best-first include/exclude partition
// enumeration. Candidates are ranked by the solver's objective, then by
// lexicographic id list. At most |forbidden|+1 candidates are popped.
LawlerResult lawler_enumerate(RestrictedBcoSolver& solver,
                              const OccurrenceWeights& occurrence, const Rational& c,
                              std::span<const EdgeSubset> forbidden);

struct DiverseSolveOptions {
  ReductionType type = ReductionType::kType3;
  std::uint64_t seed = 0;
  // Required for type-5 runs.
  std::optional<Rational> epsilon;
  std::int64_t diameter = 0;
};

// Farthest insertion over the solver's implicit solution space, starting
// from `initial`. Throws NonExistentError if fewer than k distinct
// solutions are reachable.
DiverseRunReport diverse_solve(RestrictedBcoSolver& solver, const EdgeSubset& initial,
                               int k, const Rational& c,
                               const DiverseSolveOptions& options = {});

}  // namespace divopt
