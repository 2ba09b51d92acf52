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

#include "divopt/bco_engine.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "divopt/errors.hpp"

namespace divopt {
namespace {

struct Candidate {
  std::int64_t key = 0;
  EdgeSubset solution;
  Restriction restriction;
  std::uint64_t sequence = 0;
};

struct WorseCandidate {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.key != b.key) return a.key > b.key;
    if (a.solution != b.solution) return a.solution > b.solution;
    return a.sequence > b.sequence;
  }
};

// Smaller is better for both objective forms.
std::int64_t ranking_key(const RestrictedBcoSolver& solver, const EdgeSubset& y,
                         const OccurrenceWeights& occurrence) {
  const std::int64_t cost = occurrence_cost(y, occurrence);
  if (solver.objective_form() == ObjectiveForm::kSimilarity) return cost;
  // Σ_j d(y,y_j) = const + i·|y| − 2·cost
  return 2 * cost - static_cast<std::int64_t>(occurrence.num_solutions()) * y.size();
}

std::vector<Restriction> partition_children(const RestrictedBcoSolver& solver,
                                            const EdgeSubset& y,
                                            const Restriction& parent) {
  std::vector<Restriction> children;
  const std::vector<EdgeId> order = solver.branch_order(y);
  if (solver.branching() == BranchingKind::kPrefix) {
    const std::size_t q = parent.include.size();
    if (q > order.size() || !std::equal(parent.include.begin(), parent.include.end(),
                                        order.begin())) {
      throw InvalidArgument("candidate does not extend its branch prefix");
    }
    for (std::size_t j = q; j < order.size(); ++j) {
      Restriction child;
      child.include.assign(order.begin(), order.begin() + static_cast<long>(j));
      child.exclude = parent.exclude;
      child.exclude.push_back(order[j]);
      children.push_back(std::move(child));
    }
    return children;
  }

  std::set<EdgeId> included(parent.include.begin(), parent.include.end());
  std::vector<EdgeId> members;
  for (EdgeId e : order) {
    if (!included.count(e)) members.push_back(e);
  }
  for (std::size_t j = 0; j < members.size(); ++j) {
    Restriction child;
    child.include = parent.include;
    child.include.insert(child.include.end(), members.begin(),
                         members.begin() + static_cast<long>(j));
    child.exclude = parent.exclude;
    child.exclude.push_back(members[j]);
    children.push_back(std::move(child));
  }
  if (solver.fixed_cardinality()) return children;

  // Variable-size families also need the supersets of y.
  std::set<EdgeId> excluded(parent.exclude.begin(), parent.exclude.end());
  std::vector<EdgeId> others;
  for (EdgeId e = 0; e < solver.element_count(); ++e) {
    if (!y.contains(e) && !excluded.count(e)) others.push_back(e);
  }
  for (std::size_t t = 0; t < others.size(); ++t) {
    Restriction child;
    child.include = parent.include;
    child.include.insert(child.include.end(), members.begin(), members.end());
    child.include.push_back(others[t]);
    child.exclude = parent.exclude;
    child.exclude.insert(child.exclude.end(), others.begin(),
                         others.begin() + static_cast<long>(t));
    children.push_back(std::move(child));
  }
  return children;
}

}  // namespace

Guarantee guarantee_for(ReductionType type, const BcoFactors& factors, const Rational& c) {
  switch (type) {
    case ReductionType::kType1: return {2 * factors.a, c, 1};
    case ReductionType::kType2: return {4 * factors.a, factors.b * c, 2};
    case ReductionType::kType3: return {Rational(2), c, 3};
    case ReductionType::kType4: return {Rational(4), factors.b * c, 4};
    case ReductionType::kType5: return {Rational(4), c, 5};
  }
  throw InvalidArgument("unknown reduction type");
}

Type5Condition type5_condition(const Rational& epsilon, std::int64_t diameter) {
  if (epsilon <= 0) throw InvalidArgument("epsilon must be positive");
  return {epsilon, diameter, Rational(diameter) * 4 * epsilon / (1 + 2 * epsilon)};
}

LawlerResult lawler_enumerate(RestrictedBcoSolver& solver,
                              const OccurrenceWeights& occurrence, const Rational& c,
                              std::span<const EdgeSubset> forbidden) {
  LawlerResult result;
  const std::set<EdgeSubset> banned(forbidden.begin(), forbidden.end());
  std::priority_queue<Candidate, std::vector<Candidate>, WorseCandidate> pool;
  std::uint64_t sequence = 0;

  auto try_push = [&](Restriction restriction) {
    ++result.solver_calls;
    std::optional<EdgeSubset> y = solver.solve(occurrence, c, restriction);
    if (!y) return;
    const std::int64_t key = ranking_key(solver, *y, occurrence);
    pool.push(Candidate{key, std::move(*y), std::move(restriction), sequence++});
  };

  try_push(Restriction{});
  while (!pool.empty()) {
    Candidate best = pool.top();
    pool.pop();
    ++result.candidates_popped;
    if (!banned.count(best.solution)) {
      result.solution = std::move(best.solution);
      return result;
    }
    for (Restriction& child : partition_children(solver, best.solution, best.restriction)) {
      try_push(std::move(child));
    }
  }
  return result;
}

DiverseRunReport diverse_solve(RestrictedBcoSolver& solver, const EdgeSubset& initial,
                               int k, const Rational& c,
                               const DiverseSolveOptions& options) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (c < 1) throw InvalidArgument("approximation factor c must be at least 1");
  if (initial.universe_size() != solver.element_count()) throw IncomparableSolutions();

  DiverseRunReport report;
  report.seed = options.seed;
  report.guarantee = guarantee_for(options.type, solver.factors(), c);
  if (options.type == ReductionType::kType5) {
    if (!options.epsilon) throw InvalidArgument("type-5 runs need epsilon");
    report.type5 = type5_condition(*options.epsilon, options.diameter);
    report.warnings.push_back(
        "type-5 guarantee assumes the optimal average pairwise distance is at least " +
        to_string(report.type5->threshold) + " (= D*4eps/(1+2eps) with D=" +
        std::to_string(options.diameter) + ", eps=" + to_string(*options.epsilon) +
        "); not verified");
  }

  report.solutions.push_back(initial);
  report.trace.push_back(IterationTrace{initial, 0, 0, 0, 0});
  while (static_cast<int>(report.solutions.size()) < k) {
    const OccurrenceWeights occurrence =
        occurrence_weights(report.solutions, solver.element_count());
    LawlerResult step = lawler_enumerate(solver, occurrence, c, report.solutions);
    if (!step.solution) throw NonExistentError();
    std::vector<std::int64_t> sizes;
    for (const EdgeSubset& y : report.solutions) sizes.push_back(y.size());
    IterationTrace entry;
    entry.chosen = *step.solution;
    entry.occurrence_cost = occurrence_cost(*step.solution, occurrence);
    entry.farness = farness_objective(*step.solution, occurrence, sizes);
    std::int64_t direct = 0;
    for (const EdgeSubset& y : report.solutions) direct += hamming_distance(*step.solution, y);
    if (direct != entry.farness) throw std::logic_error("occurrence farness identity violated");
    entry.candidates_popped = step.candidates_popped;
    entry.solver_calls = step.solver_calls;
    report.trace.push_back(std::move(entry));
    report.solutions.push_back(std::move(*step.solution));
  }
  report.diversity = diversity_sum(report.solutions);
  report.pairwise = pairwise_distances(report.solutions);
  return report;
}

}  // namespace divopt
