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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "divopt/bco_engine.hpp"
#include "divopt/matroid.hpp"
#include "divopt/rational.hpp"
#include "divopt/solution.hpp"

namespace divopt {

enum class BasisMode {
  kLagrangian2,  // exact ℓ, weight within 2·budget
  kPtasEps,      // exact ℓ, weight within (1+ε)·budget
  kPseudoExact,  // weight within budget; graphic matroids with integer weights
};

BasisMode parse_basis_mode(std::string_view text);
std::string_view basis_mode_name(BasisMode mode);

Rational subset_weight(std::span<const Rational> weight, std::span<const int> elements);

// Greedy basis by (weight, id). Empty when the rank is 0.
EdgeSubset min_weight_basis(const MatroidOracle& matroid, std::span<const Rational> weight);

struct ConstrainedBasisOptions {
  BasisMode mode = BasisMode::kLagrangian2;
  Rational epsilon{1, 10};
  // Upper bound on guessed subsets (ptas-eps) or evaluation points
  // (pseudo-exact) before the call is refused.
  long long work_cap = 2'000'000;
};

// Basis containing `include`, avoiding `exclude`, minimizing Σ ℓ(e) subject
// to the mode's weight bound relative to `budget`. Returns nullopt when no
// basis respecting the restriction fits the budget. Throws InvalidArgument
// on a dependent include set or an unsupported instance for the mode.
std::optional<EdgeSubset> constrained_basis(const MatroidOracle& matroid,
                                            std::span<const Rational> weight,
                                            const OccurrenceWeights& occurrence,
                                            const Rational& budget,
                                            const ConstrainedBasisOptions& options,
                                            std::span<const int> include,
                                            std::span<const int> exclude);

class BasisBcoSolver : public RestrictedBcoSolver {
 public:
  BasisBcoSolver(const MatroidOracle& matroid, std::span<const Rational> weight,
                 const Rational& budget, const ConstrainedBasisOptions& options);

  std::optional<EdgeSubset> solve(const OccurrenceWeights& occurrence,
                                  const Rational& budget_factor,
                                  const Restriction& restriction) override;
  int element_count() const override { return matroid_.ground_size(); }
  BranchingKind branching() const override { return BranchingKind::kMembership; }
  bool fixed_cardinality() const override { return true; }
  BcoFactors factors() const override;

  long long solver_calls() const { return calls_; }

 private:
  const MatroidOracle& matroid_;
  std::vector<Rational> weight_;
  Rational budget_;
  ConstrainedBasisOptions options_;
  long long calls_ = 0;
};

// k distinct bases, each of weight within β·c·w(B_1) where B_1 is a minimum
// weight basis. Lagrangian and ptas-eps runs carry the (4, b·c) guarantee;
// pseudo-exact runs carry the conditional (4, c) guarantee with D = 2·rank.
DiverseRunReport diverse_min_weight_bases(const MatroidOracle& matroid,
                                          std::span<const Rational> weight, int k,
                                          const Rational& c,
                                          const ConstrainedBasisOptions& options);

}  // namespace divopt
