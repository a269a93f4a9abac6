/*
 * Copyright 2026 the cohindex contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef COHINDEX_AXIOMS_HPP
#define COHINDEX_AXIOMS_HPP

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cohindex/coalition.hpp"
#include "cohindex/cohesion.hpp"
#include "cohindex/values.hpp"

namespace cohindex {

/// An abstract value functional F(v, kappa) -> per-player reals, the object
/// the axiom checkers exercise.
struct ValueFunctional {
  std::string name;
  std::function<Eigen::VectorXd(const Game&, const CohesionStructure&)> eval;
};

/// A distribution producer p_i^kappa, for the probability-level checks.
struct DistributionProducer {
  std::string name;
  std::function<CoalitionDistribution(const CohesionStructure&, int, double)> eval;
};

struct AxiomReport {
  std::string axiom;
  std::string functional;
  bool pass = true;
  int trials = 0;
  std::uint64_t seed = 0;
  double max_deviation = 0.0;
  /// Self-contained description of the first violating trial (game table,
  /// cohesion table, auxiliary parameters). Empty on pass.
  std::string witness;
};

std::string to_text(const AxiomReport& report);
std::string to_text(const std::vector<AxiomReport>& reports);

ValueFunctional make_cohesion_functional(Branch branch, double b);
DistributionProducer make_distribution_producer(Branch branch);

// Positive checkers. Each runs `trials` randomized trials; trial t draws its
// randomness from (seed, t), so trials are order-independent.
AxiomReport check_linearity(const ValueFunctional& F, int trials, std::uint64_t seed);
AxiomReport check_dummy(const ValueFunctional& F, int trials, std::uint64_t seed);
AxiomReport check_symmetry(const ValueFunctional& F, int trials, std::uint64_t seed);
AxiomReport check_scale_invariance(const ValueFunctional& F, int trials, std::uint64_t seed);
AxiomReport check_cohesion_monotonicity(const ValueFunctional& F, int trials, std::uint64_t seed);
AxiomReport check_dictatorship_invariance(const ValueFunctional& F, int trials, std::uint64_t seed);

/// Odds ratios p(S)/p(T) = (kappa(S u {i})/kappa(T u {i}))^b plus the support
/// clause kappa(S u {i}) = 0 => p(S) = 0. Holds for the banzhaf producer;
/// for the shapley producer only within a fixed coalition size, which is what
/// `within_size_class` restricts the check to.
AxiomReport check_luce_odds(const DistributionProducer& P, double b, int trials,
                            std::uint64_t seed, bool within_size_class = false);

/// Probabilities factor as alpha_{|S|} * kappa(S u {i})^b up to one
/// normalizing constant per (i, kappa).
AxiomReport check_size_separability(const DistributionProducer& P, double b,
                                    int trials, std::uint64_t seed);

/// Benchmark at kappa = 1: banzhaf branch must be uniform / equal the
/// classical Banzhaf value; shapley branch must equal the permutation oracle.
AxiomReport check_benchmark(const ValueFunctional& F, Branch expected,
                            int trials, std::uint64_t seed);

// Countermodels (guaranteed-failing witnesses for axiom independence).
// Each passes the checkers it is documented to preserve and fails exactly
// its target.

/// Adds c * h(kappa) * v(N) to every player, where h is the normalized
/// sum-of-squares spread of kappa (zero on constant structures). Fails dummy.
ValueFunctional countermodel_dummy_perturbation(Branch branch, double b, double c);

/// Per-player exponents b_i. Fails symmetry.
ValueFunctional countermodel_player_exponents(std::vector<double> exponents);

/// Luce weights f(kappa) with f(x) = x + x^2 instead of a power transform.
/// Fails scale invariance.
ValueFunctional countermodel_nonpower_transform();

/// Size-separable probabilities with constant size weights 2^{-(n-1)}.
/// Equals the Banzhaf value at kappa = 1, so it fails Shapley calibration.
ValueFunctional countermodel_constant_sizeweights(double b);

/// The spread functional h used by the dummy-perturbation countermodel.
double kappa_spread(const CohesionStructure& kappa);

// Seeded random instance generators shared by the checkers and tests.
Eigen::VectorXd random_tu_worth(int n, std::uint64_t seed, std::uint64_t trial);
Eigen::VectorXd random_kappa_table(int n, std::uint64_t seed, std::uint64_t trial,
                                   bool allow_zero_coalitions);
SimpleGame random_weighted_majority(const PlayerSet& players, std::uint64_t seed,
                                    std::uint64_t trial);
PlayerSet generic_players(int n);

}  // namespace cohindex

#endif  // COHINDEX_AXIOMS_HPP
