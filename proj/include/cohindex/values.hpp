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

#ifndef COHINDEX_VALUES_HPP
#define COHINDEX_VALUES_HPP

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>

#include "cohindex/coalition.hpp"
#include "cohindex/cohesion.hpp"

namespace cohindex {

enum class Branch { banzhaf, shapley };

std::string branch_name(Branch branch);

/// Thrown when a coalition-probability denominator vanishes (non-admissible
/// cohesion or total exponent underflow).
class DegenerateDenominatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest accepted cohesion exponent. Beyond this, kappa^b underflows for
/// every kappa of interest and results carry no information.
inline constexpr double kMaxExponent = 64.0;

/// Classical Shapley size weights alpha_k = k!(n-k-1)!/n!, k = 0..n-1.
/// Satisfies sum_k C(n-1,k) alpha_k = 1.
Eigen::VectorXd shapley_size_weights(int n);

/// kappa^b with the convention that zero cohesion stays excluded at every
/// exponent, including b = 0. This makes b = 0 the classical index on
/// positive supports and the reduced-game index under a cordon.
double cohesion_weight(double kappa_value, double b);

/// Per-player probability table over subsets S of N\{i}. Entries at
/// coalitions containing i are zero by construction.
struct CoalitionDistribution {
  int player;
  Eigen::VectorXd probs;  // size 2^n, indexed by coalition mask

  double prob(Coalition s) const { return probs[s]; }
};

/// Luce probabilities p_i(S) proportional to kappa(S u {i})^b.
CoalitionDistribution banzhaf_probabilities(const CohesionStructure& kappa,
                                            int i, double b);

/// Size-weighted Luce probabilities p_i(S) proportional to
/// alpha_{|S|} * kappa(S u {i})^b.
CoalitionDistribution shapley_probabilities(const CohesionStructure& kappa,
                                            int i, double b,
                                            const Eigen::VectorXd& alpha);

struct PowerProfile {
  Branch branch;
  double exponent;
  bool normalized;
  Eigen::VectorXd values;
  /// Set when some strictly positive kappa^b underflowed to zero.
  bool underflow = false;
};

/// Expected marginal contribution of each player under the branch's
/// coalition distribution (unnormalized). For the shapley branch, alpha
/// defaults to the classical Shapley size weights.
PowerProfile cohesion_value(const Game& v, const CohesionStructure& kappa,
                            Branch branch, double b,
                            std::optional<Eigen::VectorXd> alpha = std::nullopt);

/// Proportional rescaling to sum grand_worth. Falls back to the all-zero
/// profile when |sum of unnormalized values| < 1e-12.
PowerProfile normalize_index(const PowerProfile& profile, double grand_worth);

/// Shapley value by explicit enumeration of all n! player orderings.
/// Deliberately independent of the probability-system code above; used as
/// the cross-check oracle. Requires n <= 10.
Eigen::VectorXd classical_shapley_oracle(const Game& v);

/// Unnormalized Banzhaf value: per-player average marginal contribution over
/// the 2^(n-1) subsets of N\{i}, by direct enumeration.
Eigen::VectorXd classical_banzhaf(const Game& v);

}  // namespace cohindex

#endif  // COHINDEX_VALUES_HPP
