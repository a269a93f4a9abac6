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

#include "cohindex/values.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace cohindex {

std::string branch_name(Branch branch) {
  return branch == Branch::banzhaf ? "banzhaf" : "shapley";
}

Eigen::VectorXd shapley_size_weights(int n) {
  if (n < 2) throw std::invalid_argument("shapley_size_weights: n >= 2 required");
  Eigen::VectorXd alpha(n);
  // alpha_k = k!(n-k-1)!/n!, computed by the recurrence
  // alpha_0 = 1/n, alpha_{k} = alpha_{k-1} * k / (n-k).
  alpha[0] = 1.0 / n;
  for (int k = 1; k < n; ++k)
    alpha[k] = alpha[k - 1] * static_cast<double>(k) / static_cast<double>(n - k);
  return alpha;
}

double cohesion_weight(double kappa_value, double b) {
  if (kappa_value == 0.0) return 0.0;
  return std::pow(kappa_value, b);
}

namespace {

void require_admissible(const CohesionStructure& kappa) {
  const int bad = first_inadmissible_player(kappa);
  if (bad >= 0)
    throw std::invalid_argument(
        "cohesion structure is not admissible: kappa({" +
        kappa.players().label(bad) + "}) = 0");
}

void require_exponent(double b) {
  if (!(b >= 0.0))
    throw std::invalid_argument("cohesion exponent must be >= 0");
  if (b > kMaxExponent)
    throw std::invalid_argument("cohesion exponent exceeds cap of 64");
}

// Shared Luce normalization: raw weights over subsets of N\{i}, normalized
// to a distribution. `underflow` reports positive-kappa weights that
// evaluated to zero.
CoalitionDistribution normalize_weights(const CohesionStructure& kappa, int i,
                                        Eigen::VectorXd raw, bool* underflow) {
  const double total = raw.sum();
  if (total <= 0.0)
    throw DegenerateDenominatorError(
        "coalition probability denominator vanished for player " +
        kappa.players().label(i));
  CoalitionDistribution dist;
  dist.player = i;
  dist.probs = raw / total;
  if (underflow) {
    const int m = kappa.players().num_coalitions();
    for (Coalition s = 0; s < static_cast<Coalition>(m); ++s) {
      if (contains(s, i)) continue;
      if (raw[s] == 0.0 && kappa(with_player(s, i)) > 0.0) {
        *underflow = true;
        break;
      }
    }
  }
  return dist;
}

CoalitionDistribution probabilities_impl(const CohesionStructure& kappa, int i,
                                         double b, const Eigen::VectorXd* alpha,
                                         bool* underflow) {
  require_admissible(kappa);
  require_exponent(b);
  const int n = kappa.num_players();
  if (i < 0 || i >= n) throw std::invalid_argument("player index out of range");
  const int m = kappa.players().num_coalitions();
  Eigen::VectorXd raw = Eigen::VectorXd::Zero(m);
  for (Coalition s = 0; s < static_cast<Coalition>(m); ++s) {
    if (contains(s, i)) continue;
    double w = cohesion_weight(kappa(with_player(s, i)), b);
    if (alpha) w *= (*alpha)[coalition_size(s)];
    raw[s] = w;
  }
  return normalize_weights(kappa, i, std::move(raw), underflow);
}

}  // namespace

CoalitionDistribution banzhaf_probabilities(const CohesionStructure& kappa,
                                            int i, double b) {
  return probabilities_impl(kappa, i, b, nullptr, nullptr);
}

CoalitionDistribution shapley_probabilities(const CohesionStructure& kappa,
                                            int i, double b,
                                            const Eigen::VectorXd& alpha) {
  const int n = kappa.num_players();
  if (alpha.size() != n)
    throw std::invalid_argument("shapley_probabilities: alpha needs n entries");
  if ((alpha.array() < 0.0).any())
    throw std::invalid_argument("shapley_probabilities: alpha must be non-negative");
  return probabilities_impl(kappa, i, b, &alpha, nullptr);
}

PowerProfile cohesion_value(const Game& v, const CohesionStructure& kappa,
                            Branch branch, double b,
                            std::optional<Eigen::VectorXd> alpha) {
  const int n = v.num_players();
  if (kappa.num_players() != n)
    throw std::invalid_argument("cohesion_value: player-count mismatch");
  Eigen::VectorXd size_weights;
  const Eigen::VectorXd* alpha_ptr = nullptr;
  if (branch == Branch::shapley) {
    size_weights = alpha ? *alpha : shapley_size_weights(n);
    if (size_weights.size() != n)
      throw std::invalid_argument("cohesion_value: alpha needs n entries");
    alpha_ptr = &size_weights;
  }

  PowerProfile profile;
  profile.branch = branch;
  profile.exponent = b;
  profile.normalized = false;
  profile.values.resize(n);
  const int m = v.players().num_coalitions();
  for (int i = 0; i < n; ++i) {
    const CoalitionDistribution dist =
        probabilities_impl(kappa, i, b, alpha_ptr, &profile.underflow);
    double acc = 0.0;
    for (Coalition s = 0; s < static_cast<Coalition>(m); ++s) {
      if (contains(s, i)) continue;
      const double p = dist.probs[s];
      if (p != 0.0) acc += p * marginal_contribution(v, i, s);
    }
    profile.values[i] = acc;
  }
  return profile;
}

PowerProfile normalize_index(const PowerProfile& profile, double grand_worth) {
  PowerProfile out = profile;
  out.normalized = true;
  const double total = profile.values.sum();
  if (std::abs(total) < 1e-12)
    out.values.setZero();
  else
    out.values = profile.values * (grand_worth / total);
  return out;
}

Eigen::VectorXd classical_shapley_oracle(const Game& v) {
  const int n = v.num_players();
  if (n > 10)
    throw std::invalid_argument("classical_shapley_oracle: n <= 10 required");
  Eigen::VectorXd phi = Eigen::VectorXd::Zero(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  double count = 0.0;
  do {
    Coalition s = kEmptyCoalition;
    double prev = 0.0;
    for (int i : order) {
      s = with_player(s, i);
      const double cur = v.worth(s);
      phi[i] += cur - prev;
      prev = cur;
    }
    count += 1.0;
  } while (std::next_permutation(order.begin(), order.end()));
  return phi / count;
}

Eigen::VectorXd classical_banzhaf(const Game& v) {
  const int n = v.num_players();
  const Coalition all = grand_coalition(n);
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (Coalition s = 0; s <= all; ++s) {
      if (contains(s, i)) continue;
      acc += v.worth(with_player(s, i)) - v.worth(s);
    }
    beta[i] = acc / std::pow(2.0, n - 1);
  }
  return beta;
}

}  // namespace cohindex
