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

#ifndef COHINDEX_COHESION_HPP
#define COHINDEX_COHESION_HPP

#include <Eigen/Core>

#include <utility>
#include <vector>

#include "cohindex/coalition.hpp"

namespace cohindex {

/// A cohesion structure: a dense non-negative table kappa over all 2^n
/// coalitions with kappa(empty) = 0. Admissibility (every singleton strictly
/// positive) is a property of the table, not a construction invariant;
/// value computations reject non-admissible structures.
class CohesionStructure {
 public:
  CohesionStructure(PlayerSet players, Eigen::VectorXd kappa);

  const PlayerSet& players() const { return players_; }
  int num_players() const { return players_.size(); }
  double kappa(Coalition s) const { return kappa_[s]; }
  double operator()(Coalition s) const { return kappa_[s]; }
  const Eigen::VectorXd& table() const { return kappa_; }

 private:
  PlayerSet players_;
  Eigen::VectorXd kappa_;
};

/// True iff kappa({i}) > 0 for every player.
bool is_admissible(const CohesionStructure& k);

/// Index of the first player with kappa({i}) = 0, or -1 if admissible.
int first_inadmissible_player(const CohesionStructure& k);

/// Range-based ideological cohesion: kappa({i}) = 1 for singletons and
/// kappa(S) = 1 / (1 + max_{i,j in S} |pos_i - pos_j|) for |S| >= 2.
/// Always admissible; values lie in (0, 1].
CohesionStructure range_cohesion(const PlayerSet& players,
                                 const Eigen::VectorXd& positions);

enum class DefaultRule { singletons_one, zero };

/// Directly specified cohesion values. Unlisted singletons default to 1
/// under singletons_one; all other unlisted coalitions default to 0.
CohesionStructure explicit_cohesion(
    const PlayerSet& players,
    const std::vector<std::pair<Coalition, double>>& entries,
    DefaultRule default_rule = DefaultRule::singletons_one);

/// Cordon sanitaire: kappa(S) = 0 for every S with |S| >= 2 intersecting
/// the pariah set. Singletons are untouched, so admissibility is preserved.
CohesionStructure apply_cordon(const CohesionStructure& base, Coalition pariahs);

/// Pointwise scaling by a > 0.
CohesionStructure scale_cohesion(const CohesionStructure& base, double a);

/// The constant-one structure (kappa(S) = 1 for non-empty S).
CohesionStructure constant_cohesion(const PlayerSet& players);

}  // namespace cohindex

#endif  // COHINDEX_COHESION_HPP
