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

#include "cohindex/cohesion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace cohindex {

CohesionStructure::CohesionStructure(PlayerSet players, Eigen::VectorXd kappa)
    : players_(std::move(players)), kappa_(std::move(kappa)) {
  if (kappa_.size() != players_.num_coalitions())
    throw std::invalid_argument("CohesionStructure: kappa table must have 2^n entries");
  if (kappa_[0] != 0.0)
    throw std::invalid_argument("CohesionStructure: kappa(empty) must be 0");
  if ((kappa_.array() < 0.0).any())
    throw std::invalid_argument("CohesionStructure: kappa must be non-negative");
}

bool is_admissible(const CohesionStructure& k) {
  return first_inadmissible_player(k) < 0;
}

int first_inadmissible_player(const CohesionStructure& k) {
  for (int i = 0; i < k.num_players(); ++i)
    if (k.kappa(Coalition{1} << i) <= 0.0) return i;
  return -1;
}

CohesionStructure range_cohesion(const PlayerSet& players,
                                 const Eigen::VectorXd& positions) {
  const int n = players.size();
  if (positions.size() != n)
    throw std::invalid_argument("range_cohesion: one position per player");
  if (!positions.allFinite())
    throw std::invalid_argument("range_cohesion: positions must be finite");
  const int m = players.num_coalitions();
  Eigen::VectorXd kappa(m);
  kappa[0] = 0.0;
  for (Coalition s = 1; s < static_cast<Coalition>(m); ++s) {
    if (coalition_size(s) == 1) {
      kappa[s] = 1.0;
      continue;
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      if (!contains(s, i)) continue;
      lo = std::min(lo, positions[i]);
      hi = std::max(hi, positions[i]);
    }
    kappa[s] = 1.0 / (1.0 + (hi - lo));
  }
  return CohesionStructure(players, std::move(kappa));
}

CohesionStructure explicit_cohesion(
    const PlayerSet& players,
    const std::vector<std::pair<Coalition, double>>& entries,
    DefaultRule default_rule) {
  const int m = players.num_coalitions();
  Eigen::VectorXd kappa = Eigen::VectorXd::Zero(m);
  if (default_rule == DefaultRule::singletons_one)
    for (int i = 0; i < players.size(); ++i) kappa[Coalition{1} << i] = 1.0;
  for (const auto& [s, value] : entries) {
    if (s >= static_cast<Coalition>(m))
      throw std::invalid_argument("explicit_cohesion: coalition out of range");
    if (value < 0.0)
      throw std::invalid_argument("explicit_cohesion: negative cohesion entry");
    if (s == kEmptyCoalition && value != 0.0)
      throw std::invalid_argument("explicit_cohesion: kappa(empty) must be 0");
    kappa[s] = value;
  }
  return CohesionStructure(players, std::move(kappa));
}

CohesionStructure apply_cordon(const CohesionStructure& base, Coalition pariahs) {
  Eigen::VectorXd kappa = base.table();
  const int m = base.players().num_coalitions();
  for (Coalition s = 1; s < static_cast<Coalition>(m); ++s)
    if ((s & pariahs) != 0 && coalition_size(s) >= 2) kappa[s] = 0.0;
  return CohesionStructure(base.players(), std::move(kappa));
}

CohesionStructure scale_cohesion(const CohesionStructure& base, double a) {
  if (!(a > 0.0)) throw std::invalid_argument("scale_cohesion: factor must be positive");
  return CohesionStructure(base.players(), base.table() * a);
}

CohesionStructure constant_cohesion(const PlayerSet& players) {
  Eigen::VectorXd kappa = Eigen::VectorXd::Ones(players.num_coalitions());
  kappa[0] = 0.0;
  return CohesionStructure(players, std::move(kappa));
}

}  // namespace cohindex
