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

#include "cohindex/coalition.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace cohindex {

PlayerSet::PlayerSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  const int n = static_cast<int>(labels_.size());
  if (n < 2) throw std::invalid_argument("PlayerSet: need at least 2 players");
  if (n > kMaxPlayers)
    throw std::invalid_argument("PlayerSet: at most " +
                                std::to_string(kMaxPlayers) + " players");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("PlayerSet: empty label");
    if (!seen.insert(l).second)
      throw std::invalid_argument("PlayerSet: duplicate label '" + l + "'");
  }
}

int PlayerSet::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

Game::Game(PlayerSet players, Eigen::VectorXd worth)
    : players_(std::move(players)), worth_(std::move(worth)) {
  if (worth_.size() != players_.num_coalitions())
    throw std::invalid_argument("Game: worth table must have 2^n entries");
  if (worth_[0] != 0.0)
    throw std::invalid_argument("Game: worth(empty) must be 0");
}

double marginal_contribution(const Game& v, int i, Coalition s) {
  if (contains(s, i))
    throw std::invalid_argument("marginal_contribution: player already in coalition");
  return v.worth(with_player(s, i)) - v.worth(s);
}

bool is_dummy(const Game& v, int i) {
  const Coalition all = grand_coalition(v.num_players());
  for (Coalition s = 0; s <= all; ++s) {
    if (contains(s, i)) continue;
    if (marginal_contribution(v, i, s) != 0.0) return false;
  }
  return true;
}

bool is_monotone(const Game& v) {
  const int n = v.num_players();
  const Coalition all = grand_coalition(n);
  for (Coalition s = 0; s <= all; ++s)
    for (int i = 0; i < n; ++i)
      if (!contains(s, i) && v.worth(with_player(s, i)) < v.worth(s)) return false;
  return true;
}

SimpleGame::SimpleGame(Game game) : game_(std::move(game)), monotone_(false) {
  const Coalition all = grand_coalition(game_.num_players());
  for (Coalition s = 0; s <= all; ++s) {
    const double w = game_.worth(s);
    if (w != 0.0 && w != 1.0)
      throw std::invalid_argument("SimpleGame: worths must be 0 or 1");
  }
  if (game_.worth(all) != 1.0)
    throw std::invalid_argument("SimpleGame: grand coalition must win");
  monotone_ = is_monotone(game_);
}

WeightedMajorityGame::WeightedMajorityGame(PlayerSet players,
                                           Eigen::VectorXd weights, double quota)
    : players_(std::move(players)), weights_(std::move(weights)), quota_(quota) {
  if (weights_.size() != players_.size())
    throw std::invalid_argument("WeightedMajorityGame: one weight per player");
  if ((weights_.array() < 0.0).any())
    throw std::invalid_argument("WeightedMajorityGame: weights must be non-negative");
  if (quota_ <= 0.0)
    throw std::invalid_argument("WeightedMajorityGame: quota must be positive");
  if (weights_.sum() < quota_)
    throw std::invalid_argument(
        "WeightedMajorityGame: quota exceeds total weight (grand coalition loses)");
}

double WeightedMajorityGame::coalition_weight(Coalition s) const {
  double total = 0.0;
  for (int i = 0; i < players_.size(); ++i)
    if (contains(s, i)) total += weights_[i];
  return total;
}

SimpleGame WeightedMajorityGame::to_simple_game() const {
  const int m = players_.num_coalitions();
  Eigen::VectorXd worth(m);
  for (Coalition s = 0; s < static_cast<Coalition>(m); ++s)
    worth[s] = wins(s) ? 1.0 : 0.0;
  return SimpleGame(Game(players_, std::move(worth)));
}

SimpleGame build_weighted_majority(const PlayerSet& players,
                                   const Eigen::VectorXd& weights, double quota) {
  return WeightedMajorityGame(players, weights, quota).to_simple_game();
}

DichotomyReport check_marginal_dichotomy(const SimpleGame& v, int i) {
  DichotomyReport report;
  report.player = i;
  const Coalition all = grand_coalition(v.game().num_players());
  for (Coalition s = 0; s <= all; ++s) {
    if (contains(s, i)) continue;
    const double d = marginal_contribution(v.game(), i, s);
    if (d != -1.0 && d != 0.0 && d != 1.0) {
      report.all_in_unit_range = false;
      report.out_of_range.push_back(s);
    }
    if (d < 0.0) {
      report.all_nonnegative = false;
      report.negative_marginals.push_back(s);
    }
  }
  return report;
}

}  // namespace cohindex
