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

#ifndef COHINDEX_COALITION_HPP
#define COHINDEX_COALITION_HPP

#include <Eigen/Core>

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace cohindex {

/// A coalition is a bitmask over player indices 0..n-1. With n capped at
/// kMaxPlayers, the full 2^n worth/cohesion tables stay small and subset
/// enumeration is a plain counter loop.
using Coalition = std::uint32_t;

inline constexpr int kMaxPlayers = 24;

inline constexpr Coalition kEmptyCoalition = 0;

inline int coalition_size(Coalition s) { return std::popcount(s); }

inline bool contains(Coalition s, int player) { return (s >> player) & 1u; }

inline Coalition with_player(Coalition s, int player) {
  return s | (Coalition{1} << player);
}

/// All players {0,...,n-1}.
inline Coalition grand_coalition(int n) {
  return (Coalition{1} << n) - 1u;
}

/// The player set: a count plus distinct display labels.
class PlayerSet {
 public:
  PlayerSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Index of a label, or -1 if absent.
  int index_of(const std::string& label) const;

  int num_coalitions() const { return 1 << size(); }

 private:
  std::vector<std::string> labels_;
};

/// A TU game: a dense worth table over all 2^n coalitions, v(empty) = 0.
class Game {
 public:
  Game(PlayerSet players, Eigen::VectorXd worth);

  const PlayerSet& players() const { return players_; }
  int num_players() const { return players_.size(); }
  double worth(Coalition s) const { return worth_[s]; }
  const Eigen::VectorXd& worth_table() const { return worth_; }

 private:
  PlayerSet players_;
  Eigen::VectorXd worth_;
};

/// v(S u {i}) - v(S). Requires i not in S.
double marginal_contribution(const Game& v, int i, Coalition s);

/// True iff every marginal contribution of i is zero.
bool is_dummy(const Game& v, int i);

/// True iff v(S) <= v(T) along every single-element extension S -> T.
bool is_monotone(const Game& v);

/// A {0,1}-valued game with v(empty)=0, v(N)=1. Monotonicity is detected at
/// construction and carried as a flag; non-monotone simple games are allowed.
class SimpleGame {
 public:
  explicit SimpleGame(Game game);

  const Game& game() const { return game_; }
  const PlayerSet& players() const { return game_.players(); }
  bool monotone() const { return monotone_; }

 private:
  Game game_;
  bool monotone_;
};

/// Seats-and-quota view of a weighted majority game. worth(S) = 1 iff the
/// seat total of S reaches the quota (weak inequality).
class WeightedMajorityGame {
 public:
  WeightedMajorityGame(PlayerSet players, Eigen::VectorXd weights, double quota);

  const PlayerSet& players() const { return players_; }
  const Eigen::VectorXd& weights() const { return weights_; }
  double quota() const { return quota_; }

  double coalition_weight(Coalition s) const;
  bool wins(Coalition s) const { return coalition_weight(s) >= quota_; }

  SimpleGame to_simple_game() const;

 private:
  PlayerSet players_;
  Eigen::VectorXd weights_;
  double quota_;
};

SimpleGame build_weighted_majority(const PlayerSet& players,
                                   const Eigen::VectorXd& weights,
                                   double quota);

/// Per-player marginal dichotomy check (simple game: range {-1,0,1};
/// monotone: range {0,1}). Violations are listed, never thrown.
struct DichotomyReport {
  int player = -1;
  bool all_in_unit_range = true;       // every marginal in {-1,0,1}
  bool all_nonnegative = true;         // every marginal in {0,1}
  std::vector<Coalition> negative_marginals;
  std::vector<Coalition> out_of_range;
};

DichotomyReport check_marginal_dichotomy(const SimpleGame& v, int i);

}  // namespace cohindex

#endif  // COHINDEX_COALITION_HPP
