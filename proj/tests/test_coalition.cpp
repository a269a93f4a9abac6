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

#include <doctest.h>

#include "cohindex/coalition.hpp"

using namespace cohindex;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

Game dictator_game(const PlayerSet& players, int d) {
  Eigen::VectorXd worth(players.num_coalitions());
  for (Coalition s = 0; s < static_cast<Coalition>(players.num_coalitions()); ++s)
    worth[s] = contains(s, d) ? 1.0 : 0.0;
  return Game(players, worth);
}

SimpleGame bundestag_game() {
  const PlayerSet players({"CDU/CSU", "AfD", "SPD", "Gruene", "Linke"});
  return build_weighted_majority(players, vec({208, 152, 120, 85, 64}), 316.0);
}

}  // namespace

TEST_CASE("coalition bitmask helpers") {
  CHECK(coalition_size(kEmptyCoalition) == 0);
  CHECK(coalition_size(0b1011u) == 3);
  CHECK(contains(0b101u, 2));
  CHECK(!contains(0b101u, 1));
  CHECK(with_player(0b001u, 2) == 0b101u);
  CHECK(grand_coalition(3) == 0b111u);
  CHECK(grand_coalition(kMaxPlayers) == 0xFFFFFFu);
}

TEST_CASE("player set validation") {
  const PlayerSet players({"A", "B", "C"});
  CHECK(players.size() == 3);
  CHECK(players.num_coalitions() == 8);
  CHECK(players.index_of("B") == 1);
  CHECK(players.index_of("Z") == -1);
  CHECK_THROWS_AS(PlayerSet({"A"}), std::invalid_argument);
  CHECK_THROWS_AS(PlayerSet({"A", "A"}), std::invalid_argument);
  CHECK_THROWS_AS(PlayerSet({"A", ""}), std::invalid_argument);
}

TEST_CASE("weighted majority worths") {
  const PlayerSet apex({"A", "B", "C"});
  const SimpleGame fig1 = build_weighted_majority(apex, vec({45, 35, 20}), 51.0);
  // {B,C} has 55 seats, above the 51 threshold.
  CHECK(fig1.game().worth(0b110u) == 1.0);
  CHECK(fig1.game().worth(kEmptyCoalition) == 0.0);
  CHECK(fig1.game().worth(0b001u) == 0.0);
  CHECK(fig1.monotone());

  const SimpleGame bt = bundestag_game();
  // AfD + Gruene + Linke = 301 < 316.
  const Coalition afd_gruene_linke = 0b11010u;
  CHECK(bt.game().worth(afd_gruene_linke) == 0.0);
  CHECK(bt.game().worth(grand_coalition(5)) == 1.0);
}

TEST_CASE("weighted majority rejects bad inputs") {
  const PlayerSet players({"A", "B"});
  CHECK_THROWS_AS(build_weighted_majority(players, vec({-1, 5}), 3.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_weighted_majority(players, vec({1, 5}), 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_weighted_majority(players, vec({1, 5}), 7.0),
                  std::invalid_argument);
}

TEST_CASE("marginal contributions") {
  const PlayerSet players({"P1", "P2", "P3"});
  const Game dict = dictator_game(players, 0);
  for (Coalition s : {0b000u, 0b010u, 0b100u, 0b110u}) {
    CHECK(marginal_contribution(dict, 0, s) == 1.0);
  }
  for (Coalition s : {0b000u, 0b001u, 0b100u, 0b101u})
    CHECK(marginal_contribution(dict, 1, s) == 0.0);
  CHECK_THROWS_AS(marginal_contribution(dict, 0, 0b001u), std::invalid_argument);

  const SimpleGame bt = bundestag_game();
  // CDU/CSU joining {SPD}: 120 < 316 <= 328.
  CHECK(marginal_contribution(bt.game(), 0, 0b00100u) == 1.0);
}

TEST_CASE("dummy detection") {
  const PlayerSet players({"P1", "P2", "P3"});
  const Game dict = dictator_game(players, 0);
  CHECK(!is_dummy(dict, 0));
  CHECK(is_dummy(dict, 1));
  CHECK(is_dummy(dict, 2));
}

TEST_CASE("game construction invariants") {
  const PlayerSet players({"P1", "P2"});
  CHECK_THROWS_AS(Game(players, vec({0.5, 0, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(Game(players, vec({0, 0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGame(Game(players, vec({0, 0.5, 0, 1}))),
                  std::invalid_argument);
  CHECK_THROWS_AS(SimpleGame(Game(players, vec({0, 0, 0, 0}))),
                  std::invalid_argument);
}

TEST_CASE("marginal dichotomy: monotone game stays in {0,1}") {
  const SimpleGame bt = bundestag_game();
  CHECK(bt.monotone());
  for (int i = 0; i < 5; ++i) {
    const DichotomyReport report = check_marginal_dichotomy(bt, i);
    CHECK(report.all_in_unit_range);
    CHECK(report.all_nonnegative);
    CHECK(report.negative_marginals.empty());
    CHECK(report.out_of_range.empty());
  }
}

TEST_CASE("marginal dichotomy: non-monotone simple game shows a -1") {
  // v({1}) = 1, v({1,2}) = 0, v(N) = 1: player 2 destroys a winning coalition.
  const PlayerSet players({"P1", "P2", "P3"});
  Eigen::VectorXd worth = Eigen::VectorXd::Zero(8);
  worth[0b001] = 1.0;
  worth[0b111] = 1.0;
  const SimpleGame v{Game(players, worth)};
  CHECK(!v.monotone());
  const DichotomyReport report = check_marginal_dichotomy(v, 1);
  CHECK(report.all_in_unit_range);
  CHECK(!report.all_nonnegative);
  CHECK(!report.negative_marginals.empty());
  CHECK(report.out_of_range.empty());
}
