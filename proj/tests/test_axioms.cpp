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

#include "cohindex/axioms.hpp"

using namespace cohindex;

namespace {

constexpr int kTrials = 200;
constexpr std::uint64_t kSeed = 1234;

}  // namespace

TEST_CASE("positive checkers pass for both branches") {
  for (Branch branch : {Branch::banzhaf, Branch::shapley}) {
    for (double b : {0.5, 1.0, 2.0}) {
      CAPTURE(branch_name(branch));
      CAPTURE(b);
      const ValueFunctional F = make_cohesion_functional(branch, b);
      CHECK(check_linearity(F, kTrials, kSeed).pass);
      CHECK(check_dummy(F, kTrials, kSeed).pass);
      CHECK(check_symmetry(F, kTrials, kSeed).pass);
      CHECK(check_scale_invariance(F, kTrials, kSeed).pass);
      CHECK(check_cohesion_monotonicity(F, kTrials, kSeed).pass);
      CHECK(check_dictatorship_invariance(F, kTrials, kSeed).pass);
      CHECK(check_benchmark(F, branch, 50, kSeed).pass);
    }
  }
}

TEST_CASE("probability-level checkers") {
  const DistributionProducer banzhaf = make_distribution_producer(Branch::banzhaf);
  const DistributionProducer shapley = make_distribution_producer(Branch::shapley);
  for (double b : {0.5, 1.0, 2.0}) {
    CAPTURE(b);
    CHECK(check_luce_odds(banzhaf, b, kTrials, kSeed).pass);
    CHECK(check_luce_odds(shapley, b, kTrials, kSeed, true).pass);
    CHECK(check_size_separability(shapley, b, kTrials, kSeed).pass);
  }
  // Across size classes the size weights distort the odds, so the full check
  // must fail for the shapley producer.
  const AxiomReport cross = check_luce_odds(shapley, 1.0, kTrials, kSeed, false);
  CHECK(!cross.pass);
  CHECK(!cross.witness.empty());
}

TEST_CASE("shapley odds distortion on a concrete 3-player instance") {
  const PlayerSet players = generic_players(3);
  const CohesionStructure ones = constant_cohesion(players);
  const CoalitionDistribution d =
      shapley_probabilities(ones, 0, 1.0, shapley_size_weights(3));
  // Same cohesion on S = {} and T = {P2}, but odds are alpha_0/alpha_1 = 2.
  const double odds = d.prob(kEmptyCoalition) / d.prob(0b010u);
  CHECK(odds == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("reports are deterministic in the seed") {
  const ValueFunctional F = make_cohesion_functional(Branch::shapley, 1.0);
  const AxiomReport a = check_symmetry(F, 50, 777);
  const AxiomReport b = check_symmetry(F, 50, 777);
  CHECK(to_text(a) == to_text(b));
  CHECK(a.max_deviation == b.max_deviation);
}

TEST_CASE("kappa spread vanishes exactly on constant structures") {
  for (int n : {2, 3, 5}) {
    const PlayerSet players = generic_players(n);
    CHECK(kappa_spread(constant_cohesion(players)) == 0.0);
  }
  const PlayerSet players = generic_players(3);
  const CohesionStructure k(players, random_kappa_table(3, 5, 0, false));
  CHECK(kappa_spread(k) != 0.0);
}

TEST_CASE("countermodel: dummy perturbation") {
  const ValueFunctional cm =
      countermodel_dummy_perturbation(Branch::shapley, 1.0, 0.5);
  const AxiomReport target = check_dummy(cm, kTrials, kSeed);
  CHECK(!target.pass);
  CHECK(!target.witness.empty());
  // Preserved axioms.
  CHECK(check_linearity(cm, kTrials, kSeed).pass);
  CHECK(check_symmetry(cm, kTrials, kSeed).pass);
  CHECK(check_scale_invariance(cm, kTrials, kSeed).pass);
  // h(1) = 0, so it still calibrates at constant cohesion.
  CHECK(check_benchmark(cm, Branch::shapley, 50, kSeed).pass);
}

TEST_CASE("countermodel: per-player exponents") {
  const ValueFunctional cm =
      countermodel_player_exponents({1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
  const AxiomReport target = check_symmetry(cm, kTrials, kSeed);
  CHECK(!target.pass);
  CHECK(!target.witness.empty());
  CHECK(check_linearity(cm, kTrials, kSeed).pass);
  CHECK(check_dummy(cm, kTrials, kSeed).pass);
}

TEST_CASE("countermodel: non-power transform") {
  const ValueFunctional cm = countermodel_nonpower_transform();
  const AxiomReport target = check_scale_invariance(cm, kTrials, kSeed);
  CHECK(!target.pass);
  CHECK(!target.witness.empty());
  CHECK(check_linearity(cm, kTrials, kSeed).pass);
  CHECK(check_dummy(cm, kTrials, kSeed).pass);
  CHECK(check_symmetry(cm, kTrials, kSeed).pass);
}

TEST_CASE("countermodel: constant size weights") {
  const ValueFunctional cm = countermodel_constant_sizeweights(1.0);
  const AxiomReport target = check_benchmark(cm, Branch::shapley, 50, kSeed);
  CHECK(!target.pass);
  CHECK(!target.witness.empty());
  // Constant weights collapse to the Banzhaf distribution.
  CHECK(check_benchmark(cm, Branch::banzhaf, 50, kSeed).pass);
  CHECK(check_linearity(cm, kTrials, kSeed).pass);
  CHECK(check_dummy(cm, kTrials, kSeed).pass);
  CHECK(check_symmetry(cm, kTrials, kSeed).pass);
  CHECK(check_scale_invariance(cm, kTrials, kSeed).pass);
}

TEST_CASE("witnesses reproduce") {
  // A failing checker must report the same witness for the same seed.
  const ValueFunctional cm = countermodel_nonpower_transform();
  const AxiomReport a = check_scale_invariance(cm, kTrials, kSeed);
  const AxiomReport b = check_scale_invariance(cm, kTrials, kSeed);
  CHECK(a.witness == b.witness);
  CHECK(!a.pass);
}
