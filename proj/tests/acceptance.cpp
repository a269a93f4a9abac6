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

// Release gate: one pass/fail line per criterion, nonzero exit on any failure.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cohindex/axioms.hpp"
#include "cohindex/goldens.hpp"
#include "cohindex/scenarios.hpp"

using namespace cohindex;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& title, bool pass,
            const std::string& detail) {
  std::printf("%s  criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion,
              title.c_str(), detail.c_str());
  if (!pass) ++g_failures;
}

bool golden_group(const std::string& group, std::string* detail) {
  int total = 0, passed = 0;
  std::string first_fail;
  for (const auto& claim : run_golden_claims()) {
    if (claim.group != group) continue;
    ++total;
    if (claim.pass)
      ++passed;
    else if (first_fail.empty())
      first_fail = claim.id + ": " + claim.detail;
  }
  *detail = std::to_string(passed) + "/" + std::to_string(total) + " claims";
  if (!first_fail.empty()) *detail += "; first failure " + first_fail;
  return total > 0 && passed == total;
}

void criterion_goldens() {
  std::string detail;
  bool ok = golden_group("table1", &detail);
  report(1, "1980/82 reference table, shapley branch at b=1", ok, detail);
  ok = golden_group("bundestag", &detail);
  report(2, "bundestag-2025 scenario profiles", ok, detail);
  ok = golden_group("france", &detail);
  report(3, "france-2024 bloc and party profiles", ok, detail);
}

void criterion_oracles() {
  const std::uint64_t games_per_n = 200;
  double worst_shapley = 0.0, worst_banzhaf = 0.0;
  for (int n = 2; n <= 8; ++n) {
    const PlayerSet players = generic_players(n);
    const CohesionStructure ones = constant_cohesion(players);
    for (std::uint64_t t = 0; t < games_per_n; ++t) {
      const Game v(players, random_tu_worth(n, 0xACCE97 + n, t));
      const Eigen::VectorXd shap =
          cohesion_value(v, ones, Branch::shapley, 1.0).values;
      const Eigen::VectorXd banz =
          cohesion_value(v, ones, Branch::banzhaf, 1.0).values;
      worst_shapley = std::max(
          worst_shapley,
          (shap - classical_shapley_oracle(v)).cwiseAbs().maxCoeff());
      worst_banzhaf = std::max(
          worst_banzhaf, (banz - classical_banzhaf(v)).cwiseAbs().maxCoeff());
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "200 games per n in 2..8; max dev shapley %.3e (tol 1e-10), "
                "banzhaf %.3e (tol 1e-12)",
                worst_shapley, worst_banzhaf);
  report(4, "oracle equivalence at constant cohesion",
         worst_shapley <= 1e-10 && worst_banzhaf <= 1e-12, buf);
}

void criterion_axioms() {
  const int trials = 1000;
  const std::uint64_t seed = 20250301;
  std::vector<AxiomReport> failed;
  int ran = 0;
  auto require = [&](const AxiomReport& r) {
    ++ran;
    if (!r.pass) failed.push_back(r);
  };
  for (Branch branch : {Branch::banzhaf, Branch::shapley}) {
    for (double b : {0.5, 1.0, 2.0}) {
      const ValueFunctional F = make_cohesion_functional(branch, b);
      require(check_linearity(F, trials, seed));
      require(check_dummy(F, trials, seed));
      require(check_symmetry(F, trials, seed));
      require(check_scale_invariance(F, trials, seed));
      require(check_cohesion_monotonicity(F, trials, seed));
      require(check_dictatorship_invariance(F, trials, seed));
      require(check_benchmark(F, branch, trials, seed));
      const DistributionProducer P = make_distribution_producer(branch);
      if (branch == Branch::banzhaf)
        require(check_luce_odds(P, b, trials, seed));
      else
        require(check_size_separability(P, b, trials, seed));
    }
  }
  std::string detail = std::to_string(ran) + " checker runs x " +
                       std::to_string(trials) + " trials, " +
                       std::to_string(failed.size()) + " failures";
  if (!failed.empty())
    detail += "; first: " + failed.front().axiom + " on " +
              failed.front().functional + " (" + failed.front().witness + ")";
  report(5, "axiom suite with zero witnesses", failed.empty(), detail);
}

void criterion_countermodels() {
  const int trials = 400;
  const std::uint64_t seed = 20250301;
  bool ok = true;
  std::string detail = "4 countermodels";

  auto expect = [&](const AxiomReport& r, bool should_pass, const char* what) {
    if (r.pass != should_pass) {
      ok = false;
      detail += std::string("; ") + what + " went the wrong way";
    }
    if (!should_pass && r.pass == false && r.witness.empty()) {
      ok = false;
      detail += std::string("; ") + what + " lacks a witness";
    }
  };

  const ValueFunctional cm1 =
      countermodel_dummy_perturbation(Branch::shapley, 1.0, 0.5);
  expect(check_dummy(cm1, trials, seed), false, "cm1/dummy");
  expect(check_linearity(cm1, trials, seed), true, "cm1/linearity");
  expect(check_symmetry(cm1, trials, seed), true, "cm1/symmetry");
  expect(check_scale_invariance(cm1, trials, seed), true, "cm1/scale");
  // cm1 is exempt from cohesion monotonicity; the perturbation can trade
  // against the base value, so it is deliberately not checked here.

  const ValueFunctional cm2 =
      countermodel_player_exponents({1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
  expect(check_symmetry(cm2, trials, seed), false, "cm2/symmetry");
  expect(check_linearity(cm2, trials, seed), true, "cm2/linearity");
  expect(check_dummy(cm2, trials, seed), true, "cm2/dummy");

  const ValueFunctional cm3 = countermodel_nonpower_transform();
  expect(check_scale_invariance(cm3, trials, seed), false, "cm3/scale");
  expect(check_linearity(cm3, trials, seed), true, "cm3/linearity");
  expect(check_dummy(cm3, trials, seed), true, "cm3/dummy");
  expect(check_symmetry(cm3, trials, seed), true, "cm3/symmetry");

  const ValueFunctional cm4 = countermodel_constant_sizeweights(1.0);
  expect(check_benchmark(cm4, Branch::shapley, trials, seed), false,
         "cm4/shapley-calibration");
  expect(check_benchmark(cm4, Branch::banzhaf, trials, seed), true,
         "cm4/banzhaf-uniformity");
  expect(check_linearity(cm4, trials, seed), true, "cm4/linearity");
  expect(check_dummy(cm4, trials, seed), true, "cm4/dummy");
  expect(check_symmetry(cm4, trials, seed), true, "cm4/symmetry");
  expect(check_scale_invariance(cm4, trials, seed), true, "cm4/scale");

  report(6, "countermodels fail exactly their targets", ok, detail);
}

void criterion_curves() {
  std::string detail;
  const bool ok = golden_group("curves", &detail);
  report(7, "qualitative sweep-curve claims", ok, detail);
}

void criterion_degeneracy() {
  bool ok = true;
  std::string detail;

  // Double cordon: no feasible winning coalition, all-zero profile, no error.
  try {
    const Dataset& bloc = builtin_dataset("france-2024-bloc");
    const PowerProfile p = run_scenario(bloc.parliament, bloc.scenario("C"), 1.0);
    if (p.values.cwiseAbs().maxCoeff() != 0.0) {
      ok = false;
      detail = "double cordon did not return the all-zero profile";
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("double cordon threw: ") + e.what();
  }

  // Non-admissible cohesion: rejected, diagnostic names the singleton.
  const PlayerSet players({"Alpha", "Beta", "Gamma"});
  Eigen::VectorXd table = constant_cohesion(players).table();
  table[0b010u] = 0.0;
  const CohesionStructure bad(players, table);
  Eigen::VectorXd weights(3);
  weights << 2, 2, 1;
  const SimpleGame game = build_weighted_majority(players, weights, 3.0);
  try {
    cohesion_value(game.game(), bad, Branch::shapley, 1.0);
    ok = false;
    detail += "; non-admissible structure was accepted";
  } catch (const std::invalid_argument& e) {
    if (std::string(e.what()).find("Beta") == std::string::npos) {
      ok = false;
      detail += std::string("; diagnostic does not name the singleton: ") + e.what();
    }
  }

  if (detail.empty())
    detail = "zero fallback clean; rejection message names the zero singleton";
  report(8, "degeneracy handling", ok, detail);
}

}  // namespace

int main() {
  criterion_goldens();
  criterion_oracles();
  criterion_axioms();
  criterion_countermodels();
  criterion_curves();
  criterion_degeneracy();
  std::printf("%s: %d criterion failure(s)\n", g_failures ? "FAIL" : "OK",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
