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

#include "cohindex/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace cohindex {

namespace {

constexpr int kMinTrialPlayers = 2;
constexpr int kMaxTrialPlayers = 6;

std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 mix of (seed, trial) so trials are order-independent.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return std::mt19937_64(z ^ (z >> 31));
}

int draw_n(std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(kMinTrialPlayers, kMaxTrialPlayers)(rng);
}

Eigen::VectorXd draw_tu_worth(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd worth(1 << n);
  worth[0] = 0.0;
  for (int s = 1; s < (1 << n); ++s) worth[s] = u(rng);
  return worth;
}

Eigen::VectorXd draw_kappa(std::mt19937_64& rng, int n, bool allow_zeros) {
  std::uniform_real_distribution<double> u(0.05, 2.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Eigen::VectorXd kappa(1 << n);
  kappa[0] = 0.0;
  for (int s = 1; s < (1 << n); ++s) {
    if (allow_zeros && coalition_size(static_cast<Coalition>(s)) >= 2 &&
        coin(rng) < 0.3)
      kappa[s] = 0.0;
    else
      kappa[s] = u(rng);
  }
  return kappa;
}

std::string describe_table(const char* name, const Eigen::VectorXd& table) {
  std::ostringstream os;
  os << name << " = [";
  for (Eigen::Index i = 0; i < table.size(); ++i) {
    if (i) os << ", ";
    os << table[i];
  }
  os << "]";
  return os.str();
}

std::string witness_text(std::uint64_t trial, const Eigen::VectorXd& worth,
                         const Eigen::VectorXd& kappa, const std::string& extra) {
  std::ostringstream os;
  os << "trial=" << trial << "; " << describe_table("worth", worth) << "; "
     << describe_table("kappa", kappa);
  if (!extra.empty()) os << "; " << extra;
  return os.str();
}

// Permuted game / cohesion: (pi v)(S) = v(pi^{-1} S).
Eigen::VectorXd permute_table(const Eigen::VectorXd& table,
                              const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  Eigen::VectorXd out(table.size());
  for (Coalition s = 0; s < static_cast<Coalition>(table.size()); ++s) {
    Coalition pre = 0;  // pi^{-1}(s)
    for (int i = 0; i < n; ++i)
      if (contains(s, pi[i])) pre = with_player(pre, i);
    out[s] = table[pre];
  }
  return out;
}

}  // namespace

PlayerSet generic_players(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back("P" + std::to_string(i + 1));
  return PlayerSet(std::move(labels));
}

Eigen::VectorXd random_tu_worth(int n, std::uint64_t seed, std::uint64_t trial) {
  auto rng = rng_for(seed, trial);
  return draw_tu_worth(rng, n);
}

Eigen::VectorXd random_kappa_table(int n, std::uint64_t seed, std::uint64_t trial,
                                   bool allow_zero_coalitions) {
  auto rng = rng_for(seed ^ 0xABCDEF, trial);
  return draw_kappa(rng, n, allow_zero_coalitions);
}

SimpleGame random_weighted_majority(const PlayerSet& players, std::uint64_t seed,
                                    std::uint64_t trial) {
  auto rng = rng_for(seed ^ 0x5EA75, trial);
  std::uniform_int_distribution<int> seats(1, 100);
  Eigen::VectorXd weights(players.size());
  for (int i = 0; i < players.size(); ++i) weights[i] = seats(rng);
  const double quota = std::floor(weights.sum() / 2.0) + 1.0;
  return build_weighted_majority(players, weights, quota);
}

std::string to_text(const AxiomReport& r) {
  std::ostringstream os;
  os << "axiom: " << r.axiom << "\n"
     << "functional: " << r.functional << "\n"
     << "verdict: " << (r.pass ? "pass" : "fail") << "\n"
     << "trials: " << r.trials << "\n"
     << "seed: " << r.seed << "\n"
     << "max_deviation: " << r.max_deviation << "\n";
  if (!r.witness.empty()) os << "witness: " << r.witness << "\n";
  return os.str();
}

std::string to_text(const std::vector<AxiomReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) os << to_text(r) << "\n";
  return os.str();
}

ValueFunctional make_cohesion_functional(Branch branch, double b) {
  ValueFunctional f;
  f.name = branch_name(branch) + "(b=" + std::to_string(b) + ")";
  f.eval = [branch, b](const Game& v, const CohesionStructure& kappa) {
    return cohesion_value(v, kappa, branch, b).values;
  };
  return f;
}

DistributionProducer make_distribution_producer(Branch branch) {
  DistributionProducer p;
  p.name = branch_name(branch);
  if (branch == Branch::banzhaf) {
    p.eval = [](const CohesionStructure& kappa, int i, double b) {
      return banzhaf_probabilities(kappa, i, b);
    };
  } else {
    p.eval = [](const CohesionStructure& kappa, int i, double b) {
      return shapley_probabilities(kappa, i, b,
                                   shapley_size_weights(kappa.num_players()));
    };
  }
  return p;
}

AxiomReport check_linearity(const ValueFunctional& F, int trials,
                            std::uint64_t seed) {
  AxiomReport report{"linearity", F.name, true, trials, seed, 0.0, ""};
  for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(trials); ++t) {
    auto rng = rng_for(seed, t);
    const int n = draw_n(rng);
    const PlayerSet players = generic_players(n);
    const Eigen::VectorXd wv = draw_tu_worth(rng, n);
    const Eigen::VectorXd ww = draw_tu_worth(rng, n);
    std::uniform_real_distribution<double> sc(-2.0, 2.0);
    const double a = sc(rng), c = sc(rng);
    const Eigen::VectorXd kt = draw_kappa(rng, n, true);
    const CohesionStructure kappa(players, kt);
    const Game v(players, wv), w(players, ww);
    const Game combo(players, a * wv + c * ww);
    const Eigen::VectorXd lhs = F.eval(combo, kappa);
    const Eigen::VectorXd rhs = a * F.eval(v, kappa) + c * F.eval(w, kappa);
    const double dev = (lhs - rhs).cwiseAbs().maxCoeff();
    report.max_deviation = std::max(report.max_deviation, dev);
    if (dev > 1e-9) {
      report.pass = false;
      std::ostringstream extra;
      extra << describe_table("worth_w", ww) << "; a=" << a << "; c=" << c
            << "; deviation=" << dev;
      report.witness = witness_text(t, wv, kt, extra.str());
      break;
    }
  }
  return report;
}

AxiomReport check_dummy(const ValueFunctional& F, int trials, std::uint64_t seed) {
  AxiomReport report{"dummy", F.name, true, trials, seed, 0.0, ""};
  for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(trials); ++t) {
    auto rng = rng_for(seed, t);
    const int n = draw_n(rng);
    const PlayerSet players = generic_players(n);
    const int dummy = std::uniform_int_distribution<int>(0, n - 1)(rng);
    Eigen::VectorXd worth = draw_tu_worth(rng, n);
    // Force worth(S u {dummy}) = worth(S): membership of `dummy` is inert.
    for (Coalition s = 0; s < static_cast<Coalition>(1 << n); ++s)
      if (!contains(s, dummy)) worth[with_player(s, dummy)] = worth[s];
    worth[0] = 0.0;
    const Eigen::VectorXd kt = draw_kappa(rng, n, true);
    const Game v(players, worth);
    const CohesionStructure kappa(players, kt);
    const double dev = std::abs(F.eval(v, kappa)[dummy]);
    report.max_deviation = std::max(report.max_deviation, dev);
    if (dev > 1e-12) {
      report.pass = false;
      report.witness = witness_text(
          t, worth, kt, "dummy_player=" + std::to_string(dummy));
      break;
    }
  }
  return report;
}

AxiomReport check_symmetry(const ValueFunctional& F, int trials,
                           std::uint64_t seed) {
  AxiomReport report{"symmetry", F.name, true, trials, seed, 0.0, ""};
  for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(trials); ++t) {
    auto rng = rng_for(seed, t);
    const int n = draw_n(rng);
    const PlayerSet players = generic_players(n);
    const Eigen::VectorXd wv = draw_tu_worth(rng, n);
    const Eigen::VectorXd kt = draw_kappa(rng, n, true);
    std::vector<int> pi(n);
    for (int i = 0; i < n; ++i) pi[i] = i;
    std::shuffle(pi.begin(), pi.end(), rng);
    const Game v(players, wv);
    const CohesionStructure kappa(players, kt);
    const Game pv(players, permute_table(wv, pi));
    const CohesionStructure pk(players, permute_table(kt, pi));
    const Eigen::VectorXd base = F.eval(v, kappa);
    const Eigen::VectorXd perm = F.eval(pv, pk);
    double dev = 0.0;
    for (int i = 0; i < n; ++i) dev = std::max(dev, std::abs(perm[pi[i]] - base[i]));
    report.max_deviation = std::max(report.max_deviation, dev);
    if (dev > 1e-12) {
      report.pass = false;
      std::ostringstream extra;
      extra << "pi = [";
      for (int i = 0; i < n; ++i) extra << (i ? "," : "") << pi[i];
      extra << "]";
      report.witness = witness_text(t, wv, kt, extra.str());
      break;
    }
  }
  return report;
}

AxiomReport check_scale_invariance(const ValueFunctional& F, int trials,
                                   std::uint64_t seed) {
  AxiomReport report{"scale_invariance", F.name, true, trials, seed, 0.0, ""};
  for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(trials); ++t) {
    auto rng = rng_for(seed, t);
    const int n = draw_n(rng);
    const PlayerSet players = generic_players(n);
    const Eigen::VectorXd wv = draw_tu_worth(rng, n);
    const Eigen::VectorXd kt = draw_kappa(rng, n, true);
    std::uniform_real_distribution<double> logu(-3.0, 3.0);
    const double a = std::pow(10.0, logu(rng));
    const Game v(players, wv);
    const CohesionStructure kappa(players, kt);
    const CohesionStructure scaled = scale_cohesion(kappa, a);
    const Eigen::VectorXd base = F.eval(v, kappa);
    const Eigen::VectorXd other = F.eval(v, scaled);
    const double scale = std::max(1.0, base.cwiseAbs().maxCoeff());
    const double dev = (base - other).cwiseAbs().maxCoeff() / scale;
    report.max_deviation = std::max(report.max_deviation, dev);
    if (dev > 1e-10) {
      report.pass = false;
      report.witness = witness_text(t, wv, kt, "a=" + std::to_string(a));
      break;
    }
  }
  return report;
}

AxiomReport check_cohesion_monotonicity(const ValueFunctional& F, int trials,
                                        std::uint64_t seed) {
  AxiomReport report{"cohesion_monotonicity", F.name, true, trials, seed, 0.0, ""};
  for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(trials); ++t) {
    auto rng = rng_for(seed, t);
    const int n = draw_n(rng);
    const PlayerSet players = generic_players(n);
    const SimpleGame sg = random_weighted_majority(players, seed, t);
    const Game& v = sg.game();
    const Eigen::VectorXd kt = draw_kappa(rng, n, true);
    const CohesionStructure kappa(players, kt);
    const int i = std::uniform_int_distribution<int>(0, n - 1)(rng);
    // Raise kappa only on coalitions S u {i} where i is pivotal.
    Eigen::VectorXd kt2 = kt;
    std::uniform_real_distribution<double> bump(0.0, 1.0);
    bool strict = false;
    for (Coalition s = 0; s < static_cast<Coalition>(1 << n); ++s) {
      if (contains(s, i)) continue;
      if (marginal_contribution(v, i, s) == 1.0) {
        const double d = bump(rng);
        kt2[with_player(s, i)] += d;
        if (d > 0.0) strict = true;
      }
    }
    if (!strict) continue;  // i never pivotal in this draw; premise (2) unmet
    const CohesionStructure kappa2(players, kt2);
    const double before = F.eval(v, kappa)[i];
    const double after = F.eval(v, kappa2)[i];
    const double dev = std::max(0.0, before - after);
    report.max_deviation = std::max(report.max_deviation, dev);
    if (after < before - 1e-12) {
      report.pass = false;
      report.witness = witness_text(t, v.worth_table(), kt,
                                    "player=" + std::to_string(i) + "; " +
                                        describe_table("kappa_raised", kt2));
      break;
    }
  }
  return report;
}

AxiomReport check_dictatorship_invariance(const ValueFunctional& F, int trials,
                                          std::uint64_t seed) {
  AxiomReport report{"dictatorship_invariance", F.name, true, trials, seed, 0.0, ""};
  for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(trials); ++t) {
    auto rng = rng_for(seed, t);
    const int n = draw_n(rng);
    const PlayerSet players = generic_players(n);
    const int d = std::uniform_int_distribution<int>(0, n - 1)(rng);
    Eigen::VectorXd worth(1 << n);
    for (Coalition s = 0; s < static_cast<Coalition>(1 << n); ++s)
      worth[s] = contains(s, d) ? 1.0 : 0.0;
    Eigen::VectorXd kt = draw_kappa(rng, n, true);
    // Half the trials additionally cordon off the dictator's partners.
    if (t % 2 == 0) {
      for (Coalition s = 0; s < static_cast<Coalition>(1 << n); ++s)
        if (contains(s, d) && coalition_size(s) >= 2) kt[s] = 0.0;
    }
    const Game v(players, worth);
    const CohesionStructure kappa(players, kt);
    const Eigen::VectorXd raw = F.eval(v, kappa);
    Eigen::VectorXd expected = Eigen::VectorXd::Zero(n);
    expected[d] = 1.0;
    double dev = (raw - expected).cwiseAbs().maxCoeff();
    // Normalized index must yield the same pattern.
    const double total = raw.sum();
    if (std::abs(total) >= 1e-12) {
      const Eigen::VectorXd norm = raw / total;
      dev = std::max(dev, (norm - expected).cwiseAbs().maxCoeff());
    }
    report.max_deviation = std::max(report.max_deviation, dev);
    if (dev > 1e-12) {
      report.pass = false;
      report.witness = witness_text(t, worth, kt, "dictator=" + std::to_string(d));
      break;
    }
  }
  return report;
}

AxiomReport check_luce_odds(const DistributionProducer& P, double b, int trials,
                            std::uint64_t seed, bool within_size_class) {
  AxiomReport report{within_size_class ? "luce_odds_within_size" : "luce_odds",
                     P.name, true, trials, seed, 0.0, ""};
  for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(trials); ++t) {
    auto rng = rng_for(seed, t);
    const int n = draw_n(rng);
    const PlayerSet players = generic_players(n);
    const Eigen::VectorXd kt = draw_kappa(rng, n, true);
    const CohesionStructure kappa(players, kt);
    for (int i = 0; i < n && report.pass; ++i) {
      const CoalitionDistribution dist = P.eval(kappa, i, b);
      for (Coalition s = 0; s < static_cast<Coalition>(1 << n) && report.pass; ++s) {
        if (contains(s, i)) continue;
        const double ks = kappa(with_player(s, i));
        if (ks == 0.0 && dist.probs[s] != 0.0) {
          report.pass = false;
          report.max_deviation = std::abs(dist.probs[s]);
          report.witness = witness_text(t, Eigen::VectorXd::Zero(1), kt,
                                        "support clause violated at S=" +
                                            std::to_string(s));
          break;
        }
        for (Coalition u = 0; u < static_cast<Coalition>(1 << n); ++u) {
          if (contains(u, i) || u == s) continue;
          if (within_size_class && coalition_size(u) != coalition_size(s)) continue;
          const double ku = kappa(with_player(u, i));
          if (ku == 0.0 || ks == 0.0 || dist.probs[u] <= 0.0) continue;
          const double odds = dist.probs[s] / dist.probs[u];
          const double expected = std::pow(ks / ku, b);
          const double dev = std::abs(odds - expected) / std::max(1.0, expected);
          report.max_deviation = std::max(report.max_deviation, dev);
          if (dev > 1e-9) {
            report.pass = false;
            std::ostringstream extra;
            extra << "player=" << i << "; S=" << s << "; T=" << u
                  << "; odds=" << odds << "; expected=" << expected;
            report.witness = witness_text(t, Eigen::VectorXd::Zero(1), kt, extra.str());
            break;
          }
        }
      }
    }
    if (!report.pass) break;
  }
  return report;
}

AxiomReport check_size_separability(const DistributionProducer& P, double b,
                                    int trials, std::uint64_t seed) {
  AxiomReport report{"size_separability", P.name, true, trials, seed, 0.0, ""};
  for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(trials); ++t) {
    auto rng = rng_for(seed, t);
    const int n = draw_n(rng);
    const PlayerSet players = generic_players(n);
    const Eigen::VectorXd kt = draw_kappa(rng, n, true);
    const CohesionStructure kappa(players, kt);
    const Eigen::VectorXd alpha = shapley_size_weights(n);
    for (int i = 0; i < n && report.pass; ++i) {
      const CoalitionDistribution dist = P.eval(kappa, i, b);
      // One normalizing constant per (i, kappa).
      double c = -1.0;
      for (Coalition s = 0; s < static_cast<Coalition>(1 << n); ++s) {
        if (contains(s, i)) continue;
        const double factor =
            alpha[coalition_size(s)] * cohesion_weight(kappa(with_player(s, i)), b);
        if (factor > 0.0) {
          c = dist.probs[s] / factor;
          break;
        }
      }
      for (Coalition s = 0; s < static_cast<Coalition>(1 << n); ++s) {
        if (contains(s, i)) continue;
        const double factor =
            alpha[coalition_size(s)] * cohesion_weight(kappa(with_player(s, i)), b);
        const double expected = c * factor;
        const double dev =
            std::abs(dist.probs[s] - expected) / std::max(1.0, std::abs(expected));
        report.max_deviation = std::max(report.max_deviation, dev);
        if (dev > 1e-9) {
          report.pass = false;
          report.witness = witness_text(
              t, Eigen::VectorXd::Zero(1), kt,
              "player=" + std::to_string(i) + "; S=" + std::to_string(s));
          break;
        }
      }
    }
    if (!report.pass) break;
  }
  return report;
}

AxiomReport check_benchmark(const ValueFunctional& F, Branch expected, int trials,
                            std::uint64_t seed) {
  AxiomReport report{expected == Branch::banzhaf ? "banzhaf_uniformity"
                                                 : "shapley_calibration",
                     F.name, true, trials, seed, 0.0, ""};
  const double tol = expected == Branch::banzhaf ? 1e-12 : 1e-10;
  for (std::uint64_t t = 0; t < static_cast<std::uint64_t>(trials); ++t) {
    auto rng = rng_for(seed, t);
    const int n = draw_n(rng);
    const PlayerSet players = generic_players(n);
    const Eigen::VectorXd wv = draw_tu_worth(rng, n);
    const Game v(players, wv);
    const CohesionStructure ones = constant_cohesion(players);
    const Eigen::VectorXd got = F.eval(v, ones);
    const Eigen::VectorXd want = expected == Branch::banzhaf
                                     ? classical_banzhaf(v)
                                     : classical_shapley_oracle(v);
    const double dev = (got - want).cwiseAbs().maxCoeff();
    report.max_deviation = std::max(report.max_deviation, dev);
    if (dev > tol) {
      report.pass = false;
      report.witness = witness_text(t, wv, ones.table(), "benchmark mismatch");
      break;
    }
  }
  return report;
}

double kappa_spread(const CohesionStructure& kappa) {
  const Eigen::VectorXd& k = kappa.table();
  const Eigen::Index m = k.size();
  const double sum = k.tail(m - 1).sum();
  const double sumsq = k.tail(m - 1).squaredNorm();
  if (sum == 0.0) return 0.0;
  return sumsq / (sum * sum) - 1.0 / static_cast<double>(m - 1);
}

ValueFunctional countermodel_dummy_perturbation(Branch branch, double b, double c) {
  ValueFunctional f;
  f.name = "countermodel_dummy_perturbation(c=" + std::to_string(c) + ")";
  f.eval = [branch, b, c](const Game& v, const CohesionStructure& kappa) {
    Eigen::VectorXd out = cohesion_value(v, kappa, branch, b).values;
    const double shift =
        c * kappa_spread(kappa) * v.worth(grand_coalition(v.num_players()));
    out.array() += shift;
    return out;
  };
  return f;
}

ValueFunctional countermodel_player_exponents(std::vector<double> exponents) {
  ValueFunctional f;
  f.name = "countermodel_player_exponents";
  f.eval = [exponents](const Game& v, const CohesionStructure& kappa) {
    const int n = v.num_players();
    Eigen::VectorXd out(n);
    for (int i = 0; i < n; ++i) {
      const double bi = exponents[i % exponents.size()];
      const CoalitionDistribution dist = banzhaf_probabilities(kappa, i, bi);
      double acc = 0.0;
      for (Coalition s = 0; s < static_cast<Coalition>(1 << n); ++s) {
        if (contains(s, i)) continue;
        if (dist.probs[s] != 0.0)
          acc += dist.probs[s] * marginal_contribution(v, i, s);
      }
      out[i] = acc;
    }
    return out;
  };
  return f;
}

ValueFunctional countermodel_nonpower_transform() {
  ValueFunctional f;
  f.name = "countermodel_nonpower_transform";
  f.eval = [](const Game& v, const CohesionStructure& kappa) {
    const int n = v.num_players();
    Eigen::VectorXd out(n);
    for (int i = 0; i < n; ++i) {
      double total = 0.0, acc = 0.0;
      for (Coalition s = 0; s < static_cast<Coalition>(1 << n); ++s) {
        if (contains(s, i)) continue;
        const double x = kappa(with_player(s, i));
        const double w = x + x * x;
        total += w;
        acc += w * marginal_contribution(v, i, s);
      }
      if (total <= 0.0)
        throw DegenerateDenominatorError("nonpower transform: zero denominator");
      out[i] = acc / total;
    }
    return out;
  };
  return f;
}

ValueFunctional countermodel_constant_sizeweights(double b) {
  ValueFunctional f;
  f.name = "countermodel_constant_sizeweights";
  f.eval = [b](const Game& v, const CohesionStructure& kappa) {
    const int n = v.num_players();
    const Eigen::VectorXd omega =
        Eigen::VectorXd::Constant(n, std::pow(2.0, -(n - 1)));
    return cohesion_value(v, kappa, Branch::shapley, b, omega).values;
  };
  return f;
}

}  // namespace cohindex
