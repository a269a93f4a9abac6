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

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cohindex/axioms.hpp"
#include "cohindex/goldens.hpp"
#include "cohindex/scenarios.hpp"

namespace {

using namespace cohindex;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

std::string format_value(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

double round6(double x) { return std::stod(format_value(x)); }

Dataset resolve_dataset(const std::string& data) {
  constexpr const char* kBuiltinPrefix = "builtin:";
  if (data.rfind(kBuiltinPrefix, 0) == 0)
    return builtin_dataset(data.substr(std::string(kBuiltinPrefix).size()));
  return load_dataset_file(data);
}

struct TableRow {
  std::string scenario;
  Branch branch;
  double b;
  std::string party;
  double value;
};

struct OutputTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<TableRow> rows;
};

std::string render_csv(const OutputTable& table) {
  std::string out;
  for (const auto& [key, value] : table.metadata)
    out += "# " + key + ": " + value + "\n";
  out += "scenario,branch,b,party,value\n";
  for (const auto& row : table.rows)
    out += row.scenario + "," + branch_name(row.branch) + "," +
           format_value(row.b) + "," + row.party + "," + format_value(row.value) +
           "\n";
  return out;
}

std::string render_json(const OutputTable& table) {
  nlohmann::ordered_json doc;
  for (const auto& [key, value] : table.metadata) doc["metadata"][key] = value;
  doc["columns"] = {"scenario", "branch", "b", "party", "value"};
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows)
    doc["rows"].push_back({{"scenario", row.scenario},
                           {"branch", branch_name(row.branch)},
                           {"b", round6(row.b)},
                           {"party", row.party},
                           {"value", round6(row.value)}});
  return doc.dump(2) + "\n";
}

void emit(const OutputTable& table, const std::string& format,
          const std::string& out_path) {
  const std::string text = format == "json" ? render_json(table) : render_csv(table);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
    out << text;
  }
}

OutputTable profile_table(const Dataset& ds, const ScenarioSpec& scenario,
                          double b) {
  OutputTable table;
  const PowerProfile profile = run_scenario(ds.parliament, scenario, b);
  table.metadata = {{"dataset", ds.parliament.name},
                    {"schema_version", std::to_string(kSchemaVersion)},
                    {"hash", dataset_hash(ds)}};
  if (profile.values.cwiseAbs().maxCoeff() == 0.0)
    table.metadata.emplace_back("note", "no feasible winning coalition (zero-sum fallback)");
  if (profile.underflow)
    table.metadata.emplace_back("warning", "cohesion weights underflowed at this exponent");
  const PlayerSet players = ds.parliament.player_set();
  for (int i = 0; i < players.size(); ++i)
    table.rows.push_back(
        {scenario.name, scenario.branch, b, players.label(i), profile.values[i]});
  return table;
}

int cmd_compute(const std::string& data, const std::string& scenario_name, double b,
                const std::string& branch_override, const std::string& format,
                const std::string& out_path) {
  const Dataset ds = resolve_dataset(data);
  ScenarioSpec scenario = ds.scenario(scenario_name);
  if (!branch_override.empty())
    scenario.branch = branch_override == "banzhaf" ? Branch::banzhaf : Branch::shapley;
  emit(profile_table(ds, scenario, b), format, out_path);
  return kExitOk;
}

int cmd_sweep(const std::string& data, const std::string& scenario_name,
              std::optional<double> bmin, std::optional<double> bmax,
              std::optional<int> steps, const std::string& branch_override,
              const std::string& format, const std::string& out_path) {
  const Dataset ds = resolve_dataset(data);
  ScenarioSpec scenario = ds.scenario(scenario_name);
  if (!branch_override.empty())
    scenario.branch = branch_override == "banzhaf" ? Branch::banzhaf : Branch::shapley;
  if (bmin) scenario.sweep.b_min = *bmin;
  if (bmax) scenario.sweep.b_max = *bmax;
  if (steps) scenario.sweep.steps = *steps;
  if (scenario.sweep.steps < 1 || scenario.sweep.b_min < 0.0 ||
      scenario.sweep.b_max < scenario.sweep.b_min)
    throw SchemaError("sweep: invalid grid");
  const SweepResult result = sweep_exponent(ds.parliament, scenario);
  OutputTable table;
  table.metadata = {{"dataset", ds.parliament.name},
                    {"schema_version", std::to_string(kSchemaVersion)},
                    {"hash", result.dataset_hash}};
  for (const auto& row : result.rows)
    table.rows.push_back({result.scenario, row.branch, row.b, row.party, row.value});
  emit(table, format, out_path);
  return kExitOk;
}

int cmd_reproduce(const std::string& filter) {
  const std::vector<GoldenClaim> claims = run_golden_claims(filter);
  if (claims.empty()) {
    std::cerr << "reproduce: no claims match filter '" << filter << "'\n";
    return kExitUsage;
  }
  int failures = 0;
  for (const auto& claim : claims) {
    std::cout << (claim.pass ? "PASS" : "FAIL") << "  " << claim.id << "  ("
              << claim.detail << ")\n";
    if (!claim.pass) ++failures;
  }
  std::cout << claims.size() - failures << "/" << claims.size()
            << " golden claims pass\n";
  return failures == 0 ? kExitOk : kExitMismatch;
}

struct AxiomRun {
  bool unexpected = false;

  void expect(const AxiomReport& report, bool should_pass) {
    std::cout << to_text(report);
    if (report.pass != should_pass) {
      unexpected = true;
      std::cout << "UNEXPECTED: wanted "
                << (should_pass ? "pass" : "fail (countermodel target)") << "\n";
    }
    std::cout << "\n";
  }
};

int cmd_check_axioms(const std::string& branch_filter, int trials,
                     std::uint64_t seed, bool countermodels) {
  AxiomRun run;
  std::vector<Branch> branches;
  if (branch_filter.empty() || branch_filter == "banzhaf")
    branches.push_back(Branch::banzhaf);
  if (branch_filter.empty() || branch_filter == "shapley")
    branches.push_back(Branch::shapley);

  for (Branch branch : branches) {
    for (double b : {0.5, 1.0, 2.0}) {
      const ValueFunctional F = make_cohesion_functional(branch, b);
      run.expect(check_linearity(F, trials, seed), true);
      run.expect(check_dummy(F, trials, seed), true);
      run.expect(check_symmetry(F, trials, seed), true);
      run.expect(check_scale_invariance(F, trials, seed), true);
      run.expect(check_cohesion_monotonicity(F, trials, seed), true);
      run.expect(check_dictatorship_invariance(F, trials, seed), true);
      run.expect(check_benchmark(F, branch, trials, seed), true);
      const DistributionProducer P = make_distribution_producer(branch);
      if (branch == Branch::banzhaf) {
        run.expect(check_luce_odds(P, b, trials, seed), true);
      } else {
        run.expect(check_luce_odds(P, b, trials, seed, /*within_size_class=*/true),
                   true);
        run.expect(check_size_separability(P, b, trials, seed), true);
      }
    }
  }

  if (countermodels) {
    const ValueFunctional cm1 =
        countermodel_dummy_perturbation(Branch::shapley, 1.0, 0.5);
    run.expect(check_dummy(cm1, trials, seed), false);
    run.expect(check_linearity(cm1, trials, seed), true);
    run.expect(check_symmetry(cm1, trials, seed), true);
    run.expect(check_scale_invariance(cm1, trials, seed), true);
    run.expect(check_benchmark(cm1, Branch::shapley, trials, seed), true);

    const ValueFunctional cm2 =
        countermodel_player_exponents({1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
    run.expect(check_symmetry(cm2, trials, seed), false);
    run.expect(check_linearity(cm2, trials, seed), true);
    run.expect(check_dummy(cm2, trials, seed), true);

    const ValueFunctional cm3 = countermodel_nonpower_transform();
    run.expect(check_scale_invariance(cm3, trials, seed), false);
    run.expect(check_linearity(cm3, trials, seed), true);
    run.expect(check_dummy(cm3, trials, seed), true);
    run.expect(check_symmetry(cm3, trials, seed), true);

    const ValueFunctional cm4 = countermodel_constant_sizeweights(1.0);
    run.expect(check_benchmark(cm4, Branch::shapley, trials, seed), false);
    run.expect(check_benchmark(cm4, Branch::banzhaf, trials, seed), true);
    run.expect(check_linearity(cm4, trials, seed), true);
    run.expect(check_dummy(cm4, trials, seed), true);
    run.expect(check_symmetry(cm4, trials, seed), true);
    run.expect(check_scale_invariance(cm4, trials, seed), true);
  }

  std::cout << (run.unexpected ? "verdict: UNEXPECTED RESULTS\n" : "verdict: ok\n");
  return run.unexpected ? kExitMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohesion-sensitive Banzhaf and Shapley power indices"};
  app.require_subcommand(1);

  std::string data, scenario_name, branch_override, format = "csv", out_path;
  double b_value = 1.0;

  auto* compute = app.add_subcommand("compute", "Power profile at one exponent");
  compute->add_option("--data", data, "Scenario document path or builtin:NAME")
      ->required();
  compute->add_option("--scenario", scenario_name, "Scenario name")->required();
  compute->add_option("--b", b_value, "Cohesion exponent")->check(CLI::NonNegativeNumber);
  compute->add_option("--branch", branch_override, "Override the scenario branch")
      ->check(CLI::IsMember({"banzhaf", "shapley"}));
  compute->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  compute->add_option("--out", out_path, "Output file (default: stdout)");

  std::optional<double> bmin, bmax;
  std::optional<int> steps;
  auto* sweep = app.add_subcommand("sweep", "Exponent sweep (long-format table)");
  sweep->add_option("--data", data, "Scenario document path or builtin:NAME")
      ->required();
  sweep->add_option("--scenario", scenario_name, "Scenario name")->required();
  sweep->add_option("--bmin", bmin, "Grid start");
  sweep->add_option("--bmax", bmax, "Grid end");
  sweep->add_option("--steps", steps, "Grid points");
  sweep->add_option("--branch", branch_override, "Override the scenario branch")
      ->check(CLI::IsMember({"banzhaf", "shapley"}));
  sweep->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", out_path, "Output file (default: stdout)");

  std::string filter;
  auto* reproduce = app.add_subcommand(
      "reproduce", "Re-verify the bundled reference values");
  reproduce->add_option("--filter", filter, "Run only claims whose id contains this");

  std::string axiom_branch;
  int trials = 200;
  std::uint64_t seed = 20250301;
  bool countermodels = false;
  auto* axioms = app.add_subcommand("check-axioms", "Run the axiom property suite");
  axioms->add_option("--branch", axiom_branch, "Restrict to one branch")
      ->check(CLI::IsMember({"banzhaf", "shapley"}));
  axioms->add_option("--trials", trials, "Randomized trials per axiom")
      ->check(CLI::PositiveNumber);
  axioms->add_option("--seed", seed, "Base random seed");
  axioms->add_flag("--countermodels", countermodels,
                   "Also run the failing countermodels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (compute->parsed())
      return cmd_compute(data, scenario_name, b_value, branch_override, format,
                         out_path);
    if (sweep->parsed())
      return cmd_sweep(data, scenario_name, bmin, bmax, steps, branch_override,
                       format, out_path);
    if (reproduce->parsed()) return cmd_reproduce(filter);
    if (axioms->parsed())
      return cmd_check_axioms(axiom_branch, trials, seed, countermodels);
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}
