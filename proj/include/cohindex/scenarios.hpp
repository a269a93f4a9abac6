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

#ifndef COHINDEX_SCENARIOS_HPP
#define COHINDEX_SCENARIOS_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohindex/coalition.hpp"
#include "cohindex/cohesion.hpp"
#include "cohindex/values.hpp"

namespace cohindex {

inline constexpr int kSchemaVersion = 1;

/// Thrown on malformed scenario documents; carries the offending field path.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PartyEntry {
  std::string label;
  long seats = 0;
  double position = 0.0;
};

struct ParliamentSpec {
  std::string name;
  std::vector<PartyEntry> parties;
  long quota = 0;
  std::string notes;

  PlayerSet player_set() const;
  Eigen::VectorXd seats() const;
  Eigen::VectorXd positions() const;
};

enum class CohesionKind { range, explicit_entries };

struct ExplicitEntry {
  std::vector<std::string> labels;
  double kappa = 0.0;
};

struct SweepGrid {
  double b_min = 0.0;
  double b_max = 3.0;
  int steps = 61;

  std::vector<double> points() const;
};

struct ScenarioSpec {
  std::string name;
  Branch branch = Branch::shapley;
  CohesionKind cohesion = CohesionKind::range;
  std::vector<ExplicitEntry> entries;  // used when cohesion == explicit_entries
  std::vector<std::string> pariahs;
  std::map<std::string, double> position_overrides;
  SweepGrid sweep;
};

struct Dataset {
  ParliamentSpec parliament;
  std::vector<ScenarioSpec> scenarios;

  const ScenarioSpec& scenario(const std::string& name) const;
};

struct SweepRow {
  double b;
  std::string party;
  double value;
  Branch branch;
};

struct SweepResult {
  std::string scenario;
  std::string dataset_hash;
  std::vector<SweepRow> rows;
};

/// Parse a scenario document (JSON text). Schema violations raise SchemaError
/// with the field path; quota above the seat total is rejected.
Dataset load_dataset(const std::string& json_text);
Dataset load_dataset_file(const std::string& path);

std::string dataset_to_json(const Dataset& dataset);

/// The bundled datasets: apex-3, bundestag-2025, wende-1980,
/// france-2024-bloc, france-2024-party.
const std::vector<Dataset>& builtin_datasets();
const Dataset& builtin_dataset(const std::string& name);

/// Game + cohesion for one scenario at one exponent, normalized. A cordon
/// that leaves no feasible winning coalition yields the all-zero profile.
PowerProfile run_scenario(const ParliamentSpec& parliament,
                          const ScenarioSpec& scenario, double b);

/// Cohesion structure a scenario induces (range or explicit, cordon applied).
CohesionStructure scenario_cohesion(const ParliamentSpec& parliament,
                                    const ScenarioSpec& scenario);

SweepResult sweep_exponent(const ParliamentSpec& parliament,
                           const ScenarioSpec& scenario);

/// FNV-1a hash of the canonical document serialization, hex-rendered.
std::string dataset_hash(const Dataset& dataset);

}  // namespace cohindex

#endif  // COHINDEX_SCENARIOS_HPP
