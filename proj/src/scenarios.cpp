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

#include "cohindex/scenarios.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace cohindex {

using nlohmann::json;

PlayerSet ParliamentSpec::player_set() const {
  std::vector<std::string> labels;
  labels.reserve(parties.size());
  for (const auto& p : parties) labels.push_back(p.label);
  return PlayerSet(std::move(labels));
}

Eigen::VectorXd ParliamentSpec::seats() const {
  Eigen::VectorXd out(static_cast<Eigen::Index>(parties.size()));
  for (std::size_t i = 0; i < parties.size(); ++i)
    out[static_cast<Eigen::Index>(i)] = static_cast<double>(parties[i].seats);
  return out;
}

Eigen::VectorXd ParliamentSpec::positions() const {
  Eigen::VectorXd out(static_cast<Eigen::Index>(parties.size()));
  for (std::size_t i = 0; i < parties.size(); ++i)
    out[static_cast<Eigen::Index>(i)] = parties[i].position;
  return out;
}

std::vector<double> SweepGrid::points() const {
  std::vector<double> out;
  out.reserve(steps);
  if (steps == 1) {
    out.push_back(b_min);
    return out;
  }
  for (int k = 0; k < steps; ++k)
    out.push_back(b_min + (b_max - b_min) * k / (steps - 1));
  return out;
}

const ScenarioSpec& Dataset::scenario(const std::string& name) const {
  for (const auto& s : scenarios)
    if (s.name == name) return s;
  throw SchemaError("scenarios: no scenario named '" + name + "' in dataset '" +
                    parliament.name + "'");
}

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

const json& require_field(const json& node, const char* key,
                          const std::string& path) {
  auto it = node.find(key);
  if (it == node.end()) schema_fail(path + "." + key, "missing field");
  return *it;
}

void validate_parliament(const ParliamentSpec& p, const std::string& path) {
  if (p.parties.size() < 2) schema_fail(path + ".parties", "need at least 2 parties");
  std::set<std::string> seen;
  long total = 0;
  for (std::size_t i = 0; i < p.parties.size(); ++i) {
    const auto& party = p.parties[i];
    const std::string ppath = path + ".parties[" + std::to_string(i) + "]";
    if (party.label.empty()) schema_fail(ppath + ".label", "empty label");
    if (!seen.insert(party.label).second)
      schema_fail(ppath + ".label", "duplicate label '" + party.label + "'");
    if (party.seats < 0) schema_fail(ppath + ".seats", "negative seats");
    total += party.seats;
  }
  if (p.quota <= 0) schema_fail(path + ".quota", "quota must be positive");
  if (total < p.quota)
    schema_fail(path + ".quota", "quota " + std::to_string(p.quota) +
                                     " exceeds total seats " + std::to_string(total));
}

void validate_scenario(const ScenarioSpec& s, const ParliamentSpec& parliament,
                       const std::string& path) {
  if (s.name.empty()) schema_fail(path + ".name", "empty name");
  for (const auto& pariah : s.pariahs) {
    bool known = false;
    for (const auto& party : parliament.parties)
      if (party.label == pariah) known = true;
    if (!known) schema_fail(path + ".pariahs", "unknown party '" + pariah + "'");
  }
  for (const auto& [label, pos] : s.position_overrides) {
    (void)pos;
    bool known = false;
    for (const auto& party : parliament.parties)
      if (party.label == label) known = true;
    if (!known) schema_fail(path + ".overrides", "unknown party '" + label + "'");
  }
  if (s.sweep.b_min < 0.0) schema_fail(path + ".sweep.min", "b_min must be >= 0");
  if (s.sweep.b_max < s.sweep.b_min)
    schema_fail(path + ".sweep.max", "b_max must be >= b_min");
  if (s.sweep.steps < 1) schema_fail(path + ".sweep.steps", "steps must be >= 1");
  if (s.cohesion == CohesionKind::explicit_entries) {
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
      const auto& e = s.entries[i];
      const std::string epath = path + ".cohesion.entries[" + std::to_string(i) + "]";
      if (e.kappa < 0.0) schema_fail(epath + ".kappa", "negative cohesion");
      if (e.labels.empty()) schema_fail(epath + ".coalition", "empty coalition");
      for (const auto& label : e.labels) {
        bool known = false;
        for (const auto& party : parliament.parties)
          if (party.label == label) known = true;
        if (!known) schema_fail(epath + ".coalition", "unknown party '" + label + "'");
      }
    }
  }
}

ParliamentSpec parse_parliament(const json& node, const std::string& path) {
  if (!node.is_object()) schema_fail(path, "expected object");
  ParliamentSpec p;
  p.name = require_field(node, "name", path).get<std::string>();
  p.quota = require_field(node, "quota", path).get<long>();
  if (node.contains("notes")) p.notes = node["notes"].get<std::string>();
  const json& parties = require_field(node, "parties", path);
  if (!parties.is_array()) schema_fail(path + ".parties", "expected array");
  for (std::size_t i = 0; i < parties.size(); ++i) {
    const std::string ppath = path + ".parties[" + std::to_string(i) + "]";
    const json& pj = parties[i];
    PartyEntry e;
    e.label = require_field(pj, "label", ppath).get<std::string>();
    e.seats = require_field(pj, "seats", ppath).get<long>();
    e.position = require_field(pj, "position", ppath).get<double>();
    p.parties.push_back(std::move(e));
  }
  validate_parliament(p, path);
  return p;
}

ScenarioSpec parse_scenario(const json& node, const ParliamentSpec& parliament,
                            const std::string& path) {
  if (!node.is_object()) schema_fail(path, "expected object");
  ScenarioSpec s;
  s.name = require_field(node, "name", path).get<std::string>();
  if (node.contains("branch")) {
    const std::string b = node["branch"].get<std::string>();
    if (b == "banzhaf")
      s.branch = Branch::banzhaf;
    else if (b == "shapley")
      s.branch = Branch::shapley;
    else
      schema_fail(path + ".branch", "expected 'banzhaf' or 'shapley'");
  }
  const json& coh = require_field(node, "cohesion", path);
  const std::string kind = require_field(coh, "type", path + ".cohesion").get<std::string>();
  if (kind == "range") {
    s.cohesion = CohesionKind::range;
  } else if (kind == "explicit") {
    s.cohesion = CohesionKind::explicit_entries;
    const json& entries = require_field(coh, "entries", path + ".cohesion");
    for (const auto& ej : entries) {
      ExplicitEntry e;
      e.labels = require_field(ej, "coalition", path + ".cohesion.entries")
                     .get<std::vector<std::string>>();
      e.kappa = require_field(ej, "kappa", path + ".cohesion.entries").get<double>();
      s.entries.push_back(std::move(e));
    }
  } else {
    schema_fail(path + ".cohesion.type", "expected 'range' or 'explicit'");
  }
  if (node.contains("pariahs"))
    s.pariahs = node["pariahs"].get<std::vector<std::string>>();
  if (node.contains("overrides"))
    for (auto it = node["overrides"].begin(); it != node["overrides"].end(); ++it)
      s.position_overrides[it.key()] = it.value().get<double>();
  if (node.contains("sweep")) {
    const json& sw = node["sweep"];
    s.sweep.b_min = require_field(sw, "min", path + ".sweep").get<double>();
    s.sweep.b_max = require_field(sw, "max", path + ".sweep").get<double>();
    s.sweep.steps = require_field(sw, "steps", path + ".sweep").get<int>();
  }
  validate_scenario(s, parliament, path);
  return s;
}

}  // namespace

Dataset load_dataset(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("document: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_fail("document", "expected object");
  const int version = require_field(doc, "schema_version", "document").get<int>();
  if (version != kSchemaVersion)
    schema_fail("document.schema_version",
                "unsupported version " + std::to_string(version));
  Dataset ds;
  ds.parliament = parse_parliament(require_field(doc, "parliament", "document"),
                                   "document.parliament");
  const json& scenarios = require_field(doc, "scenarios", "document");
  if (!scenarios.is_array()) schema_fail("document.scenarios", "expected array");
  for (std::size_t i = 0; i < scenarios.size(); ++i)
    ds.scenarios.push_back(parse_scenario(
        scenarios[i], ds.parliament, "document.scenarios[" + std::to_string(i) + "]"));
  return ds;
}

Dataset load_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("document: cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_dataset(buf.str());
}

std::string dataset_to_json(const Dataset& dataset) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  json parl;
  parl["name"] = dataset.parliament.name;
  parl["quota"] = dataset.parliament.quota;
  if (!dataset.parliament.notes.empty()) parl["notes"] = dataset.parliament.notes;
  parl["parties"] = json::array();
  for (const auto& p : dataset.parliament.parties)
    parl["parties"].push_back(
        {{"label", p.label}, {"seats", p.seats}, {"position", p.position}});
  doc["parliament"] = parl;
  doc["scenarios"] = json::array();
  for (const auto& s : dataset.scenarios) {
    json sj;
    sj["name"] = s.name;
    sj["branch"] = branch_name(s.branch);
    if (s.cohesion == CohesionKind::range) {
      sj["cohesion"] = {{"type", "range"}};
    } else {
      json entries = json::array();
      for (const auto& e : s.entries)
        entries.push_back({{"coalition", e.labels}, {"kappa", e.kappa}});
      sj["cohesion"] = {{"type", "explicit"}, {"entries", entries}};
    }
    sj["pariahs"] = s.pariahs;
    sj["overrides"] = json::object();
    for (const auto& [label, pos] : s.position_overrides)
      sj["overrides"][label] = pos;
    sj["sweep"] = {{"min", s.sweep.b_min}, {"max", s.sweep.b_max},
                   {"steps", s.sweep.steps}};
    doc["scenarios"].push_back(sj);
  }
  return doc.dump(2);
}

std::string dataset_hash(const Dataset& dataset) {
  const std::string canonical = dataset_to_json(dataset);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace {

Dataset make_apex3() {
  Dataset ds;
  ds.parliament.name = "apex-3";
  ds.parliament.quota = 51;
  ds.parliament.notes =
      "Three-player weighted majority game; every two-player coalition wins.";
  ds.parliament.parties = {{"A", 45, 0.0}, {"B", 35, 0.0}, {"C", 20, 0.0}};
  ScenarioSpec s;
  s.name = "explicit";
  s.branch = Branch::shapley;
  s.cohesion = CohesionKind::explicit_entries;
  s.entries = {{{"A", "B"}, 0.20}, {{"A", "C"}, 0.05}, {{"B", "C"}, 0.9}};
  ds.scenarios.push_back(std::move(s));
  return ds;
}

Dataset make_bundestag2025() {
  Dataset ds;
  ds.parliament.name = "bundestag-2025";
  ds.parliament.quota = 316;
  ds.parliament.notes = "21st German Bundestag, 629 seats across five parties.";
  ds.parliament.parties = {{"CDU/CSU", 208, 6.14},
                           {"AfD", 152, 9.24},
                           {"SPD", 120, 3.62},
                           {"Gruene", 85, 3.24},
                           {"Linke", 64, 1.43}};
  ScenarioSpec a;
  a.name = "A";
  a.cohesion = CohesionKind::range;
  ds.scenarios.push_back(a);
  ScenarioSpec b = a;
  b.name = "B";
  b.pariahs = {"AfD"};
  ds.scenarios.push_back(std::move(b));
  return ds;
}

Dataset make_wende1980() {
  Dataset ds;
  ds.parliament.name = "wende-1980";
  ds.parliament.quota = 249;
  ds.parliament.notes = "9th German Bundestag (1980), 497 seats.";
  ds.parliament.parties = {{"CDU/CSU", 226, 7.0}, {"SPD", 218, 3.0}, {"FDP", 53, 5.5}};
  ScenarioSpec pre;
  pre.name = "pre-1982";
  pre.cohesion = CohesionKind::range;
  ds.scenarios.push_back(pre);
  ScenarioSpec post = pre;
  post.name = "post-1982";
  post.position_overrides = {{"FDP", 6.5}};
  ds.scenarios.push_back(std::move(post));
  return ds;
}

Dataset make_france_bloc() {
  Dataset ds;
  ds.parliament.name = "france-2024-bloc";
  ds.parliament.quota = 289;
  ds.parliament.notes = "17th Assemblee Nationale (2024), bloc model, 577 seats.";
  ds.parliament.parties = {{"NFP", 195, 2.10},
                           {"Ensemble", 162, 6.26},
                           {"LR", 49, 7.88},
                           {"RN", 139, 9.60},
                           {"Others", 32, 5.00}};
  ScenarioSpec a;
  a.name = "A";
  a.cohesion = CohesionKind::range;
  ds.scenarios.push_back(a);
  ScenarioSpec b = a;
  b.name = "B";
  b.pariahs = {"RN"};
  ds.scenarios.push_back(std::move(b));
  ScenarioSpec c = a;
  c.name = "C";
  c.pariahs = {"RN", "NFP"};
  ds.scenarios.push_back(std::move(c));
  return ds;
}

Dataset make_france_party() {
  Dataset ds;
  ds.parliament.name = "france-2024-party";
  ds.parliament.quota = 289;
  ds.parliament.notes = "17th Assemblee Nationale (2024), party model, 577 seats.";
  ds.parliament.parties = {{"LFI", 71, 1.25},
                           {"PS-Verts", 124, 2.59},
                           {"Ensemble", 162, 6.26},
                           {"LR", 49, 7.88},
                           {"RN", 139, 9.60},
                           {"Others", 32, 5.00}};
  ScenarioSpec a;
  a.name = "A";
  a.cohesion = CohesionKind::range;
  ds.scenarios.push_back(a);
  ScenarioSpec b = a;
  b.name = "B";
  b.pariahs = {"RN"};
  ds.scenarios.push_back(std::move(b));
  ScenarioSpec c = a;
  c.name = "C";
  c.pariahs = {"RN", "LFI"};
  ds.scenarios.push_back(std::move(c));
  return ds;
}

}  // namespace

const std::vector<Dataset>& builtin_datasets() {
  static const std::vector<Dataset> datasets = {
      make_apex3(), make_bundestag2025(), make_wende1980(), make_france_bloc(),
      make_france_party()};
  return datasets;
}

const Dataset& builtin_dataset(const std::string& name) {
  for (const auto& ds : builtin_datasets())
    if (ds.parliament.name == name) return ds;
  throw SchemaError("document: no builtin dataset named '" + name + "'");
}

CohesionStructure scenario_cohesion(const ParliamentSpec& parliament,
                                    const ScenarioSpec& scenario) {
  const PlayerSet players = parliament.player_set();
  CohesionStructure kappa = [&]() {
    if (scenario.cohesion == CohesionKind::range) {
      Eigen::VectorXd positions = parliament.positions();
      for (const auto& [label, pos] : scenario.position_overrides)
        positions[players.index_of(label)] = pos;
      return range_cohesion(players, positions);
    }
    std::vector<std::pair<Coalition, double>> entries;
    for (const auto& e : scenario.entries) {
      Coalition mask = kEmptyCoalition;
      for (const auto& label : e.labels)
        mask = with_player(mask, players.index_of(label));
      entries.emplace_back(mask, e.kappa);
    }
    return explicit_cohesion(players, entries, DefaultRule::singletons_one);
  }();
  if (!scenario.pariahs.empty()) {
    Coalition pariahs = kEmptyCoalition;
    for (const auto& label : scenario.pariahs)
      pariahs = with_player(pariahs, players.index_of(label));
    kappa = apply_cordon(kappa, pariahs);
  }
  return kappa;
}

PowerProfile run_scenario(const ParliamentSpec& parliament,
                          const ScenarioSpec& scenario, double b) {
  const PlayerSet players = parliament.player_set();
  const SimpleGame game = build_weighted_majority(
      players, parliament.seats(), static_cast<double>(parliament.quota));
  const CohesionStructure kappa = scenario_cohesion(parliament, scenario);
  const PowerProfile raw = cohesion_value(game.game(), kappa, scenario.branch, b);
  return normalize_index(raw, game.game().worth(grand_coalition(players.size())));
}

SweepResult sweep_exponent(const ParliamentSpec& parliament,
                           const ScenarioSpec& scenario) {
  SweepResult result;
  result.scenario = scenario.name;
  Dataset ds;
  ds.parliament = parliament;
  ds.scenarios = {scenario};
  result.dataset_hash = dataset_hash(ds);
  const PlayerSet players = parliament.player_set();
  for (double b : scenario.sweep.points()) {
    const PowerProfile profile = run_scenario(parliament, scenario, b);
    for (int i = 0; i < players.size(); ++i)
      result.rows.push_back({b, players.label(i), profile.values[i], scenario.branch});
  }
  return result;
}

}  // namespace cohindex
