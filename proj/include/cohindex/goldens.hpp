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

#ifndef COHINDEX_GOLDENS_HPP
#define COHINDEX_GOLDENS_HPP

#include <string>
#include <vector>

namespace cohindex {

/// One published reference value (or qualitative curve claim) recomputed from
/// the bundled datasets.
struct GoldenClaim {
  std::string id;       // e.g. "table1/pre-1982/FDP"
  std::string group;    // "table1", "bundestag", "france", "curves"
  bool pass = false;
  std::string detail;   // observed vs expected vs tolerance
};

/// Recompute every golden claim whose id contains `filter` (all when empty).
std::vector<GoldenClaim> run_golden_claims(const std::string& filter = "");

}  // namespace cohindex

#endif  // COHINDEX_GOLDENS_HPP
