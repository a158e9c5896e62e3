// Copyright 2026 The IDAK Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "idak/bytes.h"
#include "idak/session_model.h"

namespace idak {

// Scenario files are JSON lines, one query per line. Blank lines and lines
// starting with '#' are skipped. Recognized "q" values:
//   world    {k_bits, mode, pi, strategy, principals}   (must come first)
//   send     {oracle, i?, j?, msg: null | "<hex point>" | "@name.out"}
//   reveal   {oracle}
//   corrupt  {principal}
//   extract  {id}
//   test     {oracle, coin}
//   assert   {check: keys_equal | keys_differ | matching | fresh |
//                    completed | test_equals_key, a?, b?, oracle?, expect?}
// Queries may carry "expect": "ok" or "error:<name>".
struct ScenarioOptions {
  std::optional<SecurityMode> mode_override;
};

struct ScenarioResult {
  bool passed = true;
  nlohmann::json log;
  // "line N: reason" for every failed expectation.
  std::vector<std::string> failures;
};

// Throws kDecode for unparseable lines or unknown queries.
ScenarioResult RunScenario(std::istream& in, ByteView seed,
                           const ScenarioOptions& options = {});

}  // namespace idak
