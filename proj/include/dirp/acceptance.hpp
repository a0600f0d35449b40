// Copyright 2026 The dirp Authors
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

// The acceptance suite: one check per reference value or
// property, each with a pass/fail flag and the data it was decided on.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dirp/config.hpp"
#include "dirp/serialize.hpp"

namespace dirp {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  Json data;
};

struct SuiteOutput {
  std::vector<CriterionResult> results;
  /// Extra artifacts by file name (CSV tables).
  std::map<std::string, std::string> files;
};

/// Criteria 1 to 13. `on_result` (optional) sees each result as it finishes.
SuiteOutput run_acceptance(const RunConfig& config,
                           const std::function<void(const CriterionResult&)>& on_result = {});

/// Criterion 14: compares two sets of artifacts byte for byte.
CriterionResult determinism_result(const std::map<std::string, std::string>& first,
                                   const std::map<std::string, std::string>& second);

/// The artifacts `dirp report` writes: report.json plus the CSV tables.
/// Timing is left out so that identical runs give identical bytes.
std::map<std::string, std::string> report_artifacts(const RunConfig& config, const SuiteOutput& suite,
                                                    const CriterionResult* determinism);

/// "[PASS] 1 Fibonacci sharpness: detail"
std::string format_line(const CriterionResult& r);

}  // namespace dirp
