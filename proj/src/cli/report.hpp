// Copyright 2026 The divopt Authors.
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

#include <chrono>
#include <string>

#include "json.hpp"

#include "divopt/bco_engine.hpp"
#include "divopt/rational.hpp"

namespace divopt::cli {

using Json = nlohmann::ordered_json;

Json subset_ids(const EdgeSubset& subset);

// Common fields of a diverse-solution report, up to and including `seed`.
Json run_report(const std::string& problem, int n, int m, int k, const Rational& c,
                const DiverseRunReport& report);

Json error_report(const std::string& kind, const std::string& message);

// Appends warnings (if any), runtime_ms and timestamp.
void finish_report(Json& report, std::chrono::steady_clock::time_point started,
                   const std::vector<std::string>& warnings = {});

}  // namespace divopt::cli
