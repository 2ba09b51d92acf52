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

#include "report.hpp"

#include <ctime>

namespace divopt::cli {

Json subset_ids(const EdgeSubset& subset) {
  Json ids = Json::array();
  for (EdgeId e : subset.ids()) ids.push_back(e);
  return ids;
}

Json run_report(const std::string& problem, int n, int m, int k, const Rational& c,
                const DiverseRunReport& report) {
  Json j;
  j["problem"] = problem;
  j["n"] = n;
  j["m"] = m;
  j["k"] = k;
  j["c"] = to_string(c);
  j["guarantee"] = {{"alpha", to_string(report.guarantee.alpha)},
                    {"beta", to_string(report.guarantee.beta)},
                    {"type", report.guarantee.type}};
  j["diversity"] = report.diversity;
  Json solutions = Json::array();
  for (const EdgeSubset& y : report.solutions) solutions.push_back(subset_ids(y));
  j["solutions"] = std::move(solutions);
  j["pairwise"] = report.pairwise;
  Json trace = Json::array();
  for (std::size_t i = 0; i < report.trace.size(); ++i) {
    const IterationTrace& step = report.trace[i];
    trace.push_back({{"iteration", i + 1},
                     {"chosen", subset_ids(step.chosen)},
                     {"occurrence_cost", step.occurrence_cost},
                     {"farness", step.farness},
                     {"candidates_popped", step.candidates_popped},
                     {"solver_calls", step.solver_calls}});
  }
  j["trace"] = std::move(trace);
  j["seed"] = report.seed;
  if (report.type5) {
    j["type5_condition"] = {{"epsilon", to_string(report.type5->epsilon)},
                            {"diameter", report.type5->diameter},
                            {"threshold", to_string(report.type5->threshold)}};
  }
  return j;
}

Json error_report(const std::string& kind, const std::string& message) {
  return Json{{"error", {{"kind", kind}, {"message", message}}}};
}

void finish_report(Json& report, std::chrono::steady_clock::time_point started,
                   const std::vector<std::string>& warnings) {
  if (!warnings.empty()) report["warnings"] = warnings;
  const auto elapsed = std::chrono::steady_clock::now() - started;
  report["runtime_ms"] =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  report["timestamp"] = buffer;
}

}  // namespace divopt::cli
