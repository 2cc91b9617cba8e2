// Copyright 2026 The aosbenders Authors
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

// JSON ingestion and export for problems, graphs and farmer configurations.
// Schema violations raise InputError naming the offending field path, for
// example "scenarios[0].W[2]: expected 6 entries, got 5".

#ifndef AOS_IO_HPP_
#define AOS_IO_HPP_

#include <optional>
#include <string>

#include "json.hpp"

#include "aos/models.hpp"
#include "aos/two_stage.hpp"

namespace aos {

using Json = nlohmann::ordered_json;

TwoStageProblem problem_from_json(const Json& j);
Json problem_to_json(const TwoStageProblem& p);

InterdictionGraph graph_from_json(const Json& j);
Json graph_to_json(const InterdictionGraph& g);

FarmerConfig farmer_from_json(const Json& j);
Json farmer_to_json(const FarmerConfig& cfg);

struct LoadedProblem {
  enum class Kind { kTwoStage, kGraph, kFarmer };
  Kind kind = Kind::kTwoStage;
  TwoStageProblem problem;
  std::optional<InterdictionGraph> graph;
  std::optional<FarmerConfig> farmer;
};

// Detects the document kind: "arcs" means a graph, "mean_yields" or
// "plant_costs" a farmer configuration, anything else a two-stage problem.
LoadedProblem load_problem(const Json& j);

// Reads and parses a file; parse failures become InputError.
Json read_json_file(const std::string& path);

// Rounds to 10 significant digits, the precision used in every report.
double round10(double v);

}  // namespace aos

#endif  // AOS_IO_HPP_
