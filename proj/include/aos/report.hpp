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

// End-to-end runs and their machine-readable reports (schemas/report.schema.json).

#ifndef AOS_REPORT_HPP_
#define AOS_REPORT_HPP_

#include <string>

#include "aos/io.hpp"
#include "aos/pipeline.hpp"

namespace aos {

enum class Stage { kFirst, kSecond, kEf };

Stage parse_stage(const std::string& text);
std::string to_string(Stage stage);

struct RunOptions {
  std::string command = "solve";
  ToleranceSpec tolerance;
  int k_limit = 10;
  Stage stage = Stage::kFirst;
  double benders_tol = 1e-6;
  int iter_limit = 500;
};

// Runs the pipeline and builds the report. Objectives of interdiction
// problems are reported as nonnegative path costs (the negated internal
// value); "objective_scale" records the factor. Throws NonConvergenceError,
// InputError or ModelError like the underlying operations.
Json run_report(const LoadedProblem& loaded, const RunOptions& options);

// One row per certified or rejected point: set,index,true_objective,x...
std::string certified_csv(const Json& report);

// Serializes with stable key order and two-space indentation.
std::string dump_report(const Json& report);

}  // namespace aos

#endif  // AOS_REPORT_HPP_
