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

// aosbenders: alternative optimal solutions for two-stage problems solved by
// Benders decomposition.
//
//   aosbenders farmer --scenarios 3 --tol rel:0.01 --k 50
//   aosbenders mxsp --budget 2 --tol abs:0 --stage second
//   aosbenders solve problem.json --format csv --out certified.csv
//   aosbenders export abs-value --out abs_value.json
//
// Exit codes: 0 success, 2 non-convergence or solver failure, 3 input
// error, 4 violated model assumption.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "aos/errors.hpp"
#include "aos/io.hpp"
#include "aos/models.hpp"
#include "aos/oracle.hpp"
#include "aos/pipeline.hpp"
#include "aos/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNonConvergence = 2;
constexpr int kExitInput = 3;
constexpr int kExitAssumption = 4;

struct CommonFlags {
  std::string tol = "abs:0";
  int k = 10;
  std::string stage = "first";
  std::string format = "json";
  std::string out;
  double benders_tol = 1e-6;
  int iter_limit = 500;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--tol", f.tol, "Optimality tolerance, abs:<eps> or rel:<alpha>")
      ->capture_default_str();
  cmd->add_option("--k", f.k, "Enumeration limit K")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--stage", f.stage, "first, second or ef")
      ->check(CLI::IsMember({"first", "second", "ef"}))
      ->capture_default_str();
  cmd->add_option("--format", f.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", f.out, "Write the report here instead of stdout");
  cmd->add_option("--benders-tol", f.benders_tol, "Benders convergence tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--iter-limit", f.iter_limit, "Benders iteration limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(out);
  if (!f) throw aos::InputError(out + ": cannot open for writing");
  f << text;
  if (!f) throw aos::InputError(out + ": write failed");
}

int run(const aos::LoadedProblem& loaded, const CommonFlags& f,
        const std::string& command) {
  aos::RunOptions opts;
  opts.command = command;
  opts.tolerance = aos::ToleranceSpec::parse(f.tol);
  opts.k_limit = f.k;
  opts.stage = aos::parse_stage(f.stage);
  opts.benders_tol = f.benders_tol;
  opts.iter_limit = f.iter_limit;
  const aos::Json report = aos::run_report(loaded, opts);
  emit(f.format == "csv" ? aos::certified_csv(report) : aos::dump_report(report),
       f.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternative optimal solutions via Benders decomposition"};
  app.require_subcommand(1);

  CommonFlags farmer_flags;
  int scenarios = 1;
  std::string farmer_config_path;
  CLI::App* farmer = app.add_subcommand("farmer", "Farmer crop-allocation problem");
  farmer->add_option("--scenarios", scenarios, "1 (mean yields) or 3 (+-20%)")
      ->check(CLI::IsMember({1, 3}))
      ->capture_default_str();
  farmer->add_option("--config", farmer_config_path,
                     "Farmer configuration JSON (overrides --scenarios)");
  add_common(farmer, farmer_flags);

  CommonFlags mxsp_flags;
  double budget = 1.0;
  std::string graph_path;
  CLI::App* mxsp = app.add_subcommand("mxsp", "Shortest-path interdiction");
  CLI::Option* budget_opt =
      mxsp->add_option("--budget", budget, "Interdiction budget m")
          ->check(CLI::NonNegativeNumber)
          ->capture_default_str();
  mxsp->add_option("--graph", graph_path,
                   "Graph JSON (default: the bundled 8-node reference graph)");
  add_common(mxsp, mxsp_flags);

  CommonFlags solve_flags;
  std::string problem_path;
  CLI::App* solve = app.add_subcommand(
      "solve", "Run the pipeline on a problem, graph or farmer JSON file");
  solve->add_option("file", problem_path, "Problem file")->required();
  add_common(solve, solve_flags);

  std::string export_name;
  std::string export_out;
  double export_budget = 1.0;
  CLI::App* exporter =
      app.add_subcommand("export", "Write a bundled instance as problem JSON");
  exporter->add_option("name", export_name, "farmer1, farmer3, mxsp or abs-value")
      ->required()
      ->check(CLI::IsMember({"farmer1", "farmer3", "mxsp", "abs-value"}));
  exporter->add_option("--budget", export_budget, "Budget for mxsp")
      ->check(CLI::NonNegativeNumber);
  exporter->add_option("--out", export_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*farmer) {
      aos::LoadedProblem lp;
      lp.kind = aos::LoadedProblem::Kind::kFarmer;
      lp.farmer = farmer_config_path.empty()
                      ? aos::farmer_config(scenarios)
                      : aos::farmer_from_json(aos::read_json_file(farmer_config_path));
      lp.problem = aos::build_farmer(*lp.farmer);
      return run(lp, farmer_flags, "farmer");
    }
    if (*mxsp) {
      aos::LoadedProblem lp;
      lp.kind = aos::LoadedProblem::Kind::kGraph;
      lp.graph = graph_path.empty()
                     ? aos::reference_graph(budget)
                     : aos::graph_from_json(aos::read_json_file(graph_path));
      if (!graph_path.empty() && budget_opt->count() > 0) lp.graph->budget = budget;
      lp.problem = aos::build_mxsp(*lp.graph);
      return run(lp, mxsp_flags, "mxsp");
    }
    if (*solve) {
      const aos::LoadedProblem lp =
          aos::load_problem(aos::read_json_file(problem_path));
      return run(lp, solve_flags, "solve");
    }
    if (*exporter) {
      aos::TwoStageProblem p;
      if (export_name == "farmer1") {
        p = aos::build_farmer(aos::farmer_config(1));
      } else if (export_name == "farmer3") {
        p = aos::build_farmer(aos::farmer_config(3));
      } else if (export_name == "mxsp") {
        p = aos::build_mxsp(aos::reference_graph(export_budget));
      } else {
        p = aos::counterexample_absQ().problem;
      }
      emit(aos::problem_to_json(p).dump(2) + "\n", export_out);
      return kExitOk;
    }
  } catch (const aos::NonConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    const aos::BendersResult& part = e.partial();
    if (!part.trace.empty()) {
      const aos::IterationRecord& last = part.trace.back();
      std::cerr << "last iterate: lower bound " << last.master_objective
                << ", upper bound " << last.upper_bound << ", gap " << last.gap
                << "\n";
    }
    return kExitNonConvergence;
  } catch (const aos::SolverError& e) {
    std::cerr << "error: solver failure: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const aos::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const aos::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const aos::ModelError& e) {
    std::cerr << "error: assumption violated: " << e.what() << "\n";
    return kExitAssumption;
  }
  return kExitOk;
}
