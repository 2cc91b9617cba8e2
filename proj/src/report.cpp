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

#include "aos/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "aos/errors.hpp"
#include "aos/models.hpp"

namespace aos {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return round10(
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
}

Json num(double v) { return round10(v); }

// Entries below 1e-10 of the largest magnitude are round-off and print as 0.
Json vec(const Eigen::VectorXd& v) {
  const double floor = v.size() > 0 ? 1e-10 * v.cwiseAbs().maxCoeff() : 0.0;
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(std::abs(v(i)) <= floor ? 0.0 : round10(v(i)));
  }
  return out;
}

std::string kind_name(LoadedProblem::Kind k) {
  switch (k) {
    case LoadedProblem::Kind::kGraph:
      return "interdiction";
    case LoadedProblem::Kind::kFarmer:
      return "farmer";
    case LoadedProblem::Kind::kTwoStage:
      return "two_stage";
  }
  return "two_stage";
}

std::string fmt10(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", round10(v));
  return buf;
}

}  // namespace

Stage parse_stage(const std::string& text) {
  if (text == "first") return Stage::kFirst;
  if (text == "second") return Stage::kSecond;
  if (text == "ef") return Stage::kEf;
  throw InputError("stage '" + text + "' must be first, second or ef");
}

std::string to_string(Stage stage) {
  switch (stage) {
    case Stage::kFirst:
      return "first";
    case Stage::kSecond:
      return "second";
    case Stage::kEf:
      return "ef";
  }
  return "first";
}

Json run_report(const LoadedProblem& loaded, const RunOptions& options) {
  const TwoStageProblem& p = loaded.problem;
  const bool graph = loaded.kind == LoadedProblem::Kind::kGraph;
  const double scale = graph ? -1.0 : 1.0;
  const auto t_start = Clock::now();

  AosOptions aos;
  aos.tolerance = options.tolerance;
  aos.k_limit = options.k_limit;
  aos.benders.tol = options.benders_tol;
  aos.benders.iter_limit = options.iter_limit;

  Json timing;
  auto t0 = Clock::now();
  AosResult res;
  {
    // Step 1 alone, so the timing block can split the phases.
    res.benders = solve_benders(p, aos.benders);
    timing["benders_ms"] = ms_since(t0);
    if (!res.benders.converged) {
      std::string why = "Benders did not converge after " +
                        std::to_string(res.benders.iterations) + " iterations";
      if (!res.benders.events.empty()) why += ": " + res.benders.events.back();
      throw NonConvergenceError(why, std::move(res.benders));
    }
    t0 = Clock::now();
    const double tau = options.tolerance.resolve(res.benders.z_star);
    res.certified =
        enumerate_and_certify(p, res.benders.cut_pool, tau, options.k_limit);
    timing["enumerate_and_certify_ms"] = ms_since(t0);
  }
  const BendersResult& b = res.benders;
  const CertifiedSet& cs = res.certified;

  Json report;
  report["format"] = "aosbenders.report/1";
  report["command"] = options.command;

  Json problem;
  problem["name"] = p.name;
  problem["kind"] = kind_name(loaded.kind);
  problem["num_x"] = p.num_x();
  problem["num_scenarios"] = static_cast<int>(p.scenarios.size());
  problem["cut_form"] = std::string(to_string(p.cut_form));
  Json labels = Json::array();
  for (int j = 0; j < p.num_x(); ++j) {
    labels.push_back(j < static_cast<int>(p.x_labels.size())
                         ? p.x_labels[j]
                         : "x" + std::to_string(j + 1));
  }
  problem["labels"] = labels;
  if (graph) problem["budget"] = num(loaded.graph->budget);
  report["problem"] = std::move(problem);
  report["objective_scale"] = scale;

  Json trace = Json::array();
  for (const IterationRecord& r : b.trace) {
    trace.push_back({{"iteration", r.iteration},
                     {"lower_bound", num(scale * r.master_objective)},
                     {"theta", num(scale * r.theta)},
                     {"q_value", num(scale * r.q_value)},
                     {"upper_bound", num(scale * r.upper_bound)},
                     {"gap", num(r.gap)},
                     {"cut_added", r.cut_added}});
  }
  report["benders"] = {{"converged", b.converged},
                       {"iterations", b.iterations},
                       {"cuts", static_cast<int>(b.cut_pool.size())},
                       {"z_star", num(scale * b.z_star)},
                       {"x_star", vec(b.x_star)},
                       {"events", b.events},
                       {"trace", std::move(trace)}};
  report["tolerance"] = {{"spec", options.tolerance.to_string()},
                         {"tau", num(scale * cs.tau)},
                         {"k_limit", options.k_limit}};

  auto point_json = [&](int index, const CertifiedPoint& cp) {
    Json j;
    j["index"] = index;
    j["x"] = vec(cp.x);
    j["master_objective"] = num(scale * cp.master_objective);
    j["true_objective"] = num(scale * cp.true_objective);
    j["accepted"] = cp.accepted;
    if (graph) j["interdicted"] = interdicted_arcs(*loaded.graph, cp.x);
    return j;
  };
  Json candidates = Json::array();
  Json accepted = Json::array();
  Json rejected = Json::array();
  std::vector<int> accepted_index;
  for (std::size_t i = 0; i < cs.candidates.size(); ++i) {
    const Json j = point_json(static_cast<int>(i), cs.candidates[i]);
    candidates.push_back(j);
    if (cs.candidates[i].accepted) {
      accepted.push_back(j);
      accepted_index.push_back(static_cast<int>(i));
    } else {
      rejected.push_back(j);
    }
  }
  report["master_exhausted"] = cs.master_exhausted;
  report["candidates"] = std::move(candidates);
  report["certified"] = std::move(accepted);
  report["rejected"] = std::move(rejected);

  if (options.stage != Stage::kFirst) {
    t0 = Clock::now();
    Json second = Json::array();
    Json ef = Json::array();
    for (int i : accepted_index) {
      const Eigen::VectorXd& x = cs.candidates[i].x;
      const ValueFunctionResult vf = evaluate_Q(p, x);
      for (int s = 0; s < static_cast<int>(p.scenarios.size()); ++s) {
        const CandidateSet alts =
            second_stage_alternatives(p, x, cs.tau, s, options.k_limit);
        Json list = Json::array();
        for (std::size_t a = 0; a < alts.points.size(); ++a) {
          const Candidate& c = alts.points[a];
          Json aj;
          aj["y"] = vec(c.point);
          aj["objective"] = num(scale * c.objective);
          if (graph) {
            aj["path"] = format_path(*loaded.graph, flow_path(*loaded.graph, c.point));
          }
          list.push_back(std::move(aj));
          if (options.stage == Stage::kEf) {
            std::vector<Eigen::VectorXd> ys;
            for (const ScenarioSolve& ss : vf.per_scenario) ys.push_back(ss.primal);
            ys[s] = c.point;
            const EfRecord rec = reconstruct_ef(p, x, ys, cs.tau);
            ef.push_back({{"candidate", i},
                          {"scenario", s},
                          {"alternative", static_cast<int>(a)},
                          {"objective", num(scale * rec.objective)},
                          {"recourse_gap", num(rec.recourse_gap)},
                          {"residual", num(rec.residual)},
                          {"max_violation", num(rec.max_violation)}});
          }
        }
        second.push_back({{"candidate", i},
                          {"scenario", s},
                          {"exhausted", alts.exhausted},
                          {"alternatives", std::move(list)}});
      }
    }
    report["second_stage"] = std::move(second);
    if (options.stage == Stage::kEf) report["extensive_form"] = std::move(ef);
    timing["second_stage_ms"] = ms_since(t0);
  }
  timing["total_ms"] = ms_since(t_start);
  report["timing"] = std::move(timing);
  return report;
}

std::string certified_csv(const Json& report) {
  std::ostringstream out;
  out << "set,index,true_objective";
  for (const auto& label : report.at("problem").at("labels")) {
    out << "," << label.get<std::string>();
  }
  out << "\n";
  for (const char* set : {"certified", "rejected"}) {
    for (const auto& pt : report.at(set)) {
      out << set << "," << pt.at("index").get<int>() << ","
          << fmt10(pt.at("true_objective").get<double>());
      for (const auto& v : pt.at("x")) out << "," << fmt10(v.get<double>());
      out << "\n";
    }
  }
  return out.str();
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace aos
