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

#include <string>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aos/benders.hpp"
#include "aos/errors.hpp"
#include "aos/io.hpp"
#include "aos/kernels.hpp"
#include "aos/lp_core.hpp"
#include "aos/models.hpp"
#include "aos/oracle.hpp"
#include "aos/pipeline.hpp"
#include "aos/report.hpp"

namespace py = pybind11;

namespace {

aos::RowSense parse_sense(const std::string& s) {
  if (s == "<=") return aos::RowSense::kLessEqual;
  if (s == ">=") return aos::RowSense::kGreaterEqual;
  if (s == "=" || s == "==") return aos::RowSense::kEqual;
  throw aos::InputError("sense must be one of '<=', '>=', '='");
}

aos::LinearProgram make_lp(const Eigen::VectorXd& c, const Eigen::MatrixXd& a,
                           const std::vector<std::string>& senses,
                           const Eigen::VectorXd& b,
                           std::optional<Eigen::VectorXd> lower,
                           std::optional<Eigen::VectorXd> upper, bool maximize) {
  aos::LinearProgram lp = aos::LinearProgram::with_vars(
      static_cast<int>(c.size()),
      maximize ? aos::Sense::kMaximize : aos::Sense::kMinimize);
  lp.objective = c;
  if (a.rows() > 0 && a.cols() != c.size()) {
    throw aos::InputError("A has the wrong number of columns");
  }
  if (static_cast<Eigen::Index>(senses.size()) != a.rows() || b.size() != a.rows()) {
    throw aos::InputError("A, senses and b disagree on the row count");
  }
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    lp.add_row(a.row(i).transpose(), parse_sense(senses[i]), b(i));
  }
  if (lower) lp.lower = *lower;
  if (upper) lp.upper = *upper;
  lp.validate();
  return lp;
}

aos::Json parse_text(const std::string& text) {
  try {
    return aos::Json::parse(text);
  } catch (const aos::Json::parse_error& e) {
    throw aos::InputError(std::string("invalid JSON (") + e.what() + ")");
  }
}

py::dict run_json(const std::string& problem_json, const std::string& tol,
                  int k, const std::string& stage, double benders_tol,
                  int iter_limit) {
  aos::RunOptions opts;
  opts.command = "python";
  opts.tolerance = aos::ToleranceSpec::parse(tol);
  opts.k_limit = k;
  opts.stage = aos::parse_stage(stage);
  opts.benders_tol = benders_tol;
  opts.iter_limit = iter_limit;
  const aos::LoadedProblem loaded = aos::load_problem(parse_text(problem_json));
  const std::string text = aos::run_report(loaded, opts).dump();
  return py::module_::import("json").attr("loads")(text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Alternative optimal solutions for Benders-decomposed problems";

  py::register_exception<aos::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<aos::ModelError>(m, "ModelError", PyExc_RuntimeError);
  py::register_exception<aos::SolverError>(m, "SolverError", PyExc_RuntimeError);
  py::register_exception<aos::PreconditionError>(m, "PreconditionError",
                                                 PyExc_ValueError);

  m.def("solve_lp",
        [](const Eigen::VectorXd& c, const Eigen::MatrixXd& a,
           const std::vector<std::string>& senses, const Eigen::VectorXd& b,
           std::optional<Eigen::VectorXd> lower,
           std::optional<Eigen::VectorXd> upper, bool maximize) {
          const aos::LpSolution sol =
              aos::solve_lp(make_lp(c, a, senses, b, lower, upper, maximize));
          py::dict out;
          out["status"] = std::string(aos::to_string(sol.status));
          out["x"] = sol.primal;
          out["duals"] = sol.duals.head(std::min<Eigen::Index>(sol.duals.size(), a.rows()));
          out["objective"] = sol.objective;
          out["iterations"] = sol.iterations;
          return out;
        },
        py::arg("c"), py::arg("A"), py::arg("senses"), py::arg("b"),
        py::arg("lower") = py::none(), py::arg("upper") = py::none(),
        py::arg("maximize") = false,
        "Solve min (or max) c'x s.t. A x (senses) b, lower <= x <= upper.");

  m.def("enumerate_vertices",
        [](const Eigen::VectorXd& c, const Eigen::MatrixXd& a,
           const std::vector<std::string>& senses, const Eigen::VectorXd& b,
           double tau, int k, std::optional<Eigen::VectorXd> lower,
           std::optional<Eigen::VectorXd> upper) {
          const aos::CandidateSet cs = aos::enumerate_linear_solutions(
              {make_lp(c, a, senses, b, lower, upper, false), tau, k});
          std::vector<Eigen::VectorXd> pts;
          std::vector<double> objs;
          for (const aos::Candidate& cand : cs.points) {
            pts.push_back(cand.point);
            objs.push_back(cand.objective);
          }
          py::dict out;
          out["points"] = pts;
          out["objectives"] = objs;
          out["exhausted"] = cs.exhausted;
          return out;
        },
        py::arg("c"), py::arg("A"), py::arg("senses"), py::arg("b"),
        py::arg("tau"), py::arg("k") = 10, py::arg("lower") = py::none(),
        py::arg("upper") = py::none(),
        "Vertices of {A x (senses) b, c'x <= tau} in objective order.");

  py::class_<aos::TwoStageProblem>(m, "Problem")
      .def_static("from_json",
                  [](const std::string& text) {
                    return aos::load_problem(parse_text(text)).problem;
                  })
      .def_static("farmer",
                  [](int scenarios) {
                    return aos::build_farmer(aos::farmer_config(scenarios));
                  },
                  py::arg("scenarios") = 1)
      .def_static("mxsp",
                  [](double budget) {
                    return aos::build_mxsp(aos::reference_graph(budget));
                  },
                  py::arg("budget") = 1.0)
      .def_static("abs_value", [] { return aos::counterexample_absQ().problem; })
      .def("to_json", [](const aos::TwoStageProblem& p) {
        return aos::problem_to_json(p).dump();
      })
      .def_property_readonly("name", [](const aos::TwoStageProblem& p) { return p.name; })
      .def_property_readonly("num_x", &aos::TwoStageProblem::num_x)
      .def_property_readonly("num_scenarios", [](const aos::TwoStageProblem& p) {
        return p.scenarios.size();
      })
      .def_property_readonly("labels", [](const aos::TwoStageProblem& p) {
        return p.x_labels;
      })
      .def("evaluate_Q",
           [](const aos::TwoStageProblem& p, const Eigen::VectorXd& x) {
             const aos::ValueFunctionResult vf = aos::evaluate_Q(p, x);
             py::dict out;
             out["value"] = vf.q_value;
             out["alpha"] = vf.cut.alpha;
             out["beta"] = vf.cut.beta;
             return out;
           },
           py::arg("x"), "Q(x) and a supporting cut alpha + beta'x.")
      .def("first_stage_cost",
           [](const aos::TwoStageProblem& p, const Eigen::VectorXd& x) {
             return aos::first_stage_cost(p, x);
           },
           py::arg("x"))
      .def("solve_benders",
           [](const aos::TwoStageProblem& p, double tol, int iter_limit) {
             aos::BendersOptions o;
             o.tol = tol;
             o.iter_limit = iter_limit;
             const aos::BendersResult r = aos::solve_benders(p, o);
             py::dict out;
             out["converged"] = r.converged;
             out["iterations"] = r.iterations;
             out["cuts"] = r.cut_pool.size();
             out["z_star"] = r.z_star;
             out["x_star"] = r.x_star;
             return out;
           },
           py::arg("tol") = 1e-6, py::arg("iter_limit") = 500)
      .def("certify",
           [](const aos::TwoStageProblem& p, const Eigen::VectorXd& x, double tau) {
             const aos::Certification c = aos::certify(p, x, tau);
             return py::make_tuple(c.accepted, c.true_objective);
           },
           py::arg("x"), py::arg("tau"))
      .def("solve_ef",
           [](const aos::TwoStageProblem& p) {
             const aos::EfDirectResult r = aos::solve_ef_direct(p);
             py::dict out;
             out["status"] = std::string(aos::to_string(r.status));
             out["z_star"] = r.z_star;
             out["x"] = r.x;
             return out;
           });

  m.def("run",
        [](const std::string& problem_json, const std::string& tol, int k,
           const std::string& stage, double benders_tol, int iter_limit) {
          return run_json(problem_json, tol, k, stage, benders_tol, iter_limit);
        },
        py::arg("problem_json"), py::arg("tol") = "abs:0", py::arg("k") = 10,
        py::arg("stage") = "first", py::arg("benders_tol") = 1e-6,
        py::arg("iter_limit") = 500,
        "Full pipeline on a problem, graph or farmer JSON document; returns "
        "the report as a dict.");

  m.def("reference_graph_json", [](double budget) {
    return aos::graph_to_json(aos::reference_graph(budget)).dump();
  }, py::arg("budget") = 1.0);
  m.def("farmer_config_json", [](int scenarios) {
    return aos::farmer_to_json(aos::farmer_config(scenarios)).dump();
  }, py::arg("scenarios") = 1);
}
