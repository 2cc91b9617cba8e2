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

#include "aos/two_stage.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aos/errors.hpp"
#include "aos/parallel.hpp"

namespace aos {

std::string_view to_string(CutForm form) {
  return form == CutForm::kDualStandard ? "dual_standard" : "primal_path";
}

std::string_view to_string(Domain domain) {
  switch (domain) {
    case Domain::kContinuous:
      return "continuous";
    case Domain::kBinary:
      return "binary";
    case Domain::kFree:
      return "free";
  }
  return "?";
}

bool TwoStageProblem::all_binary() const {
  return std::all_of(x_domains.begin(), x_domains.end(),
                     [](Domain d) { return d == Domain::kBinary; });
}

bool TwoStageProblem::all_continuous() const {
  return std::none_of(x_domains.begin(), x_domains.end(),
                      [](Domain d) { return d == Domain::kBinary; });
}

void TwoStageProblem::validate() const {
  const int n1 = num_x();
  auto fail = [](const std::string& what) { throw InputError(what); };
  if (n1 == 0) fail("first stage has no variables");
  if (static_cast<int>(x_domains.size()) != n1) {
    fail("X.domains must have one entry per first-stage variable");
  }
  if (x_A.rows() != x_b.size() ||
      x_b.size() != static_cast<Eigen::Index>(x_senses.size())) {
    fail("X.A, X.senses and X.b disagree on the row count");
  }
  if (x_A.rows() > 0 && x_A.cols() != n1) {
    fail("X.A must have " + std::to_string(n1) + " columns");
  }
  if (scenarios.empty()) fail("at least one scenario is required");
  double total = 0.0;
  for (std::size_t s = 0; s < scenarios.size(); ++s) {
    const Scenario& sc = scenarios[s];
    const std::string at = "scenarios[" + std::to_string(s) + "]";
    if (!(sc.probability >= 0.0)) fail(at + ".p must be nonnegative");
    total += sc.probability;
    const auto n2 = sc.q.size();
    const auto m = sc.h.size();
    if (n2 == 0) fail(at + ".q is empty");
    if (sc.W.rows() != m || sc.W.cols() != n2) {
      fail(at + ".W must be " + std::to_string(m) + "x" + std::to_string(n2));
    }
    if (sc.T.rows() != m || sc.T.cols() != n1) {
      fail(at + ".T must be " + std::to_string(m) + "x" + std::to_string(n1));
    }
    if (static_cast<Eigen::Index>(sc.senses.size()) != m) {
      fail(at + ".senses must have one entry per row");
    }
    const bool has_c = sc.C.size() > 0;
    if (has_c && (sc.C.rows() != n2 || sc.C.cols() != n1)) {
      fail(at + ".C must be " + std::to_string(n2) + "x" + std::to_string(n1));
    }
    if (cut_form == CutForm::kDualStandard && has_c && !sc.C.isZero(0.0)) {
      fail(at + ".C must be zero for cut_form dual_standard");
    }
    if (cut_form == CutForm::kPrimalPath && !sc.T.isZero(0.0)) {
      fail(at + ".T must be zero for cut_form primal_path");
    }
  }
  if (std::abs(total - 1.0) > 1e-12) {
    fail("scenario probabilities sum to " + std::to_string(total) +
         ", expected 1");
  }
  if (theta_floor && !std::isfinite(*theta_floor)) {
    fail("theta_floor must be finite");
  }
  if (!x_labels.empty() && static_cast<int>(x_labels.size()) != n1) {
    fail("x_labels must have one entry per first-stage variable");
  }
}

double first_stage_cost(const TwoStageProblem& p,
                        const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (x.size() != p.num_x()) {
    throw InputError("first-stage point has wrong dimension");
  }
  return p.g_coeffs.dot(x) + p.g_const;
}

double first_stage_violation(const TwoStageProblem& p,
                             const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (x.size() != p.num_x()) {
    throw InputError("first-stage point has dimension " +
                     std::to_string(x.size()) + ", expected " +
                     std::to_string(p.num_x()));
  }
  LinearProgram lp = first_stage_lp(p);
  double worst = lp.max_violation(x);
  for (int j = 0; j < p.num_x(); ++j) {
    if (p.x_domains[j] == Domain::kBinary) {
      worst = std::max(worst, std::abs(x(j) - std::round(x(j))));
    }
  }
  return worst;
}

LinearProgram first_stage_lp(const TwoStageProblem& p) {
  LinearProgram lp = LinearProgram::with_vars(p.num_x());
  for (int j = 0; j < p.num_x(); ++j) {
    switch (p.x_domains[j]) {
      case Domain::kContinuous:
        break;
      case Domain::kBinary:
        lp.upper(j) = 1.0;
        break;
      case Domain::kFree:
        lp.lower(j) = -kInf;
        break;
    }
  }
  for (Eigen::Index i = 0; i < p.x_A.rows(); ++i) {
    lp.add_row(p.x_A.row(i).transpose(), p.x_senses[i], p.x_b(i));
  }
  return lp;
}

LinearProgram scenario_lp(const TwoStageProblem& p, int s,
                          const Eigen::Ref<const Eigen::VectorXd>& x) {
  const Scenario& sc = p.scenarios.at(s);
  const int n2 = static_cast<int>(sc.q.size());
  LinearProgram lp = LinearProgram::with_vars(n2);
  lp.constraints = sc.W;
  lp.row_senses = sc.senses;
  if (p.cut_form == CutForm::kDualStandard) {
    lp.sense = Sense::kMinimize;
    lp.objective = sc.q;
    lp.rhs = sc.h - sc.T * x;
  } else {
    lp.sense = Sense::kMaximize;
    lp.objective = sc.q;
    if (sc.C.size() > 0) lp.objective += sc.C * x;
    lp.rhs = sc.h;
  }
  return lp;
}

ValueFunctionResult evaluate_Q(const TwoStageProblem& p,
                               const Eigen::Ref<const Eigen::VectorXd>& x) {
  const double violation = first_stage_violation(p, x);
  if (violation > 1e-7) {
    throw PreconditionError("first-stage point violates X by " +
                            std::to_string(violation));
  }
  const Eigen::VectorXd xv = x;
  const int n_scen = static_cast<int>(p.scenarios.size());
  std::vector<ScenarioSolve> solves = parallel_map(n_scen, [&](int s) {
    const LpSolution sol = solve_lp(scenario_lp(p, s, xv));
    if (sol.status == LpStatus::kInfeasible) {
      throw ModelError("scenario " + std::to_string(s) +
                       ": recourse problem infeasible (relatively complete "
                       "recourse assumption violated)");
    }
    if (sol.status == LpStatus::kUnbounded) {
      throw ModelError("scenario " + std::to_string(s) +
                       ": recourse problem unbounded (finite solution "
                       "assumption violated)");
    }
    const Eigen::Index m = p.scenarios[s].h.size();
    return ScenarioSolve{sol.objective, sol.primal, sol.duals.head(m)};
  });

  ValueFunctionResult out;
  out.cut.beta = Eigen::VectorXd::Zero(p.num_x());
  out.cut.generating_x = xv;
  out.cut.source = p.cut_form == CutForm::kDualStandard
                       ? Cut::Source::kDualStandard
                       : Cut::Source::kPrimalPath;
  for (int s = 0; s < n_scen; ++s) {
    const Scenario& sc = p.scenarios[s];
    const ScenarioSolve& ss = solves[s];
    const double w = sc.probability;
    out.q_value += w * ss.value;
    if (p.cut_form == CutForm::kDualStandard) {
      out.cut.alpha += w * ss.duals.dot(sc.h);
      out.cut.beta -= w * (sc.T.transpose() * ss.duals);
    } else {
      out.cut.alpha += w * sc.q.dot(ss.primal);
      if (sc.C.size() > 0) out.cut.beta += w * (sc.C.transpose() * ss.primal);
    }
  }
  out.per_scenario = std::move(solves);
  return out;
}

TwoStageProblem dualize_recourse(const TwoStageProblem& p) {
  p.validate();
  if (p.cut_form == CutForm::kDualStandard) return p;
  TwoStageProblem out = p;
  out.cut_form = CutForm::kDualStandard;
  out.name = p.name.empty() ? "dualized" : p.name + " (dualized)";
  const int n1 = p.num_x();
  for (std::size_t s = 0; s < p.scenarios.size(); ++s) {
    const Scenario& sc = p.scenarios[s];
    const int m = static_cast<int>(sc.h.size());
    const int n2 = static_cast<int>(sc.q.size());
    // pi = S v with v >= 0.
    std::vector<std::pair<int, double>> cols;
    for (int i = 0; i < m; ++i) {
      switch (sc.senses[i]) {
        case RowSense::kLessEqual:
          cols.emplace_back(i, 1.0);
          break;
        case RowSense::kGreaterEqual:
          cols.emplace_back(i, -1.0);
          break;
        case RowSense::kEqual:
          cols.emplace_back(i, 1.0);
          cols.emplace_back(i, -1.0);
          break;
      }
    }
    const int k = static_cast<int>(cols.size());
    Scenario d;
    d.probability = sc.probability;
    d.q.resize(k);
    d.W.resize(n2, k);
    for (int c = 0; c < k; ++c) {
      const auto [row, sign] = cols[c];
      d.q(c) = sign * sc.h(row);
      d.W.col(c) = sign * sc.W.row(row).transpose();
    }
    d.h = sc.q;
    d.senses.assign(n2, RowSense::kGreaterEqual);
    d.T = sc.C.size() > 0 ? Eigen::MatrixXd(-sc.C)
                          : Eigen::MatrixXd::Zero(n2, n1);
    out.scenarios[s] = std::move(d);
  }
  return out;
}

ExtensiveForm build_extensive_form(const TwoStageProblem& input) {
  input.validate();
  const TwoStageProblem p = dualize_recourse(input);
  const int n1 = p.num_x();
  ExtensiveForm ef;
  ef.num_x = n1;
  int total = n1;
  for (const Scenario& sc : p.scenarios) {
    ef.scenario_offset.push_back(total);
    ef.scenario_size.push_back(static_cast<int>(sc.q.size()));
    total += static_cast<int>(sc.q.size());
  }
  const LinearProgram x_lp = first_stage_lp(p);
  LinearProgram lp = LinearProgram::with_vars(total);
  lp.objective.head(n1) = p.g_coeffs;
  lp.objective_offset = p.g_const;
  lp.lower.head(n1) = x_lp.lower;
  lp.upper.head(n1) = x_lp.upper;
  for (int i = 0; i < x_lp.num_rows(); ++i) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(total);
    row.head(n1) = x_lp.constraints.row(i).transpose();
    lp.add_row(row, x_lp.row_senses[i], x_lp.rhs(i));
  }
  for (std::size_t s = 0; s < p.scenarios.size(); ++s) {
    const Scenario& sc = p.scenarios[s];
    const int off = ef.scenario_offset[s];
    const int n2 = ef.scenario_size[s];
    lp.objective.segment(off, n2) = sc.probability * sc.q;
    for (Eigen::Index i = 0; i < sc.h.size(); ++i) {
      Eigen::VectorXd row = Eigen::VectorXd::Zero(total);
      row.head(n1) = sc.T.row(i).transpose();
      row.segment(off, n2) = sc.W.row(i).transpose();
      lp.add_row(row, sc.senses[i], sc.h(i));
    }
  }
  ef.model.base_lp = std::move(lp);
  for (int j = 0; j < n1; ++j) {
    if (p.x_domains[j] == Domain::kBinary) ef.model.binary_vars.push_back(j);
  }
  return ef;
}

}  // namespace aos
