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

// Two-stage problems
//
//   min  g'x + g0 + sum_w p_w Q_w(x)   s.t.  x in X
//
// with one of two recourse shapes, selected by CutForm:
//
//   kDualStandard:  Q_w(x) = min  q'y        s.t.  W y + T x (sense) h, y >= 0
//   kPrimalPath:    Q_w(x) = max (q + C x)'y  s.t.  W y       (sense) h, y >= 0
//
// The first yields cuts from row duals pi: Q >= pi'h - (T'pi)'x. The second
// is the interdiction shape, where x prices the recourse; a recourse vertex
// y* yields Q >= q'y* + (C'y*)'x. Both are convex in x.

#ifndef AOS_TWO_STAGE_HPP_
#define AOS_TWO_STAGE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "aos/binary_solver.hpp"
#include "aos/lp_core.hpp"

namespace aos {

enum class CutForm { kDualStandard, kPrimalPath };
enum class Domain { kContinuous, kBinary, kFree };

std::string_view to_string(CutForm form);
std::string_view to_string(Domain domain);

struct Scenario {
  double probability = 1.0;
  Eigen::VectorXd q;
  Eigen::MatrixXd W;  // rows x n2
  Eigen::MatrixXd T;  // rows x n1; zero under kPrimalPath
  Eigen::VectorXd h;
  std::vector<RowSense> senses;
  Eigen::MatrixXd C;  // n2 x n1; kPrimalPath only, empty otherwise
};

struct TwoStageProblem {
  std::string name;
  Eigen::VectorXd g_coeffs;
  double g_const = 0.0;
  Eigen::MatrixXd x_A;
  std::vector<RowSense> x_senses;
  Eigen::VectorXd x_b;
  std::vector<Domain> x_domains;
  std::vector<Scenario> scenarios;
  CutForm cut_form = CutForm::kDualStandard;
  // Valid lower bound on Q over X; bounds the epigraph variable while the
  // cut pool is empty.
  std::optional<double> theta_floor;
  std::vector<std::string> x_labels;  // optional, for reports

  int num_x() const { return static_cast<int>(g_coeffs.size()); }
  bool all_binary() const;
  bool all_continuous() const;

  // Throws InputError on dimension or probability inconsistencies.
  void validate() const;
};

struct Cut {
  enum class Source { kDualStandard, kPrimalPath };
  double alpha = 0.0;
  Eigen::VectorXd beta;
  Source source = Source::kDualStandard;
  Eigen::VectorXd generating_x;

  double value_at(const Eigen::Ref<const Eigen::VectorXd>& x) const {
    return alpha + beta.dot(x);
  }
};

struct ScenarioSolve {
  double value = 0.0;
  Eigen::VectorXd primal;  // recourse vertex y
  Eigen::VectorXd duals;   // row duals, one per scenario row
};

struct ValueFunctionResult {
  double q_value = 0.0;
  Cut cut;
  std::vector<ScenarioSolve> per_scenario;
};

double first_stage_cost(const TwoStageProblem& p,
                        const Eigen::Ref<const Eigen::VectorXd>& x);

// Largest violation of X (rows, sign and binary domains) at `x`.
double first_stage_violation(const TwoStageProblem& p,
                             const Eigen::Ref<const Eigen::VectorXd>& x);

// The recourse LP of scenario `s` with the first stage fixed at `x`.
LinearProgram scenario_lp(const TwoStageProblem& p, int s,
                          const Eigen::Ref<const Eigen::VectorXd>& x);

// Q(x) with a supporting cut. Throws PreconditionError when x is outside X
// (tolerance 1e-7) and ModelError when some scenario is infeasible or
// unbounded.
ValueFunctionResult evaluate_Q(const TwoStageProblem& p,
                               const Eigen::Ref<const Eigen::VectorXd>& x);

// Rewrites a kPrimalPath problem as the equivalent kDualStandard problem by
// dualizing each recourse LP, so that x moves from the costs to the
// right-hand side. Free and nonpositive duals are split into nonnegative
// columns.
TwoStageProblem dualize_recourse(const TwoStageProblem& p);

// Monolithic model over (x, y_1, ..., y_N).
struct ExtensiveForm {
  MixedBinaryProgram model;  // binary_vars empty for continuous X
  int num_x = 0;
  std::vector<int> scenario_offset;  // first column of y_s
  std::vector<int> scenario_size;
  bool is_binary() const { return !model.binary_vars.empty(); }
};

ExtensiveForm build_extensive_form(const TwoStageProblem& p);

// Builds X as a linear program over x alone, with zero objective.
LinearProgram first_stage_lp(const TwoStageProblem& p);

}  // namespace aos

#endif  // AOS_TWO_STAGE_HPP_
