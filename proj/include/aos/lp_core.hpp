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

// Dense revised simplex for small linear programs. Every optimal answer is a
// basic (vertex) solution together with the row duals of the standardized
// equality form.

#ifndef AOS_LP_CORE_HPP_
#define AOS_LP_CORE_HPP_

#include <limits>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace aos {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { kMinimize, kMaximize };
enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

std::string_view to_string(RowSense sense);

struct LinearProgram {
  Sense sense = Sense::kMinimize;
  Eigen::VectorXd objective;
  double objective_offset = 0.0;
  Eigen::MatrixXd constraints;  // rows x vars
  std::vector<RowSense> row_senses;
  Eigen::VectorXd rhs;
  Eigen::VectorXd lower;  // defaults 0
  Eigen::VectorXd upper;  // defaults +inf

  // An empty program over `num_vars` nonnegative variables.
  static LinearProgram with_vars(int num_vars, Sense sense = Sense::kMinimize);

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rhs.size()); }

  void add_row(const Eigen::Ref<const Eigen::VectorXd>& coeffs, RowSense sense,
               double rhs_value);

  // Objective value (in the program's own sense) at `x`.
  double evaluate(const Eigen::Ref<const Eigen::VectorXd>& x) const;

  // Largest violation of any row or bound at `x`.
  double max_violation(const Eigen::Ref<const Eigen::VectorXd>& x) const;

  // Throws InputError on inconsistent dimensions or crossed bounds.
  void validate() const;
};

// How an original variable maps onto standardized columns.
struct ColumnMap {
  enum class Kind { kShifted, kMirrored, kSplit };
  Kind kind = Kind::kShifted;
  int column = -1;           // x = shift + col, or x = shift - col
  int negative_column = -1;  // kSplit only: x = col - negative_column
  double shift = 0.0;
};

// Equality form min c'z, Az = b, z >= 0. Rows [0, original_rows) are the
// original constraints in order; later rows carry finite upper bounds.
struct StandardForm {
  LinearProgram lp;
  std::vector<ColumnMap> columns;
  int original_vars = 0;
  int original_rows = 0;
  bool negated = false;  // original program was a maximization

  // Original-space point for a standardized point.
  Eigen::VectorXd recover(const Eigen::Ref<const Eigen::VectorXd>& z) const;
  // Original-space direction for a standardized direction (no shifts).
  Eigen::VectorXd recover_direction(
      const Eigen::Ref<const Eigen::VectorXd>& dz) const;
};

StandardForm standardize(const LinearProgram& lp);

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Eigen::VectorXd primal;  // original variables
  // One per standardized row, in the original program's sense; the first
  // num_rows() entries price the original constraints.
  Eigen::VectorXd duals;
  double objective = 0.0;
  double dual_objective = 0.0;
  // Standardized column indices. An index >= the standardized column count
  // marks an artificial kept basic on a linearly dependent row.
  std::vector<int> basis;
  int iterations = 0;
  int nodes = 0;  // branch-and-bound nodes; 0 for pure LP solves
};

struct SimplexOptions {
  double feasibility_tol = 1e-8;
  double reduced_cost_tol = 1e-9;
  double pivot_tol = 1e-9;
  double dual_gap_tol = 1e-7;
  int refactor_every = 50;
  // Consecutive degenerate pivots tolerated before switching to Bland's rule.
  int bland_after = 50;
  int iteration_limit = 200000;
};

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options = {});

// Starts from `warm_basis` (standardized column indices). Runs primal phase 2
// when the basis is primal feasible and the dual simplex when it is only dual
// feasible. Throws SolverError for a malformed or singular basis, or one that
// is neither primal nor dual feasible; there is no silent cold restart.
LpSolution solve_lp_from(const LinearProgram& lp,
                         const std::vector<int>& warm_basis,
                         const SimplexOptions& options = {});

// Indices of a maximal linearly independent subset of the rows of `a`,
// chosen greedily in row order.
std::vector<int> independent_rows(const Eigen::MatrixXd& a, double tol = 1e-9);

}  // namespace aos

#endif  // AOS_LP_CORE_HPP_
