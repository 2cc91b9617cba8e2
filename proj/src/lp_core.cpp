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

#include "aos/lp_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "aos/errors.hpp"
#include "simplex_engine.hpp"

namespace aos {

std::string_view to_string(RowSense sense) {
  switch (sense) {
    case RowSense::kLessEqual:
      return "<=";
    case RowSense::kEqual:
      return "=";
    case RowSense::kGreaterEqual:
      return ">=";
  }
  return "?";
}

std::string_view to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "?";
}

LinearProgram LinearProgram::with_vars(int num_vars, Sense sense) {
  LinearProgram lp;
  lp.sense = sense;
  lp.objective = Eigen::VectorXd::Zero(num_vars);
  lp.constraints.resize(0, num_vars);
  lp.rhs.resize(0);
  lp.lower = Eigen::VectorXd::Zero(num_vars);
  lp.upper = Eigen::VectorXd::Constant(num_vars, kInf);
  return lp;
}

void LinearProgram::add_row(const Eigen::Ref<const Eigen::VectorXd>& coeffs,
                            RowSense row_sense, double rhs_value) {
  if (coeffs.size() != num_vars()) {
    throw InputError("add_row: expected " + std::to_string(num_vars()) +
                     " coefficients, got " + std::to_string(coeffs.size()));
  }
  const Eigen::Index m = constraints.rows();
  constraints.conservativeResize(m + 1, num_vars());
  constraints.row(m) = coeffs.transpose();
  rhs.conservativeResize(m + 1);
  rhs(m) = rhs_value;
  row_senses.push_back(row_sense);
}

double LinearProgram::evaluate(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  return objective.dot(x) + objective_offset;
}

double LinearProgram::max_violation(
    const Eigen::Ref<const Eigen::VectorXd>& x) const {
  double worst = 0.0;
  const Eigen::VectorXd ax = constraints * x;
  for (int i = 0; i < num_rows(); ++i) {
    const double r = ax(i) - rhs(i);
    switch (row_senses[i]) {
      case RowSense::kLessEqual:
        worst = std::max(worst, r);
        break;
      case RowSense::kGreaterEqual:
        worst = std::max(worst, -r);
        break;
      case RowSense::kEqual:
        worst = std::max(worst, std::abs(r));
        break;
    }
  }
  for (int j = 0; j < num_vars(); ++j) {
    worst = std::max(worst, lower(j) - x(j));
    worst = std::max(worst, x(j) - upper(j));
  }
  return worst;
}

void LinearProgram::validate() const {
  const auto n = objective.size();
  if (constraints.cols() != n && constraints.rows() > 0) {
    throw InputError("constraint matrix has " +
                     std::to_string(constraints.cols()) + " columns but " +
                     std::to_string(n) + " variables");
  }
  if (constraints.rows() != rhs.size() ||
      rhs.size() != static_cast<Eigen::Index>(row_senses.size())) {
    throw InputError("row count mismatch between matrix, rhs and senses");
  }
  if (lower.size() != n || upper.size() != n) {
    throw InputError("bound vectors must have one entry per variable");
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    if (!(lower(j) <= upper(j))) {
      throw InputError("variable " + std::to_string(j) +
                       " has lower bound above upper bound");
    }
    if (lower(j) == kInf || upper(j) == -kInf) {
      throw InputError("variable " + std::to_string(j) +
                       " has an infinite bound on the wrong side");
    }
  }
  if (!objective.allFinite() || !rhs.allFinite() ||
      !constraints.allFinite()) {
    throw InputError("linear program contains non-finite data");
  }
}

Eigen::VectorXd StandardForm::recover(
    const Eigen::Ref<const Eigen::VectorXd>& z) const {
  Eigen::VectorXd x(original_vars);
  for (int j = 0; j < original_vars; ++j) {
    const ColumnMap& cm = columns[j];
    switch (cm.kind) {
      case ColumnMap::Kind::kShifted:
        x(j) = cm.shift + z(cm.column);
        break;
      case ColumnMap::Kind::kMirrored:
        x(j) = cm.shift - z(cm.column);
        break;
      case ColumnMap::Kind::kSplit:
        x(j) = z(cm.column) - z(cm.negative_column);
        break;
    }
  }
  return x;
}

Eigen::VectorXd StandardForm::recover_direction(
    const Eigen::Ref<const Eigen::VectorXd>& dz) const {
  Eigen::VectorXd dx(original_vars);
  for (int j = 0; j < original_vars; ++j) {
    const ColumnMap& cm = columns[j];
    switch (cm.kind) {
      case ColumnMap::Kind::kShifted:
        dx(j) = dz(cm.column);
        break;
      case ColumnMap::Kind::kMirrored:
        dx(j) = -dz(cm.column);
        break;
      case ColumnMap::Kind::kSplit:
        dx(j) = dz(cm.column) - dz(cm.negative_column);
        break;
    }
  }
  return dx;
}

StandardForm standardize(const LinearProgram& lp) {
  lp.validate();
  const int n = lp.num_vars();
  const int m = lp.num_rows();
  const double sgn = lp.sense == Sense::kMaximize ? -1.0 : 1.0;

  StandardForm sf;
  sf.original_vars = n;
  sf.original_rows = m;
  sf.negated = lp.sense == Sense::kMaximize;
  sf.columns.resize(n);

  int next_col = n;
  std::vector<int> bounded;  // shifted vars with a finite upper bound
  for (int j = 0; j < n; ++j) {
    ColumnMap& cm = sf.columns[j];
    cm.column = j;
    if (std::isfinite(lp.lower(j))) {
      cm.kind = ColumnMap::Kind::kShifted;
      cm.shift = lp.lower(j);
      if (std::isfinite(lp.upper(j))) bounded.push_back(j);
    } else if (std::isfinite(lp.upper(j))) {
      cm.kind = ColumnMap::Kind::kMirrored;
      cm.shift = lp.upper(j);
    } else {
      cm.kind = ColumnMap::Kind::kSplit;
      cm.negative_column = next_col++;
    }
  }
  const int structural = next_col;
  int slack_count = 0;
  for (RowSense s : lp.row_senses) {
    if (s != RowSense::kEqual) ++slack_count;
  }
  const int rows = m + static_cast<int>(bounded.size());
  const int cols = structural + slack_count + static_cast<int>(bounded.size());

  LinearProgram& out = sf.lp;
  out.sense = Sense::kMinimize;
  out.objective = Eigen::VectorXd::Zero(cols);
  out.constraints = Eigen::MatrixXd::Zero(rows, cols);
  out.rhs = Eigen::VectorXd::Zero(rows);
  out.row_senses.assign(rows, RowSense::kEqual);
  out.lower = Eigen::VectorXd::Zero(cols);
  out.upper = Eigen::VectorXd::Constant(cols, kInf);

  double offset = lp.objective_offset;
  for (int j = 0; j < n; ++j) {
    const ColumnMap& cm = sf.columns[j];
    const double c = lp.objective(j);
    switch (cm.kind) {
      case ColumnMap::Kind::kShifted:
        out.objective(cm.column) = sgn * c;
        offset += c * cm.shift;
        break;
      case ColumnMap::Kind::kMirrored:
        out.objective(cm.column) = -sgn * c;
        offset += c * cm.shift;
        break;
      case ColumnMap::Kind::kSplit:
        out.objective(cm.column) = sgn * c;
        out.objective(cm.negative_column) = -sgn * c;
        break;
    }
  }
  out.objective_offset = sgn * offset;

  int slack = structural;
  for (int i = 0; i < m; ++i) {
    double b = lp.rhs(i);
    for (int j = 0; j < n; ++j) {
      const double a = lp.constraints(i, j);
      if (a == 0.0) continue;
      const ColumnMap& cm = sf.columns[j];
      switch (cm.kind) {
        case ColumnMap::Kind::kShifted:
          out.constraints(i, cm.column) = a;
          b -= a * cm.shift;
          break;
        case ColumnMap::Kind::kMirrored:
          out.constraints(i, cm.column) = -a;
          b -= a * cm.shift;
          break;
        case ColumnMap::Kind::kSplit:
          out.constraints(i, cm.column) = a;
          out.constraints(i, cm.negative_column) = -a;
          break;
      }
    }
    out.rhs(i) = b;
    if (lp.row_senses[i] == RowSense::kLessEqual) {
      out.constraints(i, slack++) = 1.0;
    } else if (lp.row_senses[i] == RowSense::kGreaterEqual) {
      out.constraints(i, slack++) = -1.0;
    }
  }
  for (std::size_t k = 0; k < bounded.size(); ++k) {
    const int j = bounded[k];
    const int row = m + static_cast<int>(k);
    out.constraints(row, sf.columns[j].column) = 1.0;
    out.constraints(row, slack++) = 1.0;
    out.rhs(row) = lp.upper(j) - lp.lower(j);
  }
  return sf;
}

std::vector<int> independent_rows(const Eigen::MatrixXd& a, double tol) {
  std::vector<int> keep;
  std::vector<Eigen::VectorXd> basis;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Eigen::VectorXd v = a.row(i).transpose();
    const double scale = 1.0 + v.norm();
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) v -= q.dot(v) * q;
    }
    const double nv = v.norm();
    if (nv > tol * scale) {
      basis.push_back(v / nv);
      keep.push_back(static_cast<int>(i));
    }
  }
  return keep;
}

namespace {

LpSolution assemble(const StandardForm& sf, const detail::SimplexEngine& eng,
                    const Eigen::VectorXd& row_sign, int iterations) {
  const LinearProgram& std_lp = sf.lp;
  const int n_std = std_lp.num_vars();
  LpSolution sol;
  sol.status = LpStatus::kOptimal;
  sol.iterations = iterations;
  const Eigen::VectorXd z = eng.primal().head(n_std);
  sol.primal = sf.recover(z);
  Eigen::VectorXd cost = Eigen::VectorXd::Zero(eng.num_cols());
  cost.head(n_std) = std_lp.objective;
  Eigen::VectorXd y = eng.duals(cost).cwiseProduct(row_sign);
  const double sgn = sf.negated ? -1.0 : 1.0;
  const double primal_std = std_lp.objective.dot(z) + std_lp.objective_offset;
  const double dual_std = y.dot(std_lp.rhs) + std_lp.objective_offset;
  sol.objective = sgn * primal_std;
  sol.dual_objective = sgn * dual_std;
  sol.duals = sgn * y;
  sol.basis = eng.basis();
  return sol;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options) {
  const StandardForm sf = standardize(lp);
  const LinearProgram& std_lp = sf.lp;
  const int m = std_lp.num_rows();
  const int n = std_lp.num_vars();

  // Phase 1 on sign-normalized rows with one artificial per row.
  Eigen::VectorXd row_sign = Eigen::VectorXd::Ones(m);
  Eigen::MatrixXd a1(m, n + m);
  Eigen::VectorXd b1 = std_lp.rhs;
  a1.leftCols(n) = std_lp.constraints;
  a1.rightCols(m).setIdentity();
  for (int i = 0; i < m; ++i) {
    if (b1(i) < 0.0) {
      row_sign(i) = -1.0;
      a1.row(i).head(n) *= -1.0;
      b1(i) = -b1(i);
    }
  }
  detail::SimplexEngine eng(a1, b1, options);
  std::vector<int> start(m);
  for (int i = 0; i < m; ++i) start[i] = n + i;
  eng.set_basis(start);

  std::vector<char> all_cols(n + m, 1);
  Eigen::VectorXd cost1 = Eigen::VectorXd::Zero(n + m);
  cost1.tail(m).setOnes();
  auto outcome = eng.primal_simplex(cost1, all_cols);
  if (outcome != detail::Outcome::kOptimal) {
    throw SolverError("phase 1 failed to reach an optimum");
  }
  const double infeas = eng.primal().tail(m).sum();
  const double bscale = 1.0 + (m > 0 ? b1.lpNorm<Eigen::Infinity>() : 0.0);
  if (infeas > options.feasibility_tol * bscale) {
    LpSolution sol;
    sol.status = LpStatus::kInfeasible;
    sol.iterations = eng.iterations();
    return sol;
  }
  eng.drive_out_artificials(n);

  std::vector<char> real_cols(n + m, 0);
  std::fill(real_cols.begin(), real_cols.begin() + n, 1);
  Eigen::VectorXd cost2 = Eigen::VectorXd::Zero(n + m);
  cost2.head(n) = std_lp.objective;
  outcome = eng.primal_simplex(cost2, real_cols);
  if (outcome == detail::Outcome::kUnbounded) {
    LpSolution sol;
    sol.status = LpStatus::kUnbounded;
    sol.iterations = eng.iterations();
    return sol;
  }
  return assemble(sf, eng, row_sign, eng.iterations());
}

LpSolution solve_lp_from(const LinearProgram& lp,
                         const std::vector<int>& warm_basis,
                         const SimplexOptions& options) {
  const StandardForm sf = standardize(lp);
  const LinearProgram& std_lp = sf.lp;
  const int m = std_lp.num_rows();
  const int n = std_lp.num_vars();
  if (static_cast<int>(warm_basis.size()) != m) {
    throw SolverError("warm basis has " + std::to_string(warm_basis.size()) +
                      " columns; standardized form has " + std::to_string(m) +
                      " rows");
  }
  std::vector<int> sorted = warm_basis;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw SolverError("warm basis repeats a column");
  }
  for (int j : warm_basis) {
    if (j < 0 || j >= n) {
      throw SolverError("warm basis column " + std::to_string(j) +
                        " out of range");
    }
  }
  detail::SimplexEngine eng(std_lp.constraints, std_lp.rhs, options);
  if (!eng.try_set_basis(warm_basis)) {
    throw SolverError("warm basis is singular");
  }
  std::vector<char> cols(n, 1);
  const Eigen::VectorXd& cost = std_lp.objective;
  const Eigen::VectorXd xb = eng.basic_values();
  const bool primal_feasible =
      m == 0 || xb.minCoeff() >= -options.feasibility_tol;
  detail::Outcome outcome;
  if (primal_feasible) {
    outcome = eng.primal_simplex(cost, cols);
  } else if (eng.is_dual_feasible(cost, cols)) {
    outcome = eng.dual_simplex(cost, cols);
    if (outcome == detail::Outcome::kOptimal) {
      outcome = eng.primal_simplex(cost, cols);
    }
  } else {
    throw SolverError("warm basis is neither primal nor dual feasible");
  }
  if (outcome == detail::Outcome::kInfeasible) {
    LpSolution sol;
    sol.status = LpStatus::kInfeasible;
    sol.iterations = eng.iterations();
    return sol;
  }
  if (outcome == detail::Outcome::kUnbounded) {
    LpSolution sol;
    sol.status = LpStatus::kUnbounded;
    sol.iterations = eng.iterations();
    return sol;
  }
  return assemble(sf, eng, Eigen::VectorXd::Ones(m), eng.iterations());
}

}  // namespace aos
