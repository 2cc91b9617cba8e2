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

#include "aos/benders.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "aos/errors.hpp"

namespace aos {

namespace {

std::int64_t quantize(double v) { return std::llround(v * 1e9); }

}  // namespace

bool CutPool::add(const Cut& cut) {
  if (!std::isfinite(cut.alpha) || !cut.beta.allFinite()) {
    throw InputError("cut has non-finite coefficients");
  }
  std::vector<std::int64_t> key;
  key.reserve(cut.beta.size() + 1);
  key.push_back(quantize(cut.alpha));
  for (Eigen::Index j = 0; j < cut.beta.size(); ++j) {
    key.push_back(quantize(cut.beta(j)));
  }
  if (!keys_.insert(std::move(key)).second) return false;
  cuts_.push_back(cut);
  return true;
}

double CutPool::evaluate(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  double best = -kInf;
  for (const Cut& c : cuts_) best = std::max(best, c.value_at(x));
  return best;
}

MasterProblem build_master(const TwoStageProblem& p, const CutPool& pool) {
  if (!p.theta_floor) {
    throw ModelError("problem '" + p.name +
                     "' has no theta_floor; the master needs a valid lower "
                     "bound on Q while the cut pool is empty");
  }
  const int n1 = p.num_x();
  const LinearProgram x_lp = first_stage_lp(p);
  LinearProgram lp = LinearProgram::with_vars(n1 + 1);
  lp.objective.head(n1) = p.g_coeffs;
  lp.objective(n1) = 1.0;
  lp.objective_offset = p.g_const;
  lp.lower.head(n1) = x_lp.lower;
  lp.upper.head(n1) = x_lp.upper;
  lp.lower(n1) = *p.theta_floor;
  for (int i = 0; i < x_lp.num_rows(); ++i) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(n1 + 1);
    row.head(n1) = x_lp.constraints.row(i).transpose();
    lp.add_row(row, x_lp.row_senses[i], x_lp.rhs(i));
  }
  for (const Cut& c : pool.cuts()) {
    // theta - beta'x >= alpha
    Eigen::VectorXd row(n1 + 1);
    row.head(n1) = -c.beta;
    row(n1) = 1.0;
    lp.add_row(row, RowSense::kGreaterEqual, c.alpha);
  }
  MasterProblem master;
  master.theta_index = n1;
  master.model.base_lp = std::move(lp);
  for (int j = 0; j < n1; ++j) {
    if (p.x_domains[j] == Domain::kBinary) master.model.binary_vars.push_back(j);
  }
  return master;
}

LpSolution solve_master(const MasterProblem& master) {
  if (master.is_binary()) return solve_bip(master.model);
  return solve_lp(master.model.base_lp);
}

namespace {

// Reoptimizes a continuous master from the previous basis plus the slack of
// the newly appended cut row; the old basis stays dual feasible. Falls back
// to a cold solve when the basis cannot be carried over.
LpSolution resolve_master(const MasterProblem& master,
                          const std::vector<int>& previous) {
  if (master.is_binary() || previous.empty()) return solve_master(master);
  const StandardForm sf = standardize(master.model.base_lp);
  const int rows = sf.lp.num_rows();
  if (rows != sf.original_rows ||
      static_cast<int>(previous.size()) + 1 != rows) {
    return solve_master(master);
  }
  int slack = -1;
  for (int j = sf.lp.num_vars() - 1; j >= 0; --j) {
    const auto col = sf.lp.constraints.col(j);
    if (col(rows - 1) != 0.0 && col.cwiseAbs().sum() == std::abs(col(rows - 1))) {
      slack = j;
      break;
    }
  }
  std::vector<int> basis = previous;
  for (int j : basis) {
    if (j >= sf.lp.num_vars() || j == slack) return solve_master(master);
  }
  if (slack < 0) return solve_master(master);
  basis.push_back(slack);
  try {
    return solve_lp_from(master.model.base_lp, basis);
  } catch (const SolverError&) {
    return solve_master(master);
  }
}

}  // namespace

BendersResult solve_benders(const TwoStageProblem& p,
                            const BendersOptions& options) {
  p.validate();
  if (!(options.tol >= 0.0)) throw InputError("Benders tolerance must be >= 0");
  if (options.iter_limit < 1) throw InputError("iteration limit must be >= 1");
  const int n1 = p.num_x();
  BendersResult result;
  double upper_bound = kInf;
  std::vector<int> basis;
  for (int it = 1; it <= options.iter_limit; ++it) {
    const MasterProblem master = build_master(p, result.cut_pool);
    const LpSolution sol = resolve_master(master, basis);
    if (sol.status == LpStatus::kInfeasible) {
      throw ModelError("master problem infeasible: X is empty");
    }
    if (sol.status == LpStatus::kUnbounded) {
      throw ModelError("master problem unbounded");
    }
    basis = sol.basis;
    const Eigen::VectorXd x = sol.primal.head(n1);
    const double theta = sol.primal(n1);
    const ValueFunctionResult vf = evaluate_Q(p, x);
    const double g = first_stage_cost(p, x);
    upper_bound = std::min(upper_bound, g + vf.q_value);

    IterationRecord rec;
    rec.iteration = it;
    rec.master_objective = sol.objective;
    rec.theta = theta;
    rec.q_value = vf.q_value;
    rec.upper_bound = upper_bound;
    rec.gap = std::abs(theta - vf.q_value);
    rec.x = x;
    rec.cut = vf.cut;

    result.x_star = x;
    result.theta = theta;
    result.z_star = g + theta;
    result.iterations = it;

    const bool done = rec.gap <= options.tol;
    if (!done) {
      rec.cut_added = result.cut_pool.add(vf.cut);
      if (!rec.cut_added) {
        result.events.push_back(
            "iteration " + std::to_string(it) +
            ": duplicate cut while gap " + std::to_string(rec.gap) +
            " exceeds tolerance; stopping (tolerance mismatch)");
      }
    }
    result.trace.push_back(rec);
    if (options.on_iteration) options.on_iteration(rec);
    if (done) {
      result.converged = true;
      break;
    }
    if (!rec.cut_added) break;
  }
  return result;
}

}  // namespace aos
