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

#include "aos/binary_solver.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>

#include "aos/errors.hpp"

namespace aos {

void MixedBinaryProgram::validate() const {
  base_lp.validate();
  for (int j : binary_vars) {
    if (j < 0 || j >= base_lp.num_vars()) {
      throw InputError("binary variable index " + std::to_string(j) +
                       " out of range");
    }
    if (base_lp.lower(j) != 0.0 || base_lp.upper(j) != 1.0) {
      throw InputError("binary variable " + std::to_string(j) +
                       " must have bounds [0, 1]");
    }
  }
}

LinearConstraint no_good_cut(const MixedBinaryProgram& p,
                             const Eigen::Ref<const Eigen::VectorXd>& point) {
  LinearConstraint cut;
  cut.coeffs = Eigen::VectorXd::Zero(p.base_lp.num_vars());
  cut.sense = RowSense::kGreaterEqual;
  double ones = 0.0;
  for (int j : p.binary_vars) {
    if (point(j) > 0.5) {
      cut.coeffs(j) = -1.0;
      ones += 1.0;
    } else {
      cut.coeffs(j) = 1.0;
    }
  }
  cut.rhs = 1.0 - ones;
  return cut;
}

namespace {

struct Node {
  double bound = 0.0;  // minimization-form LP bound
  std::int64_t id = 0;
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
  LpSolution relaxation;
};

struct WorseBound {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.id > b.id;
  }
};

// Most fractional binary, lowest index on ties; -1 when integral.
int branching_variable(const MixedBinaryProgram& p, const Eigen::VectorXd& x,
                       double tol) {
  int best = -1;
  double best_frac = tol;
  for (int j : p.binary_vars) {
    const double f = x(j) - std::floor(x(j));
    const double dist = std::min(f, 1.0 - f);
    if (dist > best_frac) {
      best_frac = dist;
      best = j;
    }
  }
  return best;
}

}  // namespace

LpSolution solve_bip_with_extra_cuts(const MixedBinaryProgram& p,
                                     const std::vector<LinearConstraint>& cuts,
                                     const BranchAndBoundOptions& options) {
  p.validate();
  LinearProgram lp = p.base_lp;
  for (const LinearConstraint& c : cuts) {
    if (c.coeffs.size() != lp.num_vars()) {
      throw InputError("extra cut references " +
                       std::to_string(c.coeffs.size()) +
                       " variables; model has " +
                       std::to_string(lp.num_vars()));
    }
    lp.add_row(c.coeffs, c.sense, c.rhs);
  }
  const double sgn = lp.sense == Sense::kMaximize ? -1.0 : 1.0;

  std::int64_t next_id = 0;
  int nodes = 0;
  int total_iterations = 0;
  std::optional<LpSolution> incumbent;
  double incumbent_key = kInf;
  std::priority_queue<Node, std::vector<Node>, WorseBound> frontier;

  auto prune_tol = [&] { return 1e-9 * (1.0 + std::abs(incumbent_key)); };

  // Solves one node and either records an incumbent or queues the node.
  // Children start from the parent basis, which stays dual feasible when
  // only bounds change.
  auto process = [&](Eigen::VectorXd lower, Eigen::VectorXd upper,
                     const std::vector<int>* parent_basis) {
    lp.lower = lower;
    lp.upper = upper;
    LpSolution sol;
    bool solved = false;
    if (parent_basis != nullptr) {
      try {
        sol = solve_lp_from(lp, *parent_basis, options.lp);
        solved = true;
      } catch (const SolverError&) {
      }
    }
    if (!solved) sol = solve_lp(lp, options.lp);
    ++nodes;
    total_iterations += sol.iterations;
    if (sol.status == LpStatus::kInfeasible) return;
    if (sol.status == LpStatus::kUnbounded) {
      throw ModelError("LP relaxation of the binary program is unbounded");
    }
    const double key = sgn * sol.objective;
    if (key >= incumbent_key - prune_tol()) return;
    if (branching_variable(p, sol.primal, options.integrality_tol) < 0) {
      for (int j : p.binary_vars) sol.primal(j) = std::round(sol.primal(j));
      sol.objective = lp.evaluate(sol.primal);
      incumbent_key = sgn * sol.objective;
      incumbent = std::move(sol);
      return;
    }
    frontier.push(Node{key, next_id++, std::move(lower), std::move(upper),
                       std::move(sol)});
  };

  process(p.base_lp.lower, p.base_lp.upper, nullptr);
  while (!frontier.empty()) {
    Node node = frontier.top();
    frontier.pop();
    if (node.bound >= incumbent_key - prune_tol()) break;
    const int j = branching_variable(p, node.relaxation.primal,
                                     options.integrality_tol);
    Eigen::VectorXd up_lower = node.lower;
    up_lower(j) = 1.0;
    Eigen::VectorXd down_upper = node.upper;
    down_upper(j) = 0.0;
    process(node.lower, std::move(down_upper), &node.relaxation.basis);
    process(std::move(up_lower), node.upper, &node.relaxation.basis);
  }

  if (!incumbent) {
    LpSolution none;
    none.status = LpStatus::kInfeasible;
    none.iterations = total_iterations;
    none.nodes = nodes;
    return none;
  }
  incumbent->iterations = total_iterations;
  incumbent->nodes = nodes;
  return *incumbent;
}

LpSolution solve_bip(const MixedBinaryProgram& p,
                     const BranchAndBoundOptions& options) {
  return solve_bip_with_extra_cuts(p, {}, options);
}

}  // namespace aos
