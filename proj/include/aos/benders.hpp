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

// Single-cut Benders loop: solve the master over (x, theta), evaluate the
// recourse at the master point, add the aggregated cut, repeat until theta
// matches Q within tolerance.

#ifndef AOS_BENDERS_HPP_
#define AOS_BENDERS_HPP_

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "aos/binary_solver.hpp"
#include "aos/two_stage.hpp"

namespace aos {

class CutPool {
 public:
  // Appends `cut` unless a cut with the same (alpha, beta), rounded to 1e-9,
  // is already present. Returns whether it was added.
  bool add(const Cut& cut);

  const std::vector<Cut>& cuts() const { return cuts_; }
  std::size_t size() const { return cuts_.size(); }
  bool empty() const { return cuts_.empty(); }

  // max over cuts of alpha + beta'x; -inf for an empty pool.
  double evaluate(const Eigen::Ref<const Eigen::VectorXd>& x) const;

 private:
  std::vector<Cut> cuts_;
  std::set<std::vector<std::int64_t>> keys_;
};

// The master over (x, theta): variable num_x() is theta.
struct MasterProblem {
  MixedBinaryProgram model;
  int theta_index = 0;
  bool is_binary() const { return !model.binary_vars.empty(); }
};

// min g(x) + theta s.t. x in X, theta >= alpha_i + beta_i'x for every cut,
// theta >= theta_floor. Throws ModelError without a theta floor.
MasterProblem build_master(const TwoStageProblem& p, const CutPool& pool);

struct IterationRecord {
  int iteration = 0;
  double master_objective = 0.0;  // lower bound g(x_t) + theta_t
  double theta = 0.0;
  double q_value = 0.0;
  double upper_bound = 0.0;  // best g(x) + Q(x) so far
  double gap = 0.0;          // |theta - Q(x_t)|
  bool cut_added = false;
  Eigen::VectorXd x;
  Cut cut;
};

struct BendersOptions {
  double tol = 1e-6;
  int iter_limit = 500;
  std::function<void(const IterationRecord&)> on_iteration;
};

struct BendersResult {
  Eigen::VectorXd x_star;
  double theta = 0.0;
  double z_star = 0.0;
  CutPool cut_pool;
  int iterations = 0;
  bool converged = false;
  std::vector<IterationRecord> trace;
  std::vector<std::string> events;  // warnings such as stalled cut additions
};

// Never throws on non-convergence; converged=false is returned instead.
// Throws InputError for a negative tolerance or an iteration limit below 1.
BendersResult solve_benders(const TwoStageProblem& p,
                            const BendersOptions& options = {});

// Solves a master of either kind and returns the LP-style solution.
LpSolution solve_master(const MasterProblem& master);

}  // namespace aos

#endif  // AOS_BENDERS_HPP_
