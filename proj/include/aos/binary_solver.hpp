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

// Best-bound branch and bound for programs whose integer variables are all
// binary. Continuous variables (such as the Benders epigraph variable) ride
// along in every LP relaxation.

#ifndef AOS_BINARY_SOLVER_HPP_
#define AOS_BINARY_SOLVER_HPP_

#include <vector>

#include <Eigen/Dense>

#include "aos/lp_core.hpp"

namespace aos {

struct MixedBinaryProgram {
  LinearProgram base_lp;
  std::vector<int> binary_vars;

  // Throws InputError when an index is out of range or its bounds are not
  // [0, 1].
  void validate() const;
};

struct LinearConstraint {
  Eigen::VectorXd coeffs;
  RowSense sense = RowSense::kGreaterEqual;
  double rhs = 0.0;
};

struct BranchAndBoundOptions {
  double integrality_tol = 1e-6;
  SimplexOptions lp;
};

// Exact optimum; status kInfeasible when no binary point is feasible.
// Throws ModelError if a relaxation is unbounded.
LpSolution solve_bip(const MixedBinaryProgram& p,
                     const BranchAndBoundOptions& options = {});

LpSolution solve_bip_with_extra_cuts(const MixedBinaryProgram& p,
                                     const std::vector<LinearConstraint>& cuts,
                                     const BranchAndBoundOptions& options = {});

// Excludes exactly the binary assignment `point` (read at p.binary_vars).
LinearConstraint no_good_cut(const MixedBinaryProgram& p,
                             const Eigen::Ref<const Eigen::VectorXd>& point);

}  // namespace aos

#endif  // AOS_BINARY_SOLVER_HPP_
