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

#ifndef AOS_SRC_SIMPLEX_ENGINE_HPP_
#define AOS_SRC_SIMPLEX_ENGINE_HPP_

#include <vector>

#include <Eigen/Dense>

#include "aos/lp_core.hpp"

namespace aos::detail {

enum class Outcome { kOptimal, kUnbounded, kInfeasible };

// Revised simplex over Az = b, z >= 0 with an explicit basis inverse that is
// updated by elementary row operations and refactored periodically.
class SimplexEngine {
 public:
  SimplexEngine(Eigen::MatrixXd a, Eigen::VectorXd b,
                const SimplexOptions& options);

  void set_basis(const std::vector<int>& basis);
  bool try_set_basis(const std::vector<int>& basis);

  Outcome primal_simplex(const Eigen::VectorXd& cost,
                         const std::vector<char>& allowed);
  Outcome dual_simplex(const Eigen::VectorXd& cost,
                       const std::vector<char>& allowed);
  bool is_dual_feasible(const Eigen::VectorXd& cost,
                        const std::vector<char>& allowed) const;

  // Pivots basic artificial columns (index >= n_real) out wherever some real
  // column has a nonzero entry in their row. Rows with none are redundant.
  void drive_out_artificials(int n_real);

  Eigen::VectorXd primal() const;
  const Eigen::VectorXd& basic_values() const { return xb_; }
  Eigen::VectorXd duals(const Eigen::VectorXd& cost) const;
  const std::vector<int>& basis() const { return basis_; }
  int iterations() const { return iterations_; }
  int num_cols() const { return static_cast<int>(a_.cols()); }

 private:
  void refactor();
  void pivot(int row, int entering, const Eigen::VectorXd& u);
  void count_iteration();

  Eigen::MatrixXd a_;
  Eigen::VectorXd b_;
  SimplexOptions options_;
  std::vector<int> basis_;
  std::vector<char> is_basic_;
  Eigen::MatrixXd binv_;
  Eigen::VectorXd xb_;
  int iterations_ = 0;
  int since_refactor_ = 0;
};

}  // namespace aos::detail

#endif  // AOS_SRC_SIMPLEX_ENGINE_HPP_
