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

#include "simplex_engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "aos/errors.hpp"

namespace aos::detail {

SimplexEngine::SimplexEngine(Eigen::MatrixXd a, Eigen::VectorXd b,
                             const SimplexOptions& options)
    : a_(std::move(a)), b_(std::move(b)), options_(options) {}

bool SimplexEngine::try_set_basis(const std::vector<int>& basis) {
  const Eigen::Index m = a_.rows();
  if (static_cast<Eigen::Index>(basis.size()) != m) return false;
  Eigen::MatrixXd bmat(m, m);
  for (Eigen::Index i = 0; i < m; ++i) bmat.col(i) = a_.col(basis[i]);
  if (m > 0) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(bmat);
    lu.setThreshold(1e-11);
    if (lu.rank() < m) return false;
  }
  basis_ = basis;
  is_basic_.assign(a_.cols(), 0);
  for (int j : basis_) is_basic_[j] = 1;
  refactor();
  return true;
}

void SimplexEngine::set_basis(const std::vector<int>& basis) {
  if (!try_set_basis(basis)) throw SolverError("singular starting basis");
}

void SimplexEngine::refactor() {
  const Eigen::Index m = a_.rows();
  if (m == 0) {
    binv_.resize(0, 0);
    xb_.resize(0);
    since_refactor_ = 0;
    return;
  }
  Eigen::MatrixXd bmat(m, m);
  for (Eigen::Index i = 0; i < m; ++i) bmat.col(i) = a_.col(basis_[i]);
  binv_ = bmat.partialPivLu().inverse();
  xb_ = binv_ * b_;
  since_refactor_ = 0;
}

void SimplexEngine::count_iteration() {
  if (++iterations_ > options_.iteration_limit) {
    throw SolverError("simplex iteration limit (" +
                      std::to_string(options_.iteration_limit) +
                      ") exceeded");
  }
}

void SimplexEngine::pivot(int row, int entering, const Eigen::VectorXd& u) {
  const double piv = u(row);
  const double theta = xb_(row) / piv;
  binv_.row(row) /= piv;
  for (Eigen::Index i = 0; i < binv_.rows(); ++i) {
    if (i == row || u(i) == 0.0) continue;
    binv_.row(i) -= u(i) * binv_.row(row);
    xb_(i) -= theta * u(i);
  }
  xb_(row) = theta;
  is_basic_[basis_[row]] = 0;
  basis_[row] = entering;
  is_basic_[entering] = 1;
  if (++since_refactor_ >= options_.refactor_every) refactor();
}

Eigen::VectorXd SimplexEngine::duals(const Eigen::VectorXd& cost) const {
  const Eigen::Index m = a_.rows();
  Eigen::VectorXd cb(m);
  for (Eigen::Index i = 0; i < m; ++i) cb(i) = cost(basis_[i]);
  return binv_.transpose() * cb;
}

Eigen::VectorXd SimplexEngine::primal() const {
  Eigen::VectorXd z = Eigen::VectorXd::Zero(a_.cols());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    z(basis_[i]) = std::max(0.0, xb_(static_cast<Eigen::Index>(i)));
  }
  return z;
}

bool SimplexEngine::is_dual_feasible(const Eigen::VectorXd& cost,
                                     const std::vector<char>& allowed) const {
  const Eigen::VectorXd y = duals(cost);
  for (Eigen::Index j = 0; j < a_.cols(); ++j) {
    if (is_basic_[j] || !allowed[j]) continue;
    if (cost(j) - y.dot(a_.col(j)) < -options_.reduced_cost_tol) return false;
  }
  return true;
}

Outcome SimplexEngine::primal_simplex(const Eigen::VectorXd& cost,
                                      const std::vector<char>& allowed) {
  const Eigen::Index m = a_.rows();
  const Eigen::Index n = a_.cols();
  bool bland = false;
  int degenerate_run = 0;
  for (;;) {
    const Eigen::VectorXd y = duals(cost);
    int entering = -1;
    double best = -options_.reduced_cost_tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (is_basic_[j] || !allowed[j]) continue;
      const double d = cost(j) - y.dot(a_.col(j));
      if (d < best) {
        entering = static_cast<int>(j);
        if (bland) break;
        best = d;
      }
    }
    if (entering < 0) return Outcome::kOptimal;

    const Eigen::VectorXd u = binv_ * a_.col(entering);
    double min_ratio = kInf;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (u(i) > options_.pivot_tol) {
        min_ratio = std::min(min_ratio, std::max(0.0, xb_(i)) / u(i));
      }
    }
    if (min_ratio == kInf) return Outcome::kUnbounded;
    const double tie = 1e-12 * (1.0 + min_ratio);
    int leave = -1;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (u(i) <= options_.pivot_tol) continue;
      if (std::max(0.0, xb_(i)) / u(i) > min_ratio + tie) continue;
      if (leave < 0) {
        leave = static_cast<int>(i);
      } else if (bland ? basis_[i] < basis_[leave] : u(i) > u(leave)) {
        leave = static_cast<int>(i);
      }
    }
    if (min_ratio <= options_.feasibility_tol) {
      if (++degenerate_run >= options_.bland_after) bland = true;
    } else {
      degenerate_run = 0;
    }
    count_iteration();
    pivot(leave, entering, u);
  }
}

Outcome SimplexEngine::dual_simplex(const Eigen::VectorXd& cost,
                                    const std::vector<char>& allowed) {
  const Eigen::Index m = a_.rows();
  const Eigen::Index n = a_.cols();
  bool bland = false;
  int degenerate_run = 0;
  for (;;) {
    int leave = -1;
    double worst = -options_.feasibility_tol;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (xb_(i) >= -options_.feasibility_tol) continue;
      if (bland) {
        if (leave < 0 || basis_[i] < basis_[leave]) leave = static_cast<int>(i);
      } else if (xb_(i) < worst) {
        worst = xb_(i);
        leave = static_cast<int>(i);
      }
    }
    if (leave < 0) return Outcome::kOptimal;

    const Eigen::VectorXd y = duals(cost);
    const Eigen::RowVectorXd row = binv_.row(leave) * a_;
    int entering = -1;
    double best_ratio = kInf;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (is_basic_[j] || !allowed[j]) continue;
      if (row(j) >= -options_.pivot_tol) continue;
      const double d = std::max(0.0, cost(j) - y.dot(a_.col(j)));
      const double ratio = d / -row(j);
      if (entering < 0 || ratio < best_ratio - 1e-12 * (1.0 + best_ratio)) {
        best_ratio = ratio;
        entering = static_cast<int>(j);
      }
    }
    if (entering < 0) return Outcome::kInfeasible;
    if (best_ratio <= options_.reduced_cost_tol) {
      if (++degenerate_run >= options_.bland_after) bland = true;
    } else {
      degenerate_run = 0;
    }
    const Eigen::VectorXd u = binv_ * a_.col(entering);
    count_iteration();
    pivot(leave, entering, u);
  }
}

void SimplexEngine::drive_out_artificials(int n_real) {
  const Eigen::Index m = a_.rows();
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis_[i] < n_real) continue;
    const Eigen::RowVectorXd row = binv_.row(i) * a_.leftCols(n_real);
    int entering = -1;
    double best = 1e-9;
    for (int j = 0; j < n_real; ++j) {
      if (is_basic_[j]) continue;
      if (std::abs(row(j)) > best) {
        best = std::abs(row(j));
        entering = j;
      }
    }
    if (entering < 0) continue;
    const Eigen::VectorXd u = binv_ * a_.col(entering);
    count_iteration();
    pivot(static_cast<int>(i), entering, u);
  }
  refactor();
}

}  // namespace aos::detail
