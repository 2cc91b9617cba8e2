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

// Brute-force references used to check the decomposition pipeline.
//
// The binary oracle evaluates Q for path-shaped recourse with a
// label-correcting shortest path, without touching the simplex code, so it
// is an independent check of both the value function and the enumeration.

#ifndef AOS_ORACLE_HPP_
#define AOS_ORACLE_HPP_

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "aos/benders.hpp"
#include "aos/binary_solver.hpp"
#include "aos/kernels.hpp"
#include "aos/lp_core.hpp"
#include "aos/models.hpp"
#include "aos/two_stage.hpp"

namespace aos {

struct OracleReport {
  enum class Method { kBinaryExhaustive, kEfDirect, kVertexBruteforce };
  double tau = 0.0;
  std::vector<Candidate> exact_set;  // objective = true objective
  Method method = Method::kBinaryExhaustive;
};

using QEvaluator =
    std::function<double(const Eigen::Ref<const Eigen::VectorXd>& x)>;

// Q for a kPrimalPath problem whose recourse rows are node-arc incidence
// equalities with one unit of supply and demand: minus the expected shortest
// path under arc costs -(q + Cx). Throws InputError for other shapes and
// ModelError when the sink is unreachable.
double path_recourse_value(const TwoStageProblem& p,
                           const Eigen::Ref<const Eigen::VectorXd>& x);

// Every feasible binary x with g(x) + Q(x) <= tau + 1e-6 (1 + |tau|), in
// mask order. Q comes from `q_eval`, or from path_recourse_value when it is
// empty. Refuses problems with non-binary or more than 20 variables.
OracleReport brute_force_binary(const TwoStageProblem& p, double tau,
                                const QEvaluator& q_eval = {});

// Interdicted shortest s-t path length with arc costs c + x d.
double interdicted_path_length(const InterdictionGraph& g,
                               const Eigen::Ref<const Eigen::VectorXd>& x);

// All simple s-t paths as arc index lists, depth first in arc order.
std::vector<std::vector<int>> simple_paths(const InterdictionGraph& g);

struct EfDirectResult {
  LpStatus status = LpStatus::kInfeasible;
  double z_star = 0.0;
  Eigen::VectorXd x;
  Eigen::VectorXd solution;  // all extensive-form columns
};

// Solves the extensive form in one model (branch and bound for binary X).
EfDirectResult solve_ef_direct(const TwoStageProblem& p);

// Exact optimal-and-near-optimal set via solve_ef_direct with no-good cuts;
// binary X only.
OracleReport ef_direct_binary(const TwoStageProblem& p, double tau);

// Vertices of {lp feasible, objective <= tau} by solving every square
// subsystem of active constraints. Bounds count as constraints; at most 6
// variables.
OracleReport vertex_bruteforce(const LinearProgram& lp, double tau);

// All points of a pure binary program with objective <= tau + 1e-7(1+|tau|),
// sorted like the enumeration kernel. At most 16 variables.
OracleReport binary_program_bruteforce(const MixedBinaryProgram& p, double tau);

// Sublevel-set membership predicates. BM uses the cuts in `pool` only.
bool in_level_bm(const TwoStageProblem& p, const CutPool& pool,
                 const Eigen::Ref<const Eigen::VectorXd>& x, double theta,
                 double tau);
bool in_level_ev(const TwoStageProblem& p,
                 const Eigen::Ref<const Eigen::VectorXd>& x, double theta,
                 double tau);
bool in_level_pv(const TwoStageProblem& p,
                 const Eigen::Ref<const Eigen::VectorXd>& x, double tau);
// kDualStandard problems only: (x, y_1..y_N) in Gamma with objective <= tau.
bool in_level_ef(const TwoStageProblem& p,
                 const Eigen::Ref<const Eigen::VectorXd>& x,
                 const std::vector<Eigen::VectorXd>& y, double tau);

// Q(x) = |x| from W = [1, -1], q = (1, 1), T = -1, h = 0, g = 0, with x
// free in [-1, 1].
struct AbsValueCounterexample {
  TwoStageProblem problem;
  std::vector<double> dual_vertices;  // {-1, 1}

  // Cut pool holding the given dual vertices.
  CutPool pool(const std::vector<double>& vertices) const;
  double q(double x) const;
  double q_hat(double x, const std::vector<double>& vertices) const;
  bool in_epi_q(double x, double theta) const;
  bool in_epi_q_hat(double x, double theta,
                    const std::vector<double>& vertices) const;
  // True when {(x, y) in Gamma : g + q'y <= tau} is empty.
  bool level_ef_empty(double tau) const;
};

AbsValueCounterexample counterexample_absQ();

}  // namespace aos

#endif  // AOS_ORACLE_HPP_
