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

// Alternative-solution generators. Both return points of the sublevel set
// {x feasible : f(x) <= tau} in nondecreasing objective order, ties broken
// lexicographically on the solution vector.
//
// LP models: every vertex of the tau-sublevel polytope, found by walking the
// graph of feasible bases outward from an optimal basis. Vertices created by
// the tau face itself are included.
//
// Binary models: repeated exact solves, each followed by a no-good cut over
// the binary variables, until the model is infeasible or the optimum exceeds
// tau.

#ifndef AOS_KERNELS_HPP_
#define AOS_KERNELS_HPP_

#include <vector>

#include <Eigen/Dense>

#include "aos/binary_solver.hpp"
#include "aos/lp_core.hpp"

namespace aos {

struct Candidate {
  Eigen::VectorXd point;
  double objective = 0.0;
};

struct CandidateSet {
  std::vector<Candidate> points;
  // True iff every point of the sublevel set (every vertex, for LPs) is in
  // `points`.
  bool exhausted = false;
};

template <typename Model>
struct EnumerationRequest {
  Model model;
  double tau = 0.0;
  int k_limit = 10;
  double dedupe_tol = 1e-6;
};

using LinearEnumerationRequest = EnumerationRequest<LinearProgram>;
using BinaryEnumerationRequest = EnumerationRequest<MixedBinaryProgram>;

// Throws InputError for a maximization model or k_limit < 1, and SolverError
// when the sublevel set is unbounded.
CandidateSet enumerate_linear_solutions(const LinearEnumerationRequest& req);

CandidateSet enumerate_binary_solutions(const BinaryEnumerationRequest& req);

// Slack allowed above tau when admitting a point: 1e-7 * (1 + |tau|).
double tau_slack(double tau);

// True when a and b agree coordinatewise within tol * (1 + |a_j|).
bool same_point(const Eigen::Ref<const Eigen::VectorXd>& a,
                const Eigen::Ref<const Eigen::VectorXd>& b, double tol);

}  // namespace aos

#endif  // AOS_KERNELS_HPP_
