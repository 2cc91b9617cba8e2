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

// Alternative first-stage solutions from a Benders master.
//
//   1. Solve the problem with Benders and keep the terminal cut pool.
//   2. Enumerate master points with g(x) + theta <= tau (vertices for
//      continuous X, binary points for binary X).
//   3. Re-evaluate the true Q at each distinct x and keep those with
//      g(x) + Q(x) <= tau.
//
// Step 2 over-approximates because the cut pool underestimates Q; step 3
// removes the points that only look good under the approximation.

#ifndef AOS_PIPELINE_HPP_
#define AOS_PIPELINE_HPP_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "aos/benders.hpp"
#include "aos/errors.hpp"
#include "aos/kernels.hpp"
#include "aos/two_stage.hpp"

namespace aos {

struct ToleranceSpec {
  enum class Kind { kAbsolute, kRelative };
  Kind kind = Kind::kAbsolute;
  double value = 0.0;

  static ToleranceSpec absolute(double eps);
  static ToleranceSpec relative(double alpha);
  // "abs:<eps>" or "rel:<alpha>".
  static ToleranceSpec parse(const std::string& text);

  // z + eps, or z + alpha * |z|.
  double resolve(double z_star) const;
  std::string to_string() const;
  void validate() const;
};

// Boundary allowance used by certification: 1e-6 * (1 + |tau|).
double cert_tol(double tau);

struct CertifiedPoint {
  Eigen::VectorXd x;
  double master_objective = 0.0;  // g(x) + theta at the enumerated point
  double true_objective = 0.0;    // g(x) + Q(x)
  bool accepted = false;
};

struct CertifiedSet {
  double tau = 0.0;
  // Every distinct candidate, in enumeration order.
  std::vector<CertifiedPoint> candidates;
  std::vector<CertifiedPoint> accepted;
  std::vector<CertifiedPoint> rejected;
  bool master_exhausted = false;
};

struct AosOptions {
  BendersOptions benders;
  ToleranceSpec tolerance;
  int k_limit = 10;
};

struct AosResult {
  BendersResult benders;
  CertifiedSet certified;
};

// Raised when step 1 does not converge; carries the partial Benders run.
class NonConvergenceError : public SolverError {
 public:
  NonConvergenceError(const std::string& what, BendersResult partial)
      : SolverError(what), partial_(std::move(partial)) {}
  const BendersResult& partial() const { return partial_; }

 private:
  BendersResult partial_;
};

AosResult aos_benders(const TwoStageProblem& p, const AosOptions& options = {});

// Steps 2 and 3 against a given cut pool.
CertifiedSet enumerate_and_certify(const TwoStageProblem& p,
                                   const CutPool& pool, double tau,
                                   int k_limit);

// Master points with g(x) + theta <= tau, deduplicated on x.
CandidateSet master_candidates(const TwoStageProblem& p, const CutPool& pool,
                               double tau, int k_limit);

struct Certification {
  bool accepted = false;
  double true_objective = 0.0;
};

Certification certify(const TwoStageProblem& p,
                      const Eigen::Ref<const Eigen::VectorXd>& x, double tau);

// Recourse alternatives for one scenario at a certified x. The scenario
// budget holds the other scenarios at their optimal recourse:
//
//   w = (tau - g(x) - sum_{o != s} p_o Q_o(x)) / p_s.
//
// A min-form recourse returns vertices y with q'y <= w. A max-form recourse
// returns vertices within the same slack of its optimum, that is
// (q + Cx)'y >= Q_s(x) - (w - Q_s(x)). Candidate objectives are the
// recourse objective in the problem's own sense. Throws PreconditionError
// when x does not certify at tau.
CandidateSet second_stage_alternatives(const TwoStageProblem& p,
                                       const Eigen::Ref<const Eigen::VectorXd>& x,
                                       double tau, int scenario_index,
                                       int k_limit);

struct EfRecord {
  Eigen::VectorXd x;
  std::vector<Eigen::VectorXd> y;
  std::vector<double> recourse_values;  // own-sense recourse objective
  double first_stage_cost = 0.0;
  double expected_recourse = 0.0;  // sum p Q(x)
  double recourse_gap = 0.0;       // sum p |value - Q|, the suboptimality
  double objective = 0.0;          // g + expected_recourse + recourse_gap
  double residual = 0.0;           // tau - objective, >= -cert_tol
  double max_violation = 0.0;
};

// Assembles (x, y_1..y_N) and verifies every scenario row within 1e-7 and
// the level tau. Throws PreconditionError for an infeasible piece and
// ModelError when the assembled objective exceeds tau.
EfRecord reconstruct_ef(const TwoStageProblem& p,
                        const Eigen::Ref<const Eigen::VectorXd>& x,
                        const std::vector<Eigen::VectorXd>& y, double tau);

}  // namespace aos

#endif  // AOS_PIPELINE_HPP_
