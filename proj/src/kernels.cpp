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

#include "aos/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include "aos/errors.hpp"

namespace aos {

double tau_slack(double tau) { return 1e-7 * (1.0 + std::abs(tau)); }

bool same_point(const Eigen::Ref<const Eigen::VectorXd>& a,
                const Eigen::Ref<const Eigen::VectorXd>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index j = 0; j < a.size(); ++j) {
    if (std::abs(a(j) - b(j)) > tol * (1.0 + std::abs(a(j)))) return false;
  }
  return true;
}

namespace {

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (Eigen::Index j = 0; j < a.size(); ++j) {
    if (std::abs(a(j) - b(j)) <= 1e-9 * (1.0 + std::abs(a(j)))) continue;
    return a(j) < b(j);
  }
  return false;
}

// Objective order; runs of equal objective are ordered lexicographically.
void sort_candidates(std::vector<Candidate>& pts) {
  std::stable_sort(pts.begin(), pts.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.objective < b.objective;
                   });
  auto first = pts.begin();
  while (first != pts.end()) {
    const double base = first->objective;
    auto last = first;
    while (last != pts.end() &&
           last->objective - base <= 1e-9 * (1.0 + std::abs(base))) {
      ++last;
    }
    std::stable_sort(first, last, [](const Candidate& a, const Candidate& b) {
      return lex_less(a.point, b.point);
    });
    first = last;
  }
}

// Picks columns greedily so that `preferred` columns come first, completing to
// a basis of the column space of `a`.
std::vector<int> complete_basis(const Eigen::MatrixXd& a,
                                const std::vector<int>& preferred) {
  const Eigen::Index m = a.rows();
  std::vector<int> basis;
  std::vector<Eigen::VectorXd> ortho;
  std::vector<char> used(a.cols(), 0);
  auto try_add = [&](int j) {
    if (used[j] || static_cast<Eigen::Index>(basis.size()) == m) return;
    Eigen::VectorXd v = a.col(j);
    const double scale = 1.0 + v.norm();
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : ortho) v -= q.dot(v) * q;
    }
    const double nv = v.norm();
    if (nv > 1e-9 * scale) {
      ortho.push_back(v / nv);
      basis.push_back(j);
      used[j] = 1;
    }
  };
  for (int j : preferred) try_add(j);
  for (Eigen::Index j = 0; j < a.cols(); ++j) try_add(static_cast<int>(j));
  return basis;
}

struct QueuedBasis {
  double objective;
  std::vector<int> basis;
  bool operator>(const QueuedBasis& o) const {
    if (objective != o.objective) return objective > o.objective;
    return basis > o.basis;
  }
};

}  // namespace

CandidateSet enumerate_linear_solutions(const LinearEnumerationRequest& req) {
  if (req.k_limit < 1) throw InputError("k_limit must be at least 1");
  const LinearProgram& model = req.model;
  model.validate();
  if (model.sense != Sense::kMinimize) {
    throw InputError("enumerate_linear_solutions expects a minimization model");
  }

  LinearProgram bounded = model;
  bounded.add_row(model.objective, RowSense::kLessEqual,
                  req.tau - model.objective_offset);
  CandidateSet out;
  const StandardForm sf = standardize(bounded);
  // sf.lp is already standard, so its solution lives in standardized space.
  const LpSolution start = solve_lp(sf.lp);
  if (start.status == LpStatus::kInfeasible) {
    out.exhausted = true;
    return out;
  }
  if (start.status == LpStatus::kUnbounded) {
    throw SolverError("sublevel set is unbounded; vertices cannot be exhausted");
  }

  const std::vector<int> rows = independent_rows(sf.lp.constraints);
  const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index n = sf.lp.num_vars();
  Eigen::MatrixXd a(m, n);
  Eigen::VectorXd b(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    a.row(i) = sf.lp.constraints.row(rows[i]);
    b(i) = sf.lp.rhs(rows[i]);
  }

  // Starting basis over the independent rows: the support of the optimal
  // vertex first, then the solver's structural basic columns.
  {
    std::vector<int> preferred;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (start.primal(j) > 1e-9) preferred.push_back(static_cast<int>(j));
    }
    for (int j : start.basis) {
      if (j < n) preferred.push_back(j);
    }
    std::vector<int> basis0 = complete_basis(a, preferred);
    if (static_cast<Eigen::Index>(basis0.size()) != m) {
      throw SolverError("could not assemble a starting basis");
    }
    std::sort(basis0.begin(), basis0.end());

    const double feas = 1e-9;
    std::set<std::vector<int>> seen;
    std::priority_queue<QueuedBasis, std::vector<QueuedBasis>,
                        std::greater<QueuedBasis>>
        frontier;
    std::vector<Candidate> vertices;

    auto basic_solution = [&](const std::vector<int>& basis,
                              Eigen::PartialPivLU<Eigen::MatrixXd>& lu) {
      Eigen::MatrixXd bm(m, m);
      for (Eigen::Index i = 0; i < m; ++i) bm.col(i) = a.col(basis[i]);
      lu.compute(bm);
      return Eigen::VectorXd(lu.solve(b));
    };
    auto objective_of = [&](const std::vector<int>& basis,
                            const Eigen::VectorXd& xb) {
      Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
      for (Eigen::Index i = 0; i < m; ++i) z(basis[i]) = std::max(0.0, xb(i));
      return model.evaluate(sf.recover(z));
    };

    {
      Eigen::PartialPivLU<Eigen::MatrixXd> lu;
      const Eigen::VectorXd xb = basic_solution(basis0, lu);
      if (m > 0 && xb.minCoeff() < -1e-7 * (1.0 + b.lpNorm<Eigen::Infinity>())) {
        throw SolverError("starting basis is not primal feasible");
      }
      seen.insert(basis0);
      frontier.push({objective_of(basis0, xb), basis0});
    }

    while (!frontier.empty()) {
      QueuedBasis cur = frontier.top();
      frontier.pop();
      Eigen::PartialPivLU<Eigen::MatrixXd> lu;
      const Eigen::VectorXd xb = basic_solution(cur.basis, lu);
      Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
      for (Eigen::Index i = 0; i < m; ++i) {
        z(cur.basis[i]) = std::max(0.0, xb(i));
      }
      const Eigen::VectorXd x = sf.recover(z);
      const double obj = model.evaluate(x);
      bool fresh = true;
      for (const Candidate& v : vertices) {
        if (same_point(v.point, x, req.dedupe_tol)) {
          fresh = false;
          break;
        }
      }
      if (fresh) vertices.push_back({x, obj});

      std::vector<char> in_basis(n, 0);
      for (int j : cur.basis) in_basis[j] = 1;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (in_basis[j]) continue;
        const Eigen::VectorXd u = lu.solve(a.col(j));
        double min_ratio = kInf;
        for (Eigen::Index i = 0; i < m; ++i) {
          if (u(i) > feas) {
            min_ratio = std::min(min_ratio, std::max(0.0, xb(i)) / u(i));
          }
        }
        if (min_ratio == kInf) {
          Eigen::VectorXd dz = Eigen::VectorXd::Zero(n);
          dz(j) = 1.0;
          for (Eigen::Index i = 0; i < m; ++i) dz(cur.basis[i]) = -u(i);
          if (sf.recover_direction(dz).norm() > 1e-9) {
            throw SolverError(
                "sublevel set is unbounded; vertices cannot be exhausted");
          }
          continue;  // split-column artifact of a free variable
        }
        const double tie = 1e-9 * (1.0 + min_ratio);
        for (Eigen::Index i = 0; i < m; ++i) {
          if (u(i) <= feas) continue;
          if (std::max(0.0, xb(i)) / u(i) > min_ratio + tie) continue;
          std::vector<int> next = cur.basis;
          next[i] = static_cast<int>(j);
          std::sort(next.begin(), next.end());
          if (!seen.insert(next).second) continue;
          Eigen::PartialPivLU<Eigen::MatrixXd> nlu;
          const Eigen::VectorXd nxb = basic_solution(next, nlu);
          frontier.push({objective_of(next, nxb), std::move(next)});
        }
      }
    }

    sort_candidates(vertices);
    out.exhausted = static_cast<int>(vertices.size()) <= req.k_limit;
    if (!out.exhausted) vertices.resize(req.k_limit);
    out.points = std::move(vertices);
  }
  return out;
}

CandidateSet enumerate_binary_solutions(const BinaryEnumerationRequest& req) {
  if (req.k_limit < 1) throw InputError("k_limit must be at least 1");
  const MixedBinaryProgram& model = req.model;
  model.validate();
  if (model.base_lp.sense != Sense::kMinimize) {
    throw InputError("enumerate_binary_solutions expects a minimization model");
  }
  const double limit = req.tau + tau_slack(req.tau);
  std::vector<LinearConstraint> cuts;
  CandidateSet out;
  for (;;) {
    const LpSolution sol = solve_bip_with_extra_cuts(model, cuts);
    if (sol.status != LpStatus::kOptimal || sol.objective > limit) {
      out.exhausted = true;
      break;
    }
    if (static_cast<int>(out.points.size()) == req.k_limit) {
      out.exhausted = false;
      break;
    }
    out.points.push_back({sol.primal, sol.objective});
    cuts.push_back(no_good_cut(model, sol.primal));
  }
  sort_candidates(out.points);
  return out;
}

}  // namespace aos
