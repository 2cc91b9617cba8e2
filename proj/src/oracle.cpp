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

#include "aos/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "aos/errors.hpp"
#include "aos/parallel.hpp"

namespace aos {

namespace {

constexpr double kMemberTol = 1e-7;

double member_tol(double tau) { return kMemberTol * (1.0 + std::abs(tau)); }

bool lex_before(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

// Bellman-Ford over (tail, head, cost) arcs. Returns nullopt when `dst` is
// unreachable; throws ModelError on a negative cycle.
std::optional<double> label_correcting(int num_nodes,
                                       const std::vector<int>& tail,
                                       const std::vector<int>& head,
                                       const std::vector<double>& cost,
                                       int src, int dst) {
  std::vector<double> dist(num_nodes, kInf);
  dist[src] = 0.0;
  for (int round = 0; round < num_nodes; ++round) {
    bool changed = false;
    for (std::size_t k = 0; k < tail.size(); ++k) {
      if (dist[tail[k]] == kInf) continue;
      const double cand = dist[tail[k]] + cost[k];
      if (cand < dist[head[k]] - 1e-12 * (1.0 + std::abs(cand))) {
        dist[head[k]] = cand;
        changed = true;
      }
    }
    if (!changed) {
      if (dist[dst] == kInf) return std::nullopt;
      return dist[dst];
    }
  }
  throw ModelError("negative-cost cycle: shortest path unbounded");
}

}  // namespace

double path_recourse_value(const TwoStageProblem& p,
                           const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (p.cut_form != CutForm::kPrimalPath) {
    throw InputError("path oracle needs a path-shaped (primal_path) recourse");
  }
  double total = 0.0;
  for (std::size_t s = 0; s < p.scenarios.size(); ++s) {
    const Scenario& sc = p.scenarios[s];
    const int nodes = static_cast<int>(sc.h.size());
    const int arcs = static_cast<int>(sc.q.size());
    int src = -1;
    int dst = -1;
    for (int i = 0; i < nodes; ++i) {
      if (sc.senses[i] != RowSense::kEqual) {
        throw InputError("path oracle: recourse rows must be equalities");
      }
      if (sc.h(i) == 1.0 && src < 0) {
        src = i;
      } else if (sc.h(i) == -1.0 && dst < 0) {
        dst = i;
      } else if (sc.h(i) != 0.0) {
        throw InputError("path oracle: rhs is not a unit s-t demand");
      }
    }
    if (src < 0 || dst < 0) {
      throw InputError("path oracle: rhs is not a unit s-t demand");
    }
    std::vector<int> tail(arcs);
    std::vector<int> head(arcs);
    std::vector<double> cost(arcs);
    for (int k = 0; k < arcs; ++k) {
      int from = -1;
      int to = -1;
      for (int i = 0; i < nodes; ++i) {
        const double v = sc.W(i, k);
        if (v == 1.0 && from < 0) {
          from = i;
        } else if (v == -1.0 && to < 0) {
          to = i;
        } else if (v != 0.0) {
          from = to = -2;
          break;
        }
      }
      if (from < 0 || to < 0) {
        throw InputError("path oracle: column " + std::to_string(k) +
                         " is not an arc of a node-arc incidence matrix");
      }
      tail[k] = from;
      head[k] = to;
      double profit = sc.q(k);
      if (sc.C.size() > 0) profit += sc.C.row(k).dot(x);
      cost[k] = -profit;
    }
    const std::optional<double> len =
        label_correcting(nodes, tail, head, cost, src, dst);
    if (!len) {
      throw ModelError("scenario " + std::to_string(s) +
                       ": sink unreachable from source");
    }
    total += sc.probability * -*len;
  }
  return total;
}

OracleReport brute_force_binary(const TwoStageProblem& p, double tau,
                                const QEvaluator& q_eval) {
  p.validate();
  if (!p.all_binary()) {
    throw InputError("brute_force_binary: every first-stage variable must be binary");
  }
  const int n = p.num_x();
  if (n > 20) {
    throw InputError("brute_force_binary: " + std::to_string(n) +
                     " binaries exceed the limit of 20");
  }
  const QEvaluator q = q_eval ? q_eval : QEvaluator([&p](const auto& x) {
    return path_recourse_value(p, x);
  });
  const double limit = tau + 1e-6 * (1.0 + std::abs(tau));
  const int masks = 1 << n;
  const std::vector<std::optional<Candidate>> hits =
      parallel_map(masks, [&](int mask) -> std::optional<Candidate> {
        Eigen::VectorXd x(n);
        for (int j = 0; j < n; ++j) x(j) = (mask >> j) & 1;
        if (first_stage_violation(p, x) > 1e-9) return std::nullopt;
        const double obj = first_stage_cost(p, x) + q(x);
        if (obj > limit) return std::nullopt;
        return Candidate{std::move(x), obj};
      });
  OracleReport out;
  out.tau = tau;
  out.method = OracleReport::Method::kBinaryExhaustive;
  for (const auto& h : hits) {
    if (h) out.exact_set.push_back(*h);
  }
  return out;
}

double interdicted_path_length(const InterdictionGraph& g,
                               const Eigen::Ref<const Eigen::VectorXd>& x) {
  g.validate();
  const int arcs = static_cast<int>(g.arcs.size());
  std::vector<int> tail(arcs);
  std::vector<int> head(arcs);
  std::vector<double> cost(arcs);
  for (int k = 0; k < arcs; ++k) {
    tail[k] = g.node_index(g.arcs[k].from);
    head[k] = g.node_index(g.arcs[k].to);
    cost[k] = g.arcs[k].c + x(k) * g.arcs[k].d;
  }
  const std::optional<double> len =
      label_correcting(static_cast<int>(g.nodes.size()), tail, head, cost,
                       g.node_index(g.s), g.node_index(g.t));
  if (!len) throw ModelError("graph: sink unreachable");
  return *len;
}

std::vector<std::vector<int>> simple_paths(const InterdictionGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> on_path(g.nodes.size(), 0);
  std::function<void(const std::string&)> walk = [&](const std::string& at) {
    if (at == g.t) {
      out.push_back(path);
      return;
    }
    on_path[g.node_index(at)] = 1;
    for (std::size_t k = 0; k < g.arcs.size(); ++k) {
      const Arc& a = g.arcs[k];
      if (a.from != at || on_path[g.node_index(a.to)]) continue;
      path.push_back(static_cast<int>(k));
      walk(a.to);
      path.pop_back();
    }
    on_path[g.node_index(at)] = 0;
  };
  walk(g.s);
  return out;
}

EfDirectResult solve_ef_direct(const TwoStageProblem& p) {
  const ExtensiveForm ef = build_extensive_form(p);
  const LpSolution sol =
      ef.is_binary() ? solve_bip(ef.model) : solve_lp(ef.model.base_lp);
  EfDirectResult out;
  out.status = sol.status;
  if (sol.status != LpStatus::kOptimal) return out;
  out.z_star = sol.objective;
  out.solution = sol.primal;
  out.x = sol.primal.head(ef.num_x);
  return out;
}

OracleReport ef_direct_binary(const TwoStageProblem& p, double tau) {
  const ExtensiveForm ef = build_extensive_form(p);
  if (!ef.is_binary() || !p.all_binary()) {
    throw InputError("ef_direct_binary: first stage must be binary");
  }
  const double limit = tau + 1e-6 * (1.0 + std::abs(tau));
  std::vector<LinearConstraint> cuts;
  OracleReport out;
  out.tau = tau;
  out.method = OracleReport::Method::kEfDirect;
  for (;;) {
    const LpSolution sol = solve_bip_with_extra_cuts(ef.model, cuts);
    if (sol.status != LpStatus::kOptimal || sol.objective > limit) break;
    Eigen::VectorXd x = sol.primal.head(ef.num_x).array().round();
    out.exact_set.push_back({x, sol.objective});
    cuts.push_back(no_good_cut(ef.model, sol.primal));
  }
  std::sort(out.exact_set.begin(), out.exact_set.end(),
            [](const Candidate& a, const Candidate& b) {
              return lex_before(a.point, b.point);
            });
  return out;
}

OracleReport vertex_bruteforce(const LinearProgram& lp, double tau) {
  lp.validate();
  if (lp.sense != Sense::kMinimize) {
    throw InputError("vertex_bruteforce expects a minimization model");
  }
  const int n = lp.num_vars();
  if (n > 6) throw InputError("vertex_bruteforce: at most 6 variables");
  // Hyperplanes a'x = b: rows, finite bounds and the objective level.
  std::vector<Eigen::VectorXd> normals;
  std::vector<double> levels;
  for (int i = 0; i < lp.num_rows(); ++i) {
    normals.push_back(lp.constraints.row(i).transpose());
    levels.push_back(lp.rhs(i));
  }
  for (int j = 0; j < n; ++j) {
    for (double bound : {lp.lower(j), lp.upper(j)}) {
      if (!std::isfinite(bound)) continue;
      normals.push_back(Eigen::VectorXd::Unit(n, j));
      levels.push_back(bound);
    }
  }
  normals.push_back(lp.objective);
  levels.push_back(tau - lp.objective_offset);

  const int h = static_cast<int>(normals.size());
  const double limit = tau + 1e-7 * (1.0 + std::abs(tau));
  OracleReport out;
  out.tau = tau;
  out.method = OracleReport::Method::kVertexBruteforce;
  std::vector<int> pick(n);
  std::function<void(int, int)> choose = [&](int depth, int from) {
    if (depth == n) {
      Eigen::MatrixXd a(n, n);
      Eigen::VectorXd b(n);
      for (int i = 0; i < n; ++i) {
        a.row(i) = normals[pick[i]].transpose();
        b(i) = levels[pick[i]];
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
      lu.setThreshold(1e-10);
      if (lu.rank() < n) return;
      const Eigen::VectorXd x = lu.solve(b);
      if (lp.max_violation(x) > 1e-7 * (1.0 + x.lpNorm<Eigen::Infinity>())) {
        return;
      }
      const double obj = lp.evaluate(x);
      if (obj > limit) return;
      for (const Candidate& c : out.exact_set) {
        if (same_point(c.point, x, 1e-6)) return;
      }
      out.exact_set.push_back({x, obj});
      return;
    }
    for (int k = from; k <= h - (n - depth); ++k) {
      pick[depth] = k;
      choose(depth + 1, k + 1);
    }
  };
  if (n == 0) {
    if (lp.max_violation(Eigen::VectorXd()) <= 1e-7 &&
        lp.objective_offset <= limit) {
      out.exact_set.push_back({Eigen::VectorXd(), lp.objective_offset});
    }
  } else {
    choose(0, 0);
  }
  std::sort(out.exact_set.begin(), out.exact_set.end(),
            [](const Candidate& a, const Candidate& b) {
              return lex_before(a.point, b.point);
            });
  return out;
}

OracleReport binary_program_bruteforce(const MixedBinaryProgram& p,
                                       double tau) {
  p.validate();
  const LinearProgram& lp = p.base_lp;
  const int n = lp.num_vars();
  if (static_cast<int>(p.binary_vars.size()) != n) {
    throw InputError("binary_program_bruteforce: every variable must be binary");
  }
  if (n > 16) throw InputError("binary_program_bruteforce: at most 16 variables");
  if (lp.sense != Sense::kMinimize) {
    throw InputError("binary_program_bruteforce expects a minimization model");
  }
  const double limit = tau + 1e-7 * (1.0 + std::abs(tau));
  OracleReport out;
  out.tau = tau;
  out.method = OracleReport::Method::kBinaryExhaustive;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Eigen::VectorXd x(n);
    for (int j = 0; j < n; ++j) x(j) = (mask >> j) & 1;
    if (lp.max_violation(x) > 1e-9) continue;
    const double obj = lp.evaluate(x);
    if (obj <= limit) out.exact_set.push_back({x, obj});
  }
  std::sort(out.exact_set.begin(), out.exact_set.end(),
            [](const Candidate& a, const Candidate& b) {
              return lex_before(a.point, b.point);
            });
  return out;
}

bool in_level_bm(const TwoStageProblem& p, const CutPool& pool,
                 const Eigen::Ref<const Eigen::VectorXd>& x, double theta,
                 double tau) {
  if (first_stage_violation(p, x) > kMemberTol) return false;
  const double tol = member_tol(tau);
  if (theta < pool.evaluate(x) - tol) return false;
  return first_stage_cost(p, x) + theta <= tau + tol;
}

bool in_level_ev(const TwoStageProblem& p,
                 const Eigen::Ref<const Eigen::VectorXd>& x, double theta,
                 double tau) {
  if (first_stage_violation(p, x) > kMemberTol) return false;
  const double tol = member_tol(tau);
  if (theta < evaluate_Q(p, x).q_value - tol) return false;
  return first_stage_cost(p, x) + theta <= tau + tol;
}

bool in_level_pv(const TwoStageProblem& p,
                 const Eigen::Ref<const Eigen::VectorXd>& x, double tau) {
  if (first_stage_violation(p, x) > kMemberTol) return false;
  return first_stage_cost(p, x) + evaluate_Q(p, x).q_value <=
         tau + member_tol(tau);
}

bool in_level_ef(const TwoStageProblem& p,
                 const Eigen::Ref<const Eigen::VectorXd>& x,
                 const std::vector<Eigen::VectorXd>& y, double tau) {
  if (p.cut_form != CutForm::kDualStandard) {
    throw InputError("in_level_ef: recourse must be in dual_standard form");
  }
  if (y.size() != p.scenarios.size()) return false;
  if (first_stage_violation(p, x) > kMemberTol) return false;
  double obj = first_stage_cost(p, x);
  for (std::size_t s = 0; s < y.size(); ++s) {
    const LinearProgram lp = scenario_lp(p, static_cast<int>(s), x);
    if (y[s].size() != lp.num_vars()) return false;
    if (lp.max_violation(y[s]) > kMemberTol) return false;
    obj += p.scenarios[s].probability * lp.evaluate(y[s]);
  }
  return obj <= tau + member_tol(tau);
}

CutPool AbsValueCounterexample::pool(const std::vector<double>& vertices) const {
  const Scenario& sc = problem.scenarios.front();
  CutPool out;
  for (double pi : vertices) {
    const Eigen::VectorXd v = Eigen::VectorXd::Constant(1, pi);
    Cut c;
    c.alpha = v.dot(sc.h);
    c.beta = -(sc.T.transpose() * v);
    out.add(c);
  }
  return out;
}

double AbsValueCounterexample::q(double x) const {
  return evaluate_Q(problem, Eigen::VectorXd::Constant(1, x)).q_value;
}

double AbsValueCounterexample::q_hat(double x,
                                     const std::vector<double>& vertices) const {
  return pool(vertices).evaluate(Eigen::VectorXd::Constant(1, x));
}

bool AbsValueCounterexample::in_epi_q(double x, double theta) const {
  return theta >= q(x);
}

bool AbsValueCounterexample::in_epi_q_hat(
    double x, double theta, const std::vector<double>& vertices) const {
  return theta >= q_hat(x, vertices);
}

bool AbsValueCounterexample::level_ef_empty(double tau) const {
  const EfDirectResult ef = solve_ef_direct(problem);
  if (ef.status == LpStatus::kInfeasible) return true;
  if (ef.status == LpStatus::kUnbounded) return false;
  return ef.z_star > tau;
}

AbsValueCounterexample counterexample_absQ() {
  AbsValueCounterexample out;
  TwoStageProblem& p = out.problem;
  p.name = "abs-value";
  p.g_coeffs = Eigen::VectorXd::Zero(1);
  p.x_A = Eigen::MatrixXd::Ones(2, 1);
  p.x_senses = {RowSense::kLessEqual, RowSense::kGreaterEqual};
  p.x_b = Eigen::Vector2d(1.0, -1.0);
  p.x_domains = {Domain::kFree};
  p.x_labels = {"x"};
  p.cut_form = CutForm::kDualStandard;
  Scenario s;
  s.q = Eigen::Vector2d(1.0, 1.0);
  s.W = Eigen::RowVector2d(1.0, -1.0);
  s.T = Eigen::MatrixXd::Constant(1, 1, -1.0);
  s.h = Eigen::VectorXd::Zero(1);
  s.senses = {RowSense::kEqual};
  p.scenarios.push_back(std::move(s));
  p.theta_floor = 0.0;  // Q(x) = |x| >= 0
  p.validate();
  out.dual_vertices = {-1.0, 1.0};
  return out;
}

}  // namespace aos
