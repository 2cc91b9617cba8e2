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

#include "aos/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>

#include "aos/parallel.hpp"

namespace aos {

ToleranceSpec ToleranceSpec::absolute(double eps) {
  ToleranceSpec t{Kind::kAbsolute, eps};
  t.validate();
  return t;
}

ToleranceSpec ToleranceSpec::relative(double alpha) {
  ToleranceSpec t{Kind::kRelative, alpha};
  t.validate();
  return t;
}

ToleranceSpec ToleranceSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw InputError("tolerance '" + text + "' must be abs:<eps> or rel:<alpha>");
  }
  const std::string kind = text.substr(0, colon);
  const std::string num = text.substr(colon + 1);
  char* end = nullptr;
  const double v = std::strtod(num.c_str(), &end);
  if (num.empty() || end != num.c_str() + num.size()) {
    throw InputError("tolerance '" + text + "' has a malformed number");
  }
  if (kind == "abs") return absolute(v);
  if (kind == "rel") return relative(v);
  throw InputError("tolerance kind '" + kind + "' must be abs or rel");
}

double ToleranceSpec::resolve(double z_star) const {
  return kind == Kind::kAbsolute ? z_star + value
                                 : z_star + value * std::abs(z_star);
}

std::string ToleranceSpec::to_string() const {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s:%.10g",
                kind == Kind::kAbsolute ? "abs" : "rel", value);
  return buf;
}

void ToleranceSpec::validate() const {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw InputError("tolerance must be finite and nonnegative");
  }
}

double cert_tol(double tau) { return 1e-6 * (1.0 + std::abs(tau)); }

Certification certify(const TwoStageProblem& p,
                      const Eigen::Ref<const Eigen::VectorXd>& x, double tau) {
  const ValueFunctionResult vf = evaluate_Q(p, x);
  Certification c;
  c.true_objective = first_stage_cost(p, x) + vf.q_value;
  c.accepted = c.true_objective <= tau + cert_tol(tau);
  return c;
}

CandidateSet master_candidates(const TwoStageProblem& p, const CutPool& pool,
                               double tau, int k_limit) {
  const MasterProblem master = build_master(p, pool);
  CandidateSet raw;
  if (master.is_binary()) {
    raw = enumerate_binary_solutions({master.model, tau, k_limit});
  } else {
    raw = enumerate_linear_solutions({master.model.base_lp, tau, k_limit});
  }
  const int n1 = p.num_x();
  CandidateSet out;
  out.exhausted = raw.exhausted;
  for (const Candidate& c : raw.points) {
    Eigen::VectorXd x = c.point.head(n1);
    for (int j = 0; j < n1; ++j) {
      if (p.x_domains[j] == Domain::kBinary) x(j) = std::round(x(j));
    }
    bool fresh = true;
    for (const Candidate& seen : out.points) {
      if (same_point(seen.point, x, 1e-6)) {
        fresh = false;
        break;
      }
    }
    if (fresh) out.points.push_back({std::move(x), c.objective});
  }
  return out;
}

CertifiedSet enumerate_and_certify(const TwoStageProblem& p,
                                   const CutPool& pool, double tau,
                                   int k_limit) {
  const CandidateSet cands = master_candidates(p, pool, tau, k_limit);
  CertifiedSet out;
  out.tau = tau;
  out.master_exhausted = cands.exhausted;
  const int n = static_cast<int>(cands.points.size());
  out.candidates = parallel_map(n, [&](int i) {
    const Candidate& c = cands.points[i];
    const Certification cert = certify(p, c.point, tau);
    return CertifiedPoint{c.point, c.objective, cert.true_objective,
                          cert.accepted};
  });
  for (const CertifiedPoint& cp : out.candidates) {
    (cp.accepted ? out.accepted : out.rejected).push_back(cp);
  }
  return out;
}

AosResult aos_benders(const TwoStageProblem& p, const AosOptions& options) {
  options.tolerance.validate();
  if (options.k_limit < 1) throw InputError("k_limit must be at least 1");
  AosResult out;
  out.benders = solve_benders(p, options.benders);
  if (!out.benders.converged) {
    std::string why = "Benders did not converge after " +
                      std::to_string(out.benders.iterations) + " iterations";
    if (!out.benders.events.empty()) why += ": " + out.benders.events.back();
    throw NonConvergenceError(why, std::move(out.benders));
  }
  const double tau = options.tolerance.resolve(out.benders.z_star);
  out.certified =
      enumerate_and_certify(p, out.benders.cut_pool, tau, options.k_limit);
  return out;
}

namespace {

struct ScenarioBudget {
  LinearProgram min_form;  // enumeration model
  double bound = 0.0;      // tau for the enumeration model
};

ScenarioBudget scenario_budget(const TwoStageProblem& p,
                               const Eigen::Ref<const Eigen::VectorXd>& x,
                               double tau, int s) {
  const Certification cert = certify(p, x, tau);
  if (!cert.accepted) {
    throw PreconditionError("first-stage point does not certify at tau (" +
                            std::to_string(cert.true_objective) + " > " +
                            std::to_string(tau) + ")");
  }
  const ValueFunctionResult vf = evaluate_Q(p, x);
  const double ps = p.scenarios[s].probability;
  if (!(ps > 0.0)) {
    throw PreconditionError("scenario " + std::to_string(s) +
                            " has zero probability");
  }
  double others = 0.0;
  for (std::size_t o = 0; o < p.scenarios.size(); ++o) {
    if (static_cast<int>(o) != s) {
      others += p.scenarios[o].probability * vf.per_scenario[o].value;
    }
  }
  const double w = (tau - first_stage_cost(p, x) - others) / ps;
  const double q_s = vf.per_scenario[s].value;
  // Certification passed within cert_tol, so the slack may be a hair negative.
  const double slack = std::max(0.0, w - q_s);
  ScenarioBudget out;
  out.min_form = scenario_lp(p, s, x);
  if (out.min_form.sense == Sense::kMaximize) {
    out.min_form.sense = Sense::kMinimize;
    out.min_form.objective = -out.min_form.objective;
    out.min_form.objective_offset = -out.min_form.objective_offset;
    out.bound = -q_s + slack;
  } else {
    out.bound = q_s + slack;
  }
  return out;
}

}  // namespace

CandidateSet second_stage_alternatives(const TwoStageProblem& p,
                                       const Eigen::Ref<const Eigen::VectorXd>& x,
                                       double tau, int scenario_index,
                                       int k_limit) {
  if (scenario_index < 0 ||
      scenario_index >= static_cast<int>(p.scenarios.size())) {
    throw InputError("scenario index " + std::to_string(scenario_index) +
                     " out of range");
  }
  const ScenarioBudget sb = scenario_budget(p, x, tau, scenario_index);
  CandidateSet out = enumerate_linear_solutions({sb.min_form, sb.bound, k_limit});
  if (p.cut_form == CutForm::kPrimalPath) {
    for (Candidate& c : out.points) c.objective = -c.objective;
  }
  return out;
}

EfRecord reconstruct_ef(const TwoStageProblem& p,
                        const Eigen::Ref<const Eigen::VectorXd>& x,
                        const std::vector<Eigen::VectorXd>& y, double tau) {
  if (y.size() != p.scenarios.size()) {
    throw InputError("reconstruct_ef: expected one recourse vector per scenario");
  }
  const ValueFunctionResult vf = evaluate_Q(p, x);
  EfRecord rec;
  rec.x = x;
  rec.y = y;
  rec.first_stage_cost = first_stage_cost(p, x);
  rec.expected_recourse = vf.q_value;
  for (std::size_t s = 0; s < y.size(); ++s) {
    const LinearProgram lp = scenario_lp(p, static_cast<int>(s), x);
    if (y[s].size() != lp.num_vars()) {
      throw InputError("reconstruct_ef: scenario " + std::to_string(s) +
                       " recourse has the wrong length");
    }
    const double viol = lp.max_violation(y[s]);
    rec.max_violation = std::max(rec.max_violation, viol);
    if (viol > 1e-7) {
      throw PreconditionError("reconstruct_ef: scenario " + std::to_string(s) +
                              " recourse violates its constraints by " +
                              std::to_string(viol));
    }
    const double value = lp.evaluate(y[s]);
    rec.recourse_values.push_back(value);
    rec.recourse_gap += p.scenarios[s].probability *
                        std::abs(value - vf.per_scenario[s].value);
  }
  rec.objective = rec.first_stage_cost + rec.expected_recourse + rec.recourse_gap;
  rec.residual = tau - rec.objective;
  if (rec.residual < -cert_tol(tau)) {
    throw ModelError("reconstruct_ef: assembled objective " +
                     std::to_string(rec.objective) + " exceeds tau " +
                     std::to_string(tau));
  }
  return rec;
}

}  // namespace aos
