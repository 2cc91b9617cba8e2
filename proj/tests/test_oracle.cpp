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

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "aos/benders.hpp"
#include "aos/errors.hpp"
#include "aos/models.hpp"
#include "aos/oracle.hpp"
#include "aos/pipeline.hpp"
#include "test_util.hpp"

namespace aos {
namespace {

using testing::vec;
using Attack = std::vector<std::string>;

std::set<Attack> attacks(const InterdictionGraph& g, const std::vector<Candidate>& pts) {
  std::set<Attack> out;
  for (const Candidate& c : pts) out.insert(interdicted_arcs(g, c.point));
  return out;
}

// Shortest interdicted path by scanning the simple-path list.
double path_scan(const InterdictionGraph& g, const Eigen::VectorXd& x) {
  double best = kInf;
  for (const auto& path : simple_paths(g)) {
    double len = 0.0;
    for (int k : path) len += g.arcs[k].c + x(k) * g.arcs[k].d;
    best = std::min(best, len);
  }
  return best;
}

TEST_CASE("reference graph structure") {
  const InterdictionGraph g = reference_graph();
  CHECK(g.arcs.size() == 11);
  const auto paths = simple_paths(g);
  CHECK(paths.size() == 9);
  std::vector<int> uses(g.arcs.size(), 0);
  std::size_t shortest = 100;
  for (const auto& path : paths) {
    shortest = std::min(shortest, path.size());
    for (int k : path) ++uses[k];
  }
  CHECK(shortest == 3);
  std::vector<std::string> chokepoints;
  for (std::size_t k = 0; k < g.arcs.size(); ++k) {
    if (uses[k] == static_cast<int>(paths.size())) chokepoints.push_back(g.arc_label(static_cast<int>(k)));
  }
  CHECK(chokepoints == std::vector<std::string>{"c->d"});
  CHECK(interdicted_path_length(g, Eigen::VectorXd::Zero(11)) == 3.0);
}

TEST_CASE("path oracles agree with each other") {
  const InterdictionGraph g = reference_graph(11);
  const TwoStageProblem p = build_mxsp(g);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Eigen::VectorXd x = testing::random_mask(11, static_cast<int>(rng() % 12), rng);
    const double scan = path_scan(g, x);
    CHECK(interdicted_path_length(g, x) == doctest::Approx(scan));
    CHECK(path_recourse_value(p, x) == doctest::Approx(-scan));
  }
  CHECK_THROWS_AS(path_recourse_value(build_farmer(farmer_config(1)), vec({0, 0, 0})),
                  InputError);
}

TEST_CASE("brute force over all attacks") {
  const std::vector<std::set<Attack>> expected{
      {{"c->d"}}, {{"s->c", "c->d"}, {"c->d", "d->t"}}, {{"s->c", "c->d", "d->t"}}};
  for (int m = 1; m <= 3; ++m) {
    const InterdictionGraph g = reference_graph(m);
    const TwoStageProblem p = build_mxsp(g);
    const OracleReport ref = brute_force_binary(p, -(5.0 + m));
    CHECK(ref.method == OracleReport::Method::kBinaryExhaustive);
    CHECK(attacks(g, ref.exact_set) == expected[m - 1]);
    for (const Candidate& c : ref.exact_set) CHECK(c.objective == doctest::Approx(-(5.0 + m)));
    const OracleReport ef = ef_direct_binary(p, -(5.0 + m));
    CHECK(ef.method == OracleReport::Method::kEfDirect);
    CHECK(attacks(g, ef.exact_set) == expected[m - 1]);
  }
  const OracleReport none = brute_force_binary(build_mxsp(reference_graph(0)), -3);
  REQUIRE(none.exact_set.size() == 1);
  CHECK(none.exact_set[0].point.isZero());
}

TEST_CASE("brute force refuses what it cannot enumerate") {
  CHECK_THROWS_AS(brute_force_binary(build_farmer(farmer_config(1)), 0), InputError);
  InterdictionGraph big = reference_graph(1);
  for (int k = 0; k < 10; ++k) big.arcs.push_back({"s", "t", 9, 1, 1});
  CHECK_THROWS_AS(brute_force_binary(build_mxsp(big), 0), InputError);
  CHECK_THROWS_AS(ef_direct_binary(build_farmer(farmer_config(1)), 0), InputError);

  LinearProgram wide = LinearProgram::with_vars(7);
  wide.upper = Eigen::VectorXd::Ones(7);
  CHECK_THROWS_AS(vertex_bruteforce(wide, 1), InputError);
  MixedBinaryProgram many;
  many.base_lp = LinearProgram::with_vars(17);
  many.base_lp.upper = Eigen::VectorXd::Ones(17);
  for (int j = 0; j < 17; ++j) many.binary_vars.push_back(j);
  CHECK_THROWS_AS(binary_program_bruteforce(many, 1), InputError);
}

TEST_CASE("extensive form solved directly") {
  const EfDirectResult f1 = solve_ef_direct(build_farmer(farmer_config(1)));
  REQUIRE(f1.status == LpStatus::kOptimal);
  CHECK(f1.z_star == doctest::Approx(-118600));
  CHECK(f1.x.isApprox(vec({120, 80, 300})));
  const EfDirectResult f3 = solve_ef_direct(build_farmer(farmer_config(3)));
  CHECK(f3.z_star == doctest::Approx(-108390));
  CHECK(f3.x.isApprox(vec({170, 80, 250})));
  const EfDirectResult m2 = solve_ef_direct(build_mxsp(reference_graph(2)));
  REQUIRE(m2.status == LpStatus::kOptimal);
  CHECK(m2.z_star == doctest::Approx(-7));
  for (int m = 0; m <= 3; ++m) {
    const TwoStageProblem p = build_mxsp(reference_graph(m));
    CHECK(solve_ef_direct(p).z_star == doctest::Approx(solve_benders(p).z_star));
  }
}

TEST_CASE("oracle exact set lies inside the master candidates") {
  for (int m = 1; m <= 3; ++m) {
    const InterdictionGraph g = reference_graph(m);
    const TwoStageProblem p = build_mxsp(g);
    const BendersResult b = solve_benders(p);
    for (int loosen = 0; loosen <= 2; ++loosen) {
      const double tau = b.z_star + loosen;
      const OracleReport ref = brute_force_binary(p, tau);
      const CandidateSet cand = master_candidates(p, b.cut_pool, tau, 2048);
      REQUIRE(cand.exhausted);
      const std::set<Attack> c = [&] {
        std::set<Attack> out;
        for (const Candidate& k : cand.points) out.insert(interdicted_arcs(g, k.point));
        return out;
      }();
      for (const Attack& a : attacks(g, ref.exact_set)) CHECK(c.count(a) == 1);
    }
  }
}

TEST_CASE("sublevel set relations on sampled points") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  SUBCASE("farmer") {
    for (int scenarios : {1, 3}) {
      const TwoStageProblem p = build_farmer(farmer_config(scenarios));
      const BendersResult b = solve_benders(p);
      const auto xs = testing::sample_first_stage(
          p, Eigen::VectorXd::Zero(3), Eigen::VectorXd::Constant(3, 500), 150, rng);
      for (double tau : {b.z_star, 0.99 * b.z_star, 0.5 * b.z_star, 0.0}) {
        for (const Eigen::VectorXd& x : xs) {
          const ValueFunctionResult vf = evaluate_Q(p, x);
          const double theta = vf.q_value + 2000.0 * (unit(rng) - 0.3);
          if (in_level_ev(p, x, theta, tau)) CHECK(in_level_bm(p, b.cut_pool, x, theta, tau));
          const bool pv = in_level_pv(p, x, tau);
          CHECK(pv == in_level_ev(p, x, vf.q_value, tau));
          std::vector<Eigen::VectorXd> ys;
          for (const ScenarioSolve& s : vf.per_scenario) ys.push_back(s.primal);
          CHECK(pv == in_level_ef(p, x, ys, tau));
        }
      }
    }
  }
  SUBCASE("absolute value") {
    const AbsValueCounterexample ce = counterexample_absQ();
    const CutPool full = ce.pool(ce.dual_vertices);
    for (double tau : {-1.0, 0.0, 0.25, 0.5, 1.0}) {
      for (int i = 0; i <= 40; ++i) {
        const Eigen::VectorXd x = vec({-1.0 + 0.05 * i});
        const double theta = -1.0 + 2.5 * unit(rng);
        if (in_level_ev(ce.problem, x, theta, tau)) {
          CHECK(in_level_bm(ce.problem, full, x, theta, tau));
        }
        const bool pv = in_level_pv(ce.problem, x, tau);
        CHECK(pv == in_level_ev(ce.problem, x, std::abs(x(0)), tau));
        // y = (x+, x-) is the optimal recourse.
        const Eigen::VectorXd y = vec({std::max(x(0), 0.0), std::max(-x(0), 0.0)});
        CHECK(pv == in_level_ef(ce.problem, x, {y}, tau));
      }
    }
  }
}

TEST_CASE("absolute value counterexample") {
  const AbsValueCounterexample ce = counterexample_absQ();
  CHECK(ce.dual_vertices == std::vector<double>{-1.0, 1.0});
  for (double x : {-1.0, -0.5, 0.0, 0.3, 1.0}) {
    CHECK(ce.q(x) == doctest::Approx(std::abs(x)));
    CHECK(evaluate_Q(ce.problem, vec({x})).q_value == doctest::Approx(std::abs(x)));
    CHECK(ce.q_hat(x, ce.dual_vertices) == doctest::Approx(std::abs(x)));
  }
  CHECK(ce.q(-1) == 1.0);
  CHECK(ce.q_hat(-1, {1.0}) == -1.0);
  CHECK(ce.in_epi_q_hat(-1, 0, {1.0}));
  CHECK_FALSE(ce.in_epi_q(-1, 0));

  const CutPool one = ce.pool({1.0});
  REQUIRE(one.size() == 1);
  CHECK(in_level_bm(ce.problem, one, vec({-1}), -1, -1));
  // g + theta = 0 here, so the epigraph point is not itself at level -1.
  CHECK_FALSE(in_level_bm(ce.problem, one, vec({-1}), 0, -1));
  CHECK(ce.level_ef_empty(-1));
  CHECK_FALSE(ce.level_ef_empty(0));
  for (int i = 0; i <= 20; ++i) CHECK_FALSE(in_level_pv(ce.problem, vec({-1.0 + 0.1 * i}), -1));

  const BendersResult b = solve_benders(ce.problem);
  REQUIRE(b.converged);
  CHECK(b.z_star == doctest::Approx(0).epsilon(1e-9));
  CHECK(std::abs(b.x_star(0)) <= 1e-9);
}

}  // namespace
}  // namespace aos
