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
#include <string>
#include <vector>

#include "doctest.h"

#include "aos/binary_solver.hpp"
#include "aos/errors.hpp"
#include "aos/models.hpp"
#include "test_util.hpp"

namespace aos {
namespace {

using testing::vec;

MixedBinaryProgram all_binary(int n, Sense sense = Sense::kMinimize) {
  MixedBinaryProgram p;
  p.base_lp = LinearProgram::with_vars(n, sense);
  p.base_lp.upper = Eigen::VectorXd::Ones(n);
  for (int j = 0; j < n; ++j) p.binary_vars.push_back(j);
  return p;
}

MixedBinaryProgram random_binary_program(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coef(-6, 6);
  MixedBinaryProgram p = all_binary(n);
  for (int j = 0; j < n; ++j) p.base_lp.objective(j) = coef(rng);
  const int m = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < m; ++i) {
    Eigen::VectorXd a(n);
    for (int j = 0; j < n; ++j) a(j) = std::abs(coef(rng));
    p.base_lp.add_row(a, RowSense::kLessEqual, std::floor(a.sum() / 2));
  }
  if (rng() % 2 == 0) {
    Eigen::VectorXd a = Eigen::VectorXd::Ones(n);
    p.base_lp.add_row(a, RowSense::kGreaterEqual, 1);
  }
  return p;
}

struct Exhaustive {
  double best = kInf;
  std::vector<Eigen::VectorXd> optimizers;
  std::vector<double> values;  // objective of every feasible point
};

// Direct enumeration of {0,1}^n; no LP involved.
Exhaustive exhaustive(const MixedBinaryProgram& p) {
  const LinearProgram& lp = p.base_lp;
  const int n = lp.num_vars();
  Exhaustive out;
  for (long mask = 0; mask < (1L << n); ++mask) {
    Eigen::VectorXd x(n);
    for (int j = 0; j < n; ++j) x(j) = (mask >> j) & 1;
    bool ok = true;
    for (int i = 0; i < lp.num_rows() && ok; ++i) {
      const double v = lp.constraints.row(i).dot(x);
      switch (lp.row_senses[i]) {
        case RowSense::kLessEqual: ok = v <= lp.rhs(i) + 1e-9; break;
        case RowSense::kGreaterEqual: ok = v >= lp.rhs(i) - 1e-9; break;
        case RowSense::kEqual: ok = std::abs(v - lp.rhs(i)) <= 1e-9; break;
      }
    }
    if (!ok) continue;
    const double f = lp.objective.dot(x);
    out.values.push_back(f);
    if (f < out.best - 1e-9) {
      out.best = f;
      out.optimizers.clear();
    }
    if (std::abs(f - out.best) <= 1e-9) out.optimizers.push_back(x);
  }
  return out;
}

bool contains(const std::vector<Eigen::VectorXd>& set, const Eigen::VectorXd& x) {
  for (const Eigen::VectorXd& s : set) {
    if ((s - x).cwiseAbs().maxCoeff() <= 1e-6) return true;
  }
  return false;
}

// max z over 11 arc variables and z in [0, 100], interdicting `budget` arcs,
// with z <= base + 3 * (sum of the listed arcs) per cut.
MixedBinaryProgram interdiction_master(
    const InterdictionGraph& g, double budget,
    const std::vector<std::pair<double, std::vector<std::string>>>& cuts) {
  const int n = static_cast<int>(g.arcs.size());
  MixedBinaryProgram p;
  p.base_lp = LinearProgram::with_vars(n + 1, Sense::kMaximize);
  p.base_lp.objective(n) = 1.0;
  p.base_lp.upper = Eigen::VectorXd::Ones(n + 1);
  p.base_lp.upper(n) = 100.0;
  for (int j = 0; j < n; ++j) p.binary_vars.push_back(j);
  Eigen::VectorXd budget_row = Eigen::VectorXd::Ones(n + 1);
  budget_row(n) = 0.0;
  p.base_lp.add_row(budget_row, RowSense::kLessEqual, budget);
  for (const auto& [base, arcs] : cuts) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(n + 1);
    row.head(n) = -3.0 * testing::attack(g, arcs);
    row(n) = 1.0;
    p.base_lp.add_row(row, RowSense::kLessEqual, base);
  }
  return p;
}

TEST_CASE("knapsack with a single slot") {
  MixedBinaryProgram p = all_binary(2, Sense::kMaximize);
  p.base_lp.objective << 1, 1;
  p.base_lp.add_row(vec({1, 1}), RowSense::kLessEqual, 1);
  const LpSolution sol = solve_bip(p);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective == doctest::Approx(1));
  CHECK(sol.primal.sum() == doctest::Approx(1));
}

TEST_CASE("interdiction masters with the printed cuts") {
  const InterdictionGraph g = reference_graph();
  const std::vector<std::string> short_path{"s->c", "c->d", "d->t"};
  const std::vector<std::string> via_a{"s->a", "a->c", "c->d", "d->t"};
  const std::vector<std::string> via_e{"s->c", "c->d", "d->e", "e->t"};

  SUBCASE("budget 1") {
    const MixedBinaryProgram p =
        interdiction_master(g, 1, {{3, short_path}, {4, via_a}});
    const LpSolution sol = solve_bip(p);
    REQUIRE(sol.status == LpStatus::kOptimal);
    CHECK(sol.objective == doctest::Approx(6));
    const Eigen::VectorXd x = sol.primal.head(11);
    CHECK((x.isApprox(testing::attack(g, {"c->d"})) ||
           x.isApprox(testing::attack(g, {"d->t"}))));
  }
  SUBCASE("budget 2") {
    const MixedBinaryProgram p =
        interdiction_master(g, 2, {{3, short_path}, {4, via_a}, {4, via_e}});
    const LpSolution sol = solve_bip(p);
    REQUIRE(sol.status == LpStatus::kOptimal);
    CHECK(sol.objective == doctest::Approx(7));
  }
}

TEST_CASE("solve_bip agrees with exhaustive enumeration") {
  std::mt19937 rng(314);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 13);
    const MixedBinaryProgram p = random_binary_program(rng, n);
    const Exhaustive ref = exhaustive(p);
    const LpSolution sol = solve_bip(p);
    if (ref.optimizers.empty()) {
      CHECK(sol.status == LpStatus::kInfeasible);
      continue;
    }
    REQUIRE(sol.status == LpStatus::kOptimal);
    CHECK(sol.objective == doctest::Approx(ref.best));
    CHECK(contains(ref.optimizers, sol.primal));
    CHECK(sol.nodes <= (1L << (n + 1)));
  }
}

TEST_CASE("extra cuts") {
  std::mt19937 rng(2718);
  MixedBinaryProgram p = random_binary_program(rng, 8);
  Exhaustive ref = exhaustive(p);
  while (ref.optimizers.size() != 1 || ref.values.size() < 3) {
    p = random_binary_program(rng, 8);
    ref = exhaustive(p);
  }
  const LpSolution first = solve_bip(p);
  REQUIRE(first.status == LpStatus::kOptimal);

  SUBCASE("no cuts is plain solve_bip") {
    const LpSolution same = solve_bip_with_extra_cuts(p, {});
    CHECK(same.objective == doctest::Approx(first.objective));
    CHECK(same.primal == first.primal);
  }
  SUBCASE("a no-good cut gives the second-best value") {
    std::vector<double> sorted = ref.values;
    std::sort(sorted.begin(), sorted.end());
    const LpSolution next = solve_bip_with_extra_cuts(p, {no_good_cut(p, first.primal)});
    REQUIRE(next.status == LpStatus::kOptimal);
    CHECK(next.objective == doctest::Approx(sorted[1]));
    CHECK_FALSE(next.primal.isApprox(first.primal));
  }
  SUBCASE("cutting off every point is infeasible") {
    std::vector<LinearConstraint> cuts;
    const int n = p.base_lp.num_vars();
    for (long mask = 0; mask < (1L << n); ++mask) {
      Eigen::VectorXd x(n);
      for (int j = 0; j < n; ++j) x(j) = (mask >> j) & 1;
      cuts.push_back(no_good_cut(p, x));
    }
    CHECK(solve_bip_with_extra_cuts(p, cuts).status == LpStatus::kInfeasible);
  }
}

TEST_CASE("no_good_cut excludes exactly one point") {
  MixedBinaryProgram p = all_binary(4);
  const Eigen::VectorXd target = vec({1, 0, 1, 1});
  const LinearConstraint cut = no_good_cut(p, target);
  for (long mask = 0; mask < 16; ++mask) {
    Eigen::VectorXd x(4);
    for (int j = 0; j < 4; ++j) x(j) = (mask >> j) & 1;
    const double v = cut.coeffs.dot(x);
    const bool holds = cut.sense == RowSense::kGreaterEqual ? v >= cut.rhs - 1e-9
                                                            : v <= cut.rhs + 1e-9;
    CHECK(holds == !x.isApprox(target));
  }
}

TEST_CASE("binary solver errors") {
  SUBCASE("unbounded relaxation") {
    MixedBinaryProgram p = all_binary(1);
    p.base_lp = LinearProgram::with_vars(2);
    p.base_lp.upper(0) = 1.0;
    p.base_lp.objective << 1, -1;
    p.binary_vars = {0};
    CHECK_THROWS_AS(solve_bip(p), ModelError);
  }
  SUBCASE("binary variable with wide bounds") {
    MixedBinaryProgram p = all_binary(2);
    p.base_lp.upper(1) = 5.0;
    CHECK_THROWS_AS(p.validate(), InputError);
  }
  SUBCASE("index out of range") {
    MixedBinaryProgram p = all_binary(2);
    p.binary_vars.push_back(7);
    CHECK_THROWS_AS(p.validate(), InputError);
  }
}

}  // namespace
}  // namespace aos
