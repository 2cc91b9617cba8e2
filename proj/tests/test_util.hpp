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

// Shared fixtures for the test binaries. Nothing here calls the simplex code,
// so the helpers double as independent references.

#ifndef AOS_TESTS_TEST_UTIL_HPP_
#define AOS_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "aos/lp_core.hpp"
#include "aos/models.hpp"
#include "aos/two_stage.hpp"

namespace aos::testing {

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

inline Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double d : v) out(i++) = d;
  return out;
}

// Farmer recourse for one yield multiplier, by hand: shortfalls are bought,
// surpluses sold, beets above the quota fetch the lower price.
inline double farmer_recourse(const FarmerConfig& cfg,
                              const Eigen::Ref<const Eigen::VectorXd>& x,
                              double multiplier) {
  double cost = 0.0;
  for (int crop = 0; crop < 2; ++crop) {
    const double net = multiplier * cfg.mean_yields[crop] * x(crop) -
                       cfg.feed_requirements[crop];
    cost += net >= 0 ? -cfg.sale_prices[crop] * net
                     : -cfg.purchase_prices[crop] * net;
  }
  const double beets = multiplier * cfg.mean_yields[2] * x(2);
  const double within = std::min(beets, cfg.beet_quota);
  cost -= cfg.sale_prices[2] * within + cfg.sale_prices[3] * (beets - within);
  return cost;
}

inline double farmer_expected_recourse(const FarmerConfig& cfg,
                                       const Eigen::Ref<const Eigen::VectorXd>& x) {
  double q = 0.0;
  for (const YieldScenario& s : cfg.scenarios) {
    q += s.probability * farmer_recourse(cfg, x, s.multiplier);
  }
  return q;
}

inline double farmer_planting_cost(const FarmerConfig& cfg,
                                   const Eigen::Ref<const Eigen::VectorXd>& x) {
  return cfg.plant_costs[0] * x(0) + cfg.plant_costs[1] * x(1) +
         cfg.plant_costs[2] * x(2);
}

// A random LP over n variables in a box, with m mixed-sense rows that all
// hold at a random interior point, so it is feasible and bounded.
inline LinearProgram random_bounded_lp(std::mt19937& rng, int n, int m,
                                       bool with_equalities = true) {
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> small(-4, 4);
  LinearProgram lp = LinearProgram::with_vars(
      n, unit(rng) < 0.5 ? Sense::kMinimize : Sense::kMaximize);
  Eigen::VectorXd point(n);
  for (int j = 0; j < n; ++j) {
    lp.objective(j) = small(rng);
    const double lo = unit(rng) < 0.3 ? -static_cast<double>(1 + rng() % 4) : 0.0;
    const double hi = lo + 1.0 + static_cast<double>(rng() % 6);
    lp.lower(j) = lo;
    lp.upper(j) = hi;
    point(j) = lo + (hi - lo) * (0.2 + 0.6 * unit(rng));
  }
  for (int i = 0; i < m; ++i) {
    Eigen::VectorXd a(n);
    for (int j = 0; j < n; ++j) a(j) = std::round(coef(rng));
    const double v = a.dot(point);
    const double r = unit(rng);
    if (with_equalities && r < 0.15) {
      lp.add_row(a, RowSense::kEqual, v);
    } else if (r < 0.6) {
      lp.add_row(a, RowSense::kLessEqual, std::ceil(v + 2.0 * unit(rng)));
    } else {
      lp.add_row(a, RowSense::kGreaterEqual, std::floor(v - 2.0 * unit(rng)));
    }
  }
  return lp;
}

// Uniform samples of a bounded continuous X by rejection from its bounding
// box; uniform random feasible masks for binary X.
inline std::vector<Eigen::VectorXd> sample_first_stage(
    const TwoStageProblem& p, const Eigen::VectorXd& lo,
    const Eigen::VectorXd& hi, int count, std::mt19937& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Eigen::VectorXd> out;
  const int n = p.num_x();
  int guard = 0;
  while (static_cast<int>(out.size()) < count && guard++ < 10000 * count) {
    Eigen::VectorXd x(n);
    for (int j = 0; j < n; ++j) {
      x(j) = p.x_domains[j] == Domain::kBinary
                 ? static_cast<double>(rng() % 2)
                 : lo(j) + (hi(j) - lo(j)) * unit(rng);
    }
    if (first_stage_violation(p, x) <= 1e-9) out.push_back(x);
  }
  return out;
}

// Random mask with exactly `k` ones among `n`.
inline Eigen::VectorXd random_mask(int n, int k, std::mt19937& rng) {
  std::vector<int> idx(n);
  for (int j = 0; j < n; ++j) idx[j] = j;
  std::shuffle(idx.begin(), idx.end(), rng);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < k; ++j) x(idx[j]) = 1.0;
  return x;
}

inline Eigen::VectorXd attack(const InterdictionGraph& g,
                              const std::vector<std::string>& labels) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<int>(g.arcs.size()));
  for (const std::string& l : labels) {
    for (int k = 0; k < static_cast<int>(g.arcs.size()); ++k) {
      if (g.arc_label(k) == l) x(k) = 1.0;
    }
  }
  return x;
}

}  // namespace aos::testing

#endif  // AOS_TESTS_TEST_UTIL_HPP_
