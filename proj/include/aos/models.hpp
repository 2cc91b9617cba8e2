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

// Problem builders: the farmer crop-allocation problem and shortest-path
// interdiction.

#ifndef AOS_MODELS_HPP_
#define AOS_MODELS_HPP_

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "aos/two_stage.hpp"

namespace aos {

struct YieldScenario {
  double multiplier = 1.0;
  double probability = 1.0;
};

struct FarmerConfig {
  std::array<double, 3> plant_costs{150, 230, 260};  // wheat, corn, beets
  std::array<double, 2> purchase_prices{238, 210};   // wheat, corn
  // wheat, corn, beets within quota, beets above quota
  std::array<double, 4> sale_prices{170, 150, 36, 10};
  std::array<double, 2> feed_requirements{200, 240};
  double beet_quota = 6000;
  double land = 500;
  std::array<double, 3> mean_yields{2.5, 3, 20};
  std::vector<YieldScenario> scenarios{{1.0, 1.0}};

  void validate() const;
};

// The standard one-scenario (mean yields) or three-scenario (+-20%) setup.
FarmerConfig farmer_config(int num_scenarios);

// First stage: acres x >= 0 with x1 + x2 + x3 <= land. Recourse variables per
// scenario, in order: purchases y1, y2 and sales w1..w4.
TwoStageProblem build_farmer(const FarmerConfig& cfg);

struct Arc {
  std::string from;
  std::string to;
  double c = 1.0;  // base traversal cost
  double d = 1.0;  // increment when interdicted
  double r = 1.0;  // interdiction cost
};

struct InterdictionGraph {
  std::vector<std::string> nodes;
  std::string s;
  std::string t;
  std::vector<Arc> arcs;
  double budget = 1.0;

  int node_index(const std::string& name) const;  // -1 when absent
  std::string arc_label(int k) const;             // "from->to"
  bool has_st_path() const;

  // Throws InputError on unknown nodes or out-of-range parameters and
  // ModelError when t is unreachable from s.
  void validate() const;
};

// Eight nodes s, a, b, c, d, e, f, t and eleven arcs, all with c=1, d=3, r=1.
InterdictionGraph reference_graph(double budget = 1.0);

// Binary x (one per arc) with r'x <= budget and g = 0. The recourse is the
// s-t shortest path LP written as max (-c - diag(d) x)'y over unit flows, so
// Q(x) is minus the interdicted shortest-path length.
TwoStageProblem build_mxsp(const InterdictionGraph& g);

// Arc indices of a 0/1 unit flow read as an s-t walk, in traversal order.
std::vector<int> flow_path(const InterdictionGraph& g,
                           const Eigen::Ref<const Eigen::VectorXd>& y,
                           double tol = 1e-6);

// "s->c->d->t"
std::string format_path(const InterdictionGraph& g, const std::vector<int>& arcs);

// Labels of interdicted arcs (x_k > 0.5), in arc order.
std::vector<std::string> interdicted_arcs(
    const InterdictionGraph& g, const Eigen::Ref<const Eigen::VectorXd>& x);

}  // namespace aos

#endif  // AOS_MODELS_HPP_
