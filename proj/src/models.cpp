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

#include "aos/models.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "aos/errors.hpp"

namespace aos {

void FarmerConfig::validate() const {
  auto nonneg = [](const auto& values, const char* what) {
    for (double v : values) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw InputError(std::string("farmer config: ") + what +
                         " must be finite and nonnegative");
      }
    }
  };
  nonneg(plant_costs, "plant_costs");
  nonneg(purchase_prices, "purchase_prices");
  nonneg(sale_prices, "sale_prices");
  nonneg(feed_requirements, "feed_requirements");
  nonneg(mean_yields, "mean_yields");
  nonneg(std::array<double, 2>{beet_quota, land}, "beet_quota and land");
  if (scenarios.empty()) throw InputError("farmer config: no scenarios");
  double total = 0.0;
  for (const YieldScenario& s : scenarios) {
    if (!(s.multiplier >= 0.0) || !(s.probability >= 0.0)) {
      throw InputError(
          "farmer config: scenario multipliers and probabilities must be "
          "nonnegative");
    }
    total += s.probability;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw InputError("farmer config: scenario probabilities sum to " +
                     std::to_string(total));
  }
}

FarmerConfig farmer_config(int num_scenarios) {
  FarmerConfig cfg;
  if (num_scenarios == 1) {
    cfg.scenarios = {{1.0, 1.0}};
  } else if (num_scenarios == 3) {
    cfg.scenarios = {{1.0, 1.0 / 3}, {1.2, 1.0 / 3}, {0.8, 1.0 / 3}};
  } else {
    throw InputError("farmer: scenarios must be 1 or 3");
  }
  return cfg;
}

TwoStageProblem build_farmer(const FarmerConfig& cfg) {
  cfg.validate();
  TwoStageProblem p;
  p.name = "farmer-" + std::to_string(cfg.scenarios.size());
  p.g_coeffs = Eigen::Vector3d(cfg.plant_costs[0], cfg.plant_costs[1],
                               cfg.plant_costs[2]);
  p.x_A = Eigen::RowVector3d(1, 1, 1);
  p.x_senses = {RowSense::kLessEqual};
  p.x_b = Eigen::VectorXd::Constant(1, cfg.land);
  p.x_domains.assign(3, Domain::kContinuous);
  p.x_labels = {"wheat", "corn", "beets"};
  p.cut_form = CutForm::kDualStandard;

  double floor = 0.0;
  for (const YieldScenario& ys : cfg.scenarios) {
    Scenario s;
    s.probability = ys.probability;
    s.q.resize(6);
    s.q << cfg.purchase_prices[0], cfg.purchase_prices[1], -cfg.sale_prices[0],
        -cfg.sale_prices[1], -cfg.sale_prices[2], -cfg.sale_prices[3];
    const double t1 = cfg.mean_yields[0] * ys.multiplier;
    const double t2 = cfg.mean_yields[1] * ys.multiplier;
    const double t3 = cfg.mean_yields[2] * ys.multiplier;
    s.W = Eigen::MatrixXd::Zero(4, 6);
    s.T = Eigen::MatrixXd::Zero(4, 3);
    s.h.resize(4);
    // t1 x1 + y1 - w1 >= 200
    s.W(0, 0) = 1;
    s.W(0, 2) = -1;
    s.T(0, 0) = t1;
    s.h(0) = cfg.feed_requirements[0];
    // t2 x2 + y2 - w2 >= 240
    s.W(1, 1) = 1;
    s.W(1, 3) = -1;
    s.T(1, 1) = t2;
    s.h(1) = cfg.feed_requirements[1];
    // t3 x3 - w3 - w4 >= 0
    s.W(2, 4) = -1;
    s.W(2, 5) = -1;
    s.T(2, 2) = t3;
    s.h(2) = 0;
    // w3 <= quota
    s.W(3, 4) = 1;
    s.h(3) = cfg.beet_quota;
    s.senses = {RowSense::kGreaterEqual, RowSense::kGreaterEqual,
                RowSense::kGreaterEqual, RowSense::kLessEqual};
    p.scenarios.push_back(std::move(s));
    const double best_revenue =
        std::max({cfg.sale_prices[0] * t1, cfg.sale_prices[1] * t2,
                  cfg.sale_prices[2] * t3, cfg.sale_prices[3] * t3});
    floor += ys.probability * (-cfg.land * best_revenue);
  }
  p.theta_floor = floor;
  p.validate();
  return p;
}

int InterdictionGraph::node_index(const std::string& name) const {
  const auto it = std::find(nodes.begin(), nodes.end(), name);
  return it == nodes.end() ? -1 : static_cast<int>(it - nodes.begin());
}

std::string InterdictionGraph::arc_label(int k) const {
  return arcs.at(k).from + "->" + arcs.at(k).to;
}

bool InterdictionGraph::has_st_path() const {
  const int src = node_index(s);
  const int dst = node_index(t);
  if (src < 0 || dst < 0) return false;
  std::vector<char> seen(nodes.size(), 0);
  std::deque<int> queue{src};
  seen[src] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == dst) return true;
    for (const Arc& a : arcs) {
      if (node_index(a.from) != u) continue;
      const int v = node_index(a.to);
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  return false;
}

void InterdictionGraph::validate() const {
  if (nodes.empty()) throw InputError("graph: no nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i] == nodes[j]) {
        throw InputError("graph: duplicate node '" + nodes[i] + "'");
      }
    }
  }
  if (node_index(s) < 0) throw InputError("graph: unknown source '" + s + "'");
  if (node_index(t) < 0) throw InputError("graph: unknown sink '" + t + "'");
  if (s == t) throw InputError("graph: source and sink coincide");
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const Arc& a = arcs[k];
    const std::string where = "graph: arcs[" + std::to_string(k) + "]";
    if (node_index(a.from) < 0 || node_index(a.to) < 0) {
      throw InputError(where + " references an unknown node");
    }
    if (!(a.c >= 0.0) || !std::isfinite(a.c)) {
      throw InputError(where + ".c must be finite and >= 0");
    }
    if (!(a.d >= 1.0) || !std::isfinite(a.d)) {
      throw InputError(where + ".d must be finite and >= 1");
    }
    if (!(a.r >= 1.0) || !std::isfinite(a.r)) {
      throw InputError(where + ".r must be finite and >= 1");
    }
  }
  if (!(budget >= 0.0) || !std::isfinite(budget)) {
    throw InputError("graph: budget must be finite and >= 0");
  }
  if (!has_st_path()) {
    throw ModelError("graph: no path from '" + s + "' to '" + t + "'");
  }
}

InterdictionGraph reference_graph(double budget) {
  InterdictionGraph g;
  g.nodes = {"s", "a", "b", "c", "d", "e", "f", "t"};
  g.s = "s";
  g.t = "t";
  const char* pairs[][2] = {{"s", "a"}, {"s", "b"}, {"s", "c"}, {"a", "c"},
                            {"b", "c"}, {"c", "d"}, {"d", "e"}, {"d", "f"},
                            {"d", "t"}, {"e", "t"}, {"f", "t"}};
  for (const auto& pr : pairs) g.arcs.push_back({pr[0], pr[1], 1.0, 3.0, 1.0});
  g.budget = budget;
  return g;
}

TwoStageProblem build_mxsp(const InterdictionGraph& g) {
  g.validate();
  const int n = static_cast<int>(g.arcs.size());
  const int v = static_cast<int>(g.nodes.size());
  TwoStageProblem p;
  p.name = "mxsp";
  p.g_coeffs = Eigen::VectorXd::Zero(n);
  p.x_A.resize(1, n);
  for (int k = 0; k < n; ++k) p.x_A(0, k) = g.arcs[k].r;
  p.x_senses = {RowSense::kLessEqual};
  p.x_b = Eigen::VectorXd::Constant(1, g.budget);
  p.x_domains.assign(n, Domain::kBinary);
  for (int k = 0; k < n; ++k) p.x_labels.push_back(g.arc_label(k));
  p.cut_form = CutForm::kPrimalPath;

  Scenario s;
  s.probability = 1.0;
  s.q.resize(n);
  s.W = Eigen::MatrixXd::Zero(v, n);
  s.T = Eigen::MatrixXd::Zero(v, n);
  s.C = Eigen::MatrixXd::Zero(n, n);
  s.h = Eigen::VectorXd::Zero(v);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const Arc& a = g.arcs[k];
    s.q(k) = -a.c;
    s.C(k, k) = -a.d;
    s.W(g.node_index(a.from), k) += 1.0;
    s.W(g.node_index(a.to), k) -= 1.0;
    worst += a.c + a.d;
  }
  s.h(g.node_index(g.s)) = 1.0;
  s.h(g.node_index(g.t)) = -1.0;
  s.senses.assign(v, RowSense::kEqual);
  p.scenarios.push_back(std::move(s));
  // Any optimal flow is a simple path, so its cost is at most sum(c + d).
  p.theta_floor = -worst;
  p.validate();
  return p;
}

std::vector<int> flow_path(const InterdictionGraph& g,
                           const Eigen::Ref<const Eigen::VectorXd>& y,
                           double tol) {
  std::vector<int> path;
  std::vector<char> used(g.arcs.size(), 0);
  std::string at = g.s;
  while (at != g.t) {
    int next = -1;
    for (std::size_t k = 0; k < g.arcs.size(); ++k) {
      if (!used[k] && g.arcs[k].from == at && y(k) > 1.0 - tol) {
        next = static_cast<int>(k);
        break;
      }
    }
    if (next < 0) throw InputError("flow is not an s-t path");
    used[next] = 1;
    path.push_back(next);
    at = g.arcs[next].to;
  }
  return path;
}

std::string format_path(const InterdictionGraph& g,
                        const std::vector<int>& arcs) {
  std::string out = g.s;
  for (int k : arcs) out += "->" + g.arcs.at(k).to;
  return out;
}

std::vector<std::string> interdicted_arcs(
    const InterdictionGraph& g, const Eigen::Ref<const Eigen::VectorXd>& x) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < g.arcs.size(); ++k) {
    if (x(k) > 0.5) out.push_back(g.arc_label(static_cast<int>(k)));
  }
  return out;
}

}  // namespace aos
