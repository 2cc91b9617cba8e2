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

#include "aos/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "aos/errors.hpp"

namespace aos {

double round10(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero in reports
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError((path.empty() ? std::string("<root>") : path) + ": " + what);
}

std::string child(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const Json& require(const Json& j, const std::string& path,
                    const std::string& key) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(child(path, key), "required field is missing");
  return *it;
}

// Rejects keys outside `allowed`, so typos do not silently fall back to
// defaults.
void only_keys(const Json& j, const std::string& path,
               std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) known = known || it.key() == k;
    if (!known) fail(child(path, it.key()), "unknown field");
  }
}

double as_number(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "expected a finite number");
  return v;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

Eigen::VectorXd as_vector(const Json& j, const std::string& path,
                          int expected = -1) {
  as_array(j, path);
  if (expected >= 0 && static_cast<int>(j.size()) != expected) {
    fail(path, "expected " + std::to_string(expected) + " entries, got " +
                   std::to_string(j.size()));
  }
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = as_number(j[i], index(path, i));
  return v;
}

Eigen::MatrixXd as_matrix(const Json& j, const std::string& path, int rows,
                          int cols) {
  as_array(j, path);
  if (static_cast<int>(j.size()) != rows) {
    fail(path, "expected " + std::to_string(rows) + " rows, got " +
                   std::to_string(j.size()));
  }
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    m.row(i) = as_vector(j[i], index(path, i), cols).transpose();
  }
  return m;
}

template <std::size_t N>
std::array<double, N> as_fixed(const Json& j, const std::string& path) {
  const Eigen::VectorXd v = as_vector(j, path, static_cast<int>(N));
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = v(static_cast<Eigen::Index>(i));
  return out;
}

RowSense as_sense(const Json& j, const std::string& path) {
  const std::string s = as_string(j, path);
  if (s == "<=") return RowSense::kLessEqual;
  if (s == ">=") return RowSense::kGreaterEqual;
  if (s == "=" || s == "==") return RowSense::kEqual;
  fail(path, "sense must be one of \"<=\", \">=\", \"=\"");
}

std::vector<RowSense> as_senses(const Json& j, const std::string& path,
                                int expected) {
  as_array(j, path);
  if (static_cast<int>(j.size()) != expected) {
    fail(path, "expected " + std::to_string(expected) + " entries, got " +
                   std::to_string(j.size()));
  }
  std::vector<RowSense> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_sense(j[i], index(path, i)));
  }
  return out;
}

Domain as_domain(const Json& j, const std::string& path) {
  const std::string s = as_string(j, path);
  if (s == "continuous") return Domain::kContinuous;
  if (s == "binary") return Domain::kBinary;
  if (s == "free") return Domain::kFree;
  fail(path, "domain must be one of \"continuous\", \"binary\", \"free\"");
}

Json vector_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json matrix_json(const Eigen::MatrixXd& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out.push_back(vector_json(m.row(i).transpose()));
  }
  return out;
}

}  // namespace

TwoStageProblem problem_from_json(const Json& j) {
  if (!j.is_object()) fail("", "expected an object");
  only_keys(j, "", {"name", "cut_form", "g", "X", "scenarios", "theta_floor"});
  TwoStageProblem p;
  if (j.contains("name")) p.name = as_string(j["name"], "name");
  if (j.contains("cut_form")) {
    const std::string form = as_string(j["cut_form"], "cut_form");
    if (form == "dual_standard") {
      p.cut_form = CutForm::kDualStandard;
    } else if (form == "primal_path") {
      p.cut_form = CutForm::kPrimalPath;
    } else {
      fail("cut_form", "must be \"dual_standard\" or \"primal_path\"");
    }
  }
  const Json& g = require(j, "", "g");
  only_keys(g, "g", {"coeffs", "const"});
  p.g_coeffs = as_vector(require(g, "g", "coeffs"), "g.coeffs");
  if (g.contains("const")) p.g_const = as_number(g["const"], "g.const");
  const int n1 = p.num_x();
  if (n1 == 0) fail("g.coeffs", "needs at least one first-stage variable");

  const Json& x = require(j, "", "X");
  only_keys(x, "X", {"A", "senses", "b", "domains", "labels"});
  const Json& xa = as_array(require(x, "X", "A"), "X.A");
  const int r1 = static_cast<int>(xa.size());
  p.x_A = as_matrix(xa, "X.A", r1, n1);
  p.x_senses = as_senses(require(x, "X", "senses"), "X.senses", r1);
  p.x_b = as_vector(require(x, "X", "b"), "X.b", r1);
  if (x.contains("domains")) {
    const Json& d = as_array(x["domains"], "X.domains");
    if (static_cast<int>(d.size()) != n1) {
      fail("X.domains", "expected " + std::to_string(n1) + " entries, got " +
                            std::to_string(d.size()));
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
      p.x_domains.push_back(as_domain(d[i], index("X.domains", i)));
    }
  } else {
    p.x_domains.assign(n1, Domain::kContinuous);
  }
  if (x.contains("labels")) {
    const Json& l = as_array(x["labels"], "X.labels");
    if (static_cast<int>(l.size()) != n1) {
      fail("X.labels", "expected " + std::to_string(n1) + " entries, got " +
                           std::to_string(l.size()));
    }
    for (std::size_t i = 0; i < l.size(); ++i) {
      p.x_labels.push_back(as_string(l[i], index("X.labels", i)));
    }
  }

  const Json& scen = as_array(require(j, "", "scenarios"), "scenarios");
  if (scen.empty()) fail("scenarios", "needs at least one scenario");
  for (std::size_t s = 0; s < scen.size(); ++s) {
    const std::string path = index("scenarios", s);
    const Json& sj = scen[s];
    if (!sj.is_object()) fail(path, "expected an object");
    only_keys(sj, path, {"p", "q", "W", "T", "h", "senses", "C"});
    Scenario sc;
    sc.probability = as_number(require(sj, path, "p"), child(path, "p"));
    sc.q = as_vector(require(sj, path, "q"), child(path, "q"));
    const int n2 = static_cast<int>(sc.q.size());
    const Json& h = require(sj, path, "h");
    sc.h = as_vector(h, child(path, "h"));
    const int m2 = static_cast<int>(sc.h.size());
    sc.W = as_matrix(require(sj, path, "W"), child(path, "W"), m2, n2);
    if (sj.contains("T")) {
      sc.T = as_matrix(sj["T"], child(path, "T"), m2, n1);
    } else {
      sc.T = Eigen::MatrixXd::Zero(m2, n1);
    }
    sc.senses = as_senses(require(sj, path, "senses"), child(path, "senses"), m2);
    if (sj.contains("C")) {
      sc.C = as_matrix(sj["C"], child(path, "C"), n2, n1);
    } else if (p.cut_form == CutForm::kPrimalPath) {
      sc.C = Eigen::MatrixXd::Zero(n2, n1);
    }
    p.scenarios.push_back(std::move(sc));
  }
  if (j.contains("theta_floor") && !j["theta_floor"].is_null()) {
    p.theta_floor = as_number(j["theta_floor"], "theta_floor");
  }
  try {
    p.validate();
  } catch (const InputError& e) {
    fail("", e.what());
  }
  return p;
}

Json problem_to_json(const TwoStageProblem& p) {
  Json j;
  j["name"] = p.name;
  j["cut_form"] = std::string(to_string(p.cut_form));
  j["g"] = {{"coeffs", vector_json(p.g_coeffs)}, {"const", p.g_const}};
  Json senses = Json::array();
  for (RowSense s : p.x_senses) senses.push_back(std::string(to_string(s)));
  Json domains = Json::array();
  for (Domain d : p.x_domains) domains.push_back(std::string(to_string(d)));
  j["X"] = {{"A", matrix_json(p.x_A)},
            {"senses", senses},
            {"b", vector_json(p.x_b)},
            {"domains", domains}};
  if (!p.x_labels.empty()) j["X"]["labels"] = p.x_labels;
  Json scen = Json::array();
  for (const Scenario& sc : p.scenarios) {
    Json sj;
    sj["p"] = sc.probability;
    sj["q"] = vector_json(sc.q);
    sj["W"] = matrix_json(sc.W);
    sj["T"] = matrix_json(sc.T);
    sj["h"] = vector_json(sc.h);
    Json ss = Json::array();
    for (RowSense s : sc.senses) ss.push_back(std::string(to_string(s)));
    sj["senses"] = ss;
    if (sc.C.size() > 0) sj["C"] = matrix_json(sc.C);
    scen.push_back(std::move(sj));
  }
  j["scenarios"] = std::move(scen);
  j["theta_floor"] = p.theta_floor ? Json(*p.theta_floor) : Json(nullptr);
  return j;
}

InterdictionGraph graph_from_json(const Json& j) {
  if (!j.is_object()) fail("", "expected an object");
  only_keys(j, "", {"nodes", "s", "t", "arcs", "budget"});
  InterdictionGraph g;
  const Json& nodes = as_array(require(j, "", "nodes"), "nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    g.nodes.push_back(as_string(nodes[i], index("nodes", i)));
  }
  g.s = as_string(require(j, "", "s"), "s");
  g.t = as_string(require(j, "", "t"), "t");
  const Json& arcs = as_array(require(j, "", "arcs"), "arcs");
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const std::string path = index("arcs", k);
    const Json& a = arcs[k];
    if (!a.is_object()) fail(path, "expected an object");
    only_keys(a, path, {"from", "to", "c", "d", "r"});
    Arc arc;
    arc.from = as_string(require(a, path, "from"), child(path, "from"));
    arc.to = as_string(require(a, path, "to"), child(path, "to"));
    if (a.contains("c")) arc.c = as_number(a["c"], child(path, "c"));
    if (a.contains("d")) arc.d = as_number(a["d"], child(path, "d"));
    if (a.contains("r")) arc.r = as_number(a["r"], child(path, "r"));
    g.arcs.push_back(std::move(arc));
  }
  if (j.contains("budget")) g.budget = as_number(j["budget"], "budget");
  try {
    g.validate();
  } catch (const InputError& e) {
    fail("", e.what());
  }
  return g;
}

Json graph_to_json(const InterdictionGraph& g) {
  Json j;
  j["nodes"] = g.nodes;
  j["s"] = g.s;
  j["t"] = g.t;
  Json arcs = Json::array();
  for (const Arc& a : g.arcs) {
    arcs.push_back(
        {{"from", a.from}, {"to", a.to}, {"c", a.c}, {"d", a.d}, {"r", a.r}});
  }
  j["arcs"] = std::move(arcs);
  j["budget"] = g.budget;
  return j;
}

FarmerConfig farmer_from_json(const Json& j) {
  if (!j.is_object()) fail("", "expected an object");
  only_keys(j, "", {"plant_costs", "purchase_prices", "sale_prices",
                    "feed_requirements", "beet_quota", "land", "mean_yields",
                    "scenarios"});
  FarmerConfig cfg;
  if (j.contains("plant_costs")) {
    cfg.plant_costs = as_fixed<3>(j["plant_costs"], "plant_costs");
  }
  if (j.contains("purchase_prices")) {
    cfg.purchase_prices = as_fixed<2>(j["purchase_prices"], "purchase_prices");
  }
  if (j.contains("sale_prices")) {
    cfg.sale_prices = as_fixed<4>(j["sale_prices"], "sale_prices");
  }
  if (j.contains("feed_requirements")) {
    cfg.feed_requirements =
        as_fixed<2>(j["feed_requirements"], "feed_requirements");
  }
  if (j.contains("beet_quota")) {
    cfg.beet_quota = as_number(j["beet_quota"], "beet_quota");
  }
  if (j.contains("land")) cfg.land = as_number(j["land"], "land");
  if (j.contains("mean_yields")) {
    cfg.mean_yields = as_fixed<3>(j["mean_yields"], "mean_yields");
  }
  if (j.contains("scenarios")) {
    const Json& sc = as_array(j["scenarios"], "scenarios");
    cfg.scenarios.clear();
    for (std::size_t i = 0; i < sc.size(); ++i) {
      const std::string path = index("scenarios", i);
      if (!sc[i].is_object()) fail(path, "expected an object");
      only_keys(sc[i], path, {"multiplier", "probability"});
      cfg.scenarios.push_back(
          {as_number(require(sc[i], path, "multiplier"), child(path, "multiplier")),
           as_number(require(sc[i], path, "probability"),
                     child(path, "probability"))});
    }
  }
  try {
    cfg.validate();
  } catch (const InputError& e) {
    fail("", e.what());
  }
  return cfg;
}

Json farmer_to_json(const FarmerConfig& cfg) {
  Json j;
  j["plant_costs"] = cfg.plant_costs;
  j["purchase_prices"] = cfg.purchase_prices;
  j["sale_prices"] = cfg.sale_prices;
  j["feed_requirements"] = cfg.feed_requirements;
  j["beet_quota"] = cfg.beet_quota;
  j["land"] = cfg.land;
  j["mean_yields"] = cfg.mean_yields;
  Json sc = Json::array();
  for (const YieldScenario& s : cfg.scenarios) {
    sc.push_back({{"multiplier", s.multiplier}, {"probability", s.probability}});
  }
  j["scenarios"] = std::move(sc);
  return j;
}

LoadedProblem load_problem(const Json& j) {
  if (!j.is_object()) fail("", "expected an object");
  LoadedProblem out;
  if (j.contains("arcs")) {
    out.kind = LoadedProblem::Kind::kGraph;
    out.graph = graph_from_json(j);
    out.problem = build_mxsp(*out.graph);
  } else if (j.contains("mean_yields") || j.contains("plant_costs")) {
    out.kind = LoadedProblem::Kind::kFarmer;
    out.farmer = farmer_from_json(j);
    out.problem = build_farmer(*out.farmer);
  } else {
    out.kind = LoadedProblem::Kind::kTwoStage;
    out.problem = problem_from_json(j);
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": invalid JSON (" + e.what() + ")");
  }
}

}  // namespace aos
