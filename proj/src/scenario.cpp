#include "chaoscalc/scenario.hpp"

#include <fstream>

namespace chaoscalc::scenario {

namespace {

rel::Cplx parse_entry(const nlohmann::json& j) {
  if (j.is_number()) return rel::Cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return rel::Cplx(j[0].get<double>(), j[1].get<double>());
  throw ScenarioError("matrix entry must be a number or [re, im]");
}

orbits::CoeffRule parse_coeff(const nlohmann::json& j) {
  orbits::CoeffRule rule;
  if (j.is_string() && j.get<std::string>() == "k") {
    rule.kind = orbits::CoeffRule::Kind::StepIndex;
  } else if (j.is_number()) {
    rule.kind = orbits::CoeffRule::Kind::Constant;
    rule.value = j.get<double>();
  } else {
    throw ScenarioError("coefficient rule must be \"k\" or a number");
  }
  return rule;
}

}  // namespace

orbits::Vec parse_vector(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ScenarioError("vector must be a non-empty array");
  orbits::Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[Eigen::Index(i)] = parse_entry(j[i]);
  return v;
}

orbits::Mat parse_matrix(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ScenarioError("matrix must be a non-empty array of rows");
  std::size_t cols = j[0].size();
  orbits::Mat m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ScenarioError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(Eigen::Index(r), Eigen::Index(c)) = parse_entry(j[r][c]);
  }
  return m;
}

rel::LinearRelation parse_relation(const nlohmann::json& j) {
  if (j.contains("matrix")) return rel::LinearRelation::from_matrix(parse_matrix(j["matrix"]));
  if (j.contains("graph_basis")) {
    const auto& gb = j["graph_basis"];
    if (!gb.contains("x_cols") || !gb.contains("y_cols"))
      throw ScenarioError("graph_basis needs x_cols and y_cols");
    orbits::Mat xc = parse_matrix(gb["x_cols"]);
    orbits::Mat yc = parse_matrix(gb["y_cols"]);
    if (xc.cols() != yc.cols()) throw ScenarioError("graph_basis column count mismatch");
    orbits::Mat cols(xc.rows() + yc.rows(), xc.cols());
    cols.topRows(xc.rows()) = xc;
    cols.bottomRows(yc.rows()) = yc;
    return rel::LinearRelation::from_graph_basis(int(xc.rows()), int(yc.rows()), cols);
  }
  throw ScenarioError("relation spec needs matrix or graph_basis");
}

Scenario parse_scenario(const nlohmann::json& j) {
  Scenario sc;
  if (!j.contains("operator")) throw ScenarioError("scenario needs an operator");
  const auto& op = j["operator"];
  std::string kind = op.value("kind", "");

  sc.seq.space = metric::parse_metric_spec(j.value("metric", "norm:euclidean"));

  if (kind == "constant") {
    sc.seq.kind = orbits::OperatorSeq::Kind::ConstantPowers;
    sc.seq.matrix = parse_matrix(op.at("matrix"));
    sc.seq.dim = int(sc.seq.matrix.rows());
  } else if (kind == "scalar_gated") {
    sc.seq.kind = orbits::OperatorSeq::Kind::ScalarGated;
    try {
      sc.seq.gate = natset::parse_set_spec(op.at("gate").get<std::string>());
    } catch (const natset::ParseError& e) {
      throw ScenarioError(std::string("bad gate set: ") + e.what());
    }
    sc.seq.on_coeff = parse_coeff(op.value("on", nlohmann::json("k")));
    sc.seq.off_coeff = parse_coeff(op.value("off", nlohmann::json(0.0)));
    sc.seq.dim = op.value("dim", 1);
  } else if (kind == "alternating") {
    sc.seq.kind = orbits::OperatorSeq::Kind::Alternating;
    for (const auto& m : op.at("matrices")) sc.seq.cycle.push_back(parse_matrix(m));
    if (sc.seq.cycle.empty()) throw ScenarioError("alternating needs matrices");
    sc.seq.dim = int(sc.seq.cycle[0].rows());
  } else if (kind == "relation_powers") {
    sc.seq.kind = orbits::OperatorSeq::Kind::RelationPowers;
    sc.seq.relation = parse_relation(op.at("relation"));
    sc.seq.dim = sc.seq.relation.dx();
  } else if (kind == "explicit") {
    sc.seq.kind = orbits::OperatorSeq::Kind::ExplicitList;
    for (const auto& r : op.at("relations")) sc.seq.list.push_back(parse_relation(r));
    if (sc.seq.list.empty()) throw ScenarioError("explicit sequence needs relations");
    sc.seq.dim = sc.seq.list[0].dx();
  } else {
    throw ScenarioError("unknown operator kind '" + kind + "'");
  }

  if (j.contains("vectors")) {
    for (const auto& v : j["vectors"]) sc.vectors.push_back(parse_vector(v));
  } else if (j.contains("manifold_basis")) {
    sc.manifold = true;
    for (const auto& v : j["manifold_basis"]) sc.vectors.push_back(parse_vector(v));
  } else {
    throw ScenarioError("scenario needs vectors or manifold_basis");
  }
  for (const auto& v : sc.vectors)
    if (v.size() != sc.seq.dim) throw ScenarioError("vector dimension does not match operator");

  if (j.contains("policy")) {
    const auto& p = j["policy"];
    std::string pk = p.value("kind", "canonical");
    if (pk == "canonical") {
      sc.policy.kind = orbits::SelectionPolicy::Kind::Canonical;
    } else if (pk == "offset") {
      sc.policy.kind = orbits::SelectionPolicy::Kind::Offset;
      sc.policy.offset = parse_vector(p.at("offset"));
    } else if (pk == "maximize_gap") {
      sc.policy.kind = orbits::SelectionPolicy::Kind::MaximizeGap;
      sc.policy.budget = p.value("budget", 64);
    } else {
      throw ScenarioError("unknown policy '" + pk + "'");
    }
  }

  sc.config = classify::ChaosConfig::defaults();
  if (j.contains("config")) {
    const auto& c = j["config"];
    sc.config.density.horizon = c.value("horizon", sc.config.density.horizon);
    sc.config.density.window = c.value("window", sc.config.density.window);
    sc.config.density.tail = c.value("tail", sc.config.density.tail);
    if (c.contains("sigma_grid")) {
      sc.config.sigma_grid = c["sigma_grid"].get<std::vector<double>>();
      sc.config.eps_grid = sc.config.sigma_grid;
    }
    if (c.contains("eps_grid")) sc.config.eps_grid = c["eps_grid"].get<std::vector<double>>();
    sc.config.theta0 = c.value("theta0", sc.config.theta0);
    sc.config.theta1 = c.value("theta1", sc.config.theta1);
    sc.config.theta_plus = c.value("theta_plus", sc.config.theta_plus);
    sc.config.gap = c.value("gap", sc.config.gap);
    sc.config.unbounded_level = c.value("unbounded_level", sc.config.unbounded_level);
  }
  sc.seed = j.value("seed", std::uint64_t(1));
  if (j.contains("output")) {
    sc.verdict_path = j["output"].value("verdict", "");
    sc.stats_path = j["output"].value("stats", "");
  }
  try {
    sc.config.validate();
    sc.seq.validate();
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(e.what());
  }
  return sc;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ScenarioError(std::string("scenario JSON parse error: ") + e.what());
  }
  return parse_scenario(j);
}

}  // namespace chaoscalc::scenario
