#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chaoscalc/classify.hpp"
#include "chaoscalc/orbits.hpp"

namespace chaoscalc::scenario {

using Int = natset::Int;

class ScenarioError : public std::runtime_error {
public:
  explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

struct Scenario {
  orbits::OperatorSeq seq;
  std::vector<orbits::Vec> vectors;
  bool manifold = false;  // vectors form a manifold basis, sampled by classify
  orbits::SelectionPolicy policy;
  classify::ChaosConfig config;
  std::uint64_t seed = 1;
  std::string verdict_path, stats_path;
};

Scenario parse_scenario(const nlohmann::json& j);
Scenario parse_scenario_file(const std::string& path);

orbits::Vec parse_vector(const nlohmann::json& j);
orbits::Mat parse_matrix(const nlohmann::json& j);
rel::LinearRelation parse_relation(const nlohmann::json& j);

}  // namespace chaoscalc::scenario
