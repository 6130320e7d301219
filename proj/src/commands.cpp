#include "chaoscalc/commands.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "chaoscalc/classify.hpp"
#include "chaoscalc/density.hpp"
#include "chaoscalc/presets.hpp"
#include "chaoscalc/scenario.hpp"

namespace chaoscalc::cmd {

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
}

Result cmd_density(const std::string& set_spec, Int horizon, Int window, bool exact,
                   const std::string& csv_path, Int stride) {
  natset::SetExprPtr set;
  try {
    set = natset::parse_set_spec(set_spec);
  } catch (const natset::ParseError& e) {
    return {kParseError, std::string("parse error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kParseError, std::string("parse error: ") + e.what() + "\n"};
  }

  density::Config cfg;
  cfg.horizon = horizon;
  cfg.window = std::min<Int>(window, Int(cfg.tail * double(horizon)));
  try {
    std::string json;
    if (exact) {
      auto profile = density::exact_profile(*set);
      if (profile) {
        profile->config = cfg;
        json = density::profile_to_json(*profile);
      } else {
        json = "{\"mode\":\"not_closed_form\"}";
      }
    } else {
      json = density::profile_to_json(density::estimate_profile(*set, cfg));
    }
    if (!csv_path.empty()) {
      auto series = density::prefix_ratio_series(*set, cfg, stride);
      write_file_atomic(csv_path, density::ratio_series_csv(series));
    }
    return {kOk, json + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kParseError, std::string("parse error: ") + e.what() + "\n"};
  }
}

namespace {

Result classify_scenario(const scenario::Scenario& sc, const std::string& verdict_path,
                         const std::string& stats_path) {
  if (sc.vectors.size() < 2)
    return {kParseError, "classification needs at least two vectors\n"};
  try {
    auto pair = orbits::generate_pair(sc.seq, sc.vectors[0], sc.vectors[1], sc.policy,
                                      sc.config.density.horizon, sc.seed);
    auto analysis = classify::analyze_pair(pair, sc.config);
    classify::ChaosVerdict verdict = analysis.verdict;
    if (sc.vectors.size() > 2 || sc.manifold) {
      auto report = classify::classify_sample_set(sc.seq, sc.vectors, sc.policy, sc.config,
                                                  sc.seed, sc.manifold);
      verdict = report.aggregate;
    }
    std::string vj = classify::verdict_to_json(verdict);
    if (!verdict_path.empty()) write_file_atomic(verdict_path, vj + "\n");
    if (!stats_path.empty()) write_file_atomic(stats_path, classify::stats_to_csv(analysis.stats));
    return {kOk, vj + "\n"};
  } catch (const orbits::DomainError& e) {
    return {kDomainError, std::string("domain error: ") + e.what() + "\n"};
  }
}

}  // namespace

Result cmd_classify(const std::string& scenario_path, const std::string& verdict_path,
                    const std::string& stats_path) {
  scenario::Scenario sc;
  try {
    sc = scenario::parse_scenario_file(scenario_path);
  } catch (const scenario::ScenarioError& e) {
    return {kParseError, std::string("scenario error: ") + e.what() + "\n"};
  }
  if (!verdict_path.empty()) sc.verdict_path = verdict_path;
  if (!stats_path.empty()) sc.stats_path = stats_path;
  return classify_scenario(sc, sc.verdict_path, sc.stats_path);
}

Result cmd_examples(const std::string& preset_name, Int horizon) {
  auto id = presets::preset_from_name(preset_name);
  if (!id) {
    std::ostringstream os;
    os << "unknown preset '" << preset_name << "'; available:";
    for (const auto& n : presets::preset_names()) os << " " << n;
    os << "\n";
    return {kParseError, os.str()};
  }
  auto run = presets::run_preset(*id, horizon);
  std::ostringstream os;
  os << "preset " << preset_name << " at horizon " << horizon << "\n" << run.report;
  os << (run.all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return {run.all_pass ? kOk : kFlagMismatch, os.str()};
}

namespace {

using classify::ChaosConfig;
using classify::Flag;
using orbits::OperatorSeq;
using orbits::Vec;

struct LatticeScenario {
  OperatorSeq seq;
  Vec x, y;
  orbits::SelectionPolicy policy;
  ChaosConfig cfg;
  std::string description;
};

// The generator mix behind `lattice`: scalar sequences gated by random
// periodic sets, by geometric block sets and by boolean combinations of the
// two, constant-matrix powers with spectra straddling the unit circle,
// purely multivalued constant relations, and alternating matrix lists.
// Windows are chosen per family so the window either divides the gate period
// or fits inside the largest gate block below the horizon.
LatticeScenario make_lattice_scenario(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform_int = [&](Int lo, Int hi) {
    return Int(std::uniform_int_distribution<long long>(lo, hi)(rng));
  };
  auto uniform = [&](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };

  LatticeScenario sc;
  sc.cfg = ChaosConfig::defaults();
  sc.cfg.density.horizon = 30000;
  sc.cfg.density.tail = 0.5;
  sc.cfg.unbounded_level = 1e3;
  sc.policy = orbits::SelectionPolicy::canonical();
  sc.x = Vec::Constant(1, 1.0);
  sc.y = Vec::Constant(1, 2.0);

  natset::SetExprPtr gate;
  int type = int(uniform_int(0, 5));
  switch (type) {
    case 0: {  // periodic gate
      Int m = uniform_int(2, 12);
      std::vector<Int> residues;
      for (Int r = 0; r < m; ++r)
        if (uniform(0.0, 1.0) < 0.5) residues.push_back(r);
      if (residues.empty()) residues.push_back(uniform_int(0, m - 1));
      if (Int(residues.size()) == m) residues.pop_back();
      gate = natset::SetExpr::periodic(m, residues);
      sc.cfg.density.window = 2 * m;
      sc.description = "gated-periodic m=" + std::to_string(m);
      break;
    }
    case 1: {  // geometric block gate
      natset::BlockRule rule;
      rule.pos = natset::BlockRule::Pos::Geometric;
      rule.scale = 1;
      rule.param = 2;
      rule.len = natset::BlockRule::Len::Linear;
      gate = natset::SetExpr::blocks(rule);
      sc.cfg.density.window = 12;
      sc.description = "gated-blocks geom(1,2)";
      break;
    }
    case 2: {  // boolean combination gate
      Int m = uniform_int(3, 8);
      std::vector<Int> residues;
      for (Int r = 0; r < m; ++r)
        if (uniform(0.0, 1.0) < 0.4) residues.push_back(r);
      if (residues.empty()) residues.push_back(0);
      natset::BlockRule rule;
      rule.pos = natset::BlockRule::Pos::Geometric;
      rule.scale = 1;
      rule.param = 2;
      rule.len = natset::BlockRule::Len::Linear;
      auto periodic = natset::SetExpr::periodic(m, residues);
      auto blocks = natset::SetExpr::blocks(rule);
      gate = uniform(0.0, 1.0) < 0.5 ? natset::SetExpr::set_union(periodic, blocks)
                                     : natset::SetExpr::set_intersection(
                                           periodic, natset::SetExpr::complement(blocks));
      sc.cfg.density.window = 2 * m;
      sc.description = "gated-boolean m=" + std::to_string(m);
      break;
    }
    case 3: {  // constant-matrix powers, spectrum straddling the unit circle
      // Rates stay away from 1 so decay transients die out well before the
      // tail: a longer transient leaves head mass that the prefix estimator
      // counts but tail windows cannot, which would break the estimated chain
      // beyond its 0.05 tolerance.
      sc.seq.kind = OperatorSeq::Kind::ConstantPowers;
      sc.seq.dim = 2;
      orbits::Mat m(2, 2);
      auto rate = [&] {
        return uniform(0.0, 1.0) < 0.5 ? uniform(0.5, 0.95) : uniform(1.01, 1.05);
      };
      double l1 = rate();
      double l2 = rate();
      double rot = uniform(0.0, 1.0);
      m << l1, rot, 0.0, l2;
      sc.seq.matrix = m;
      sc.seq.space = metric::parse_metric_spec("norm:euclidean");
      sc.x = Vec::Zero(2);
      sc.x[0] = 1.0;
      sc.y = Vec::Zero(2);
      sc.y[0] = uniform(1.5, 2.5);
      sc.y[1] = uniform(-1.0, 1.0);
      sc.cfg.density.window = 100;
      sc.description = "matrix-powers";
      break;
    }
    case 4: {  // purely multivalued constant relation
      sc.seq.kind = OperatorSeq::Kind::ExplicitList;
      sc.seq.dim = 2;
      orbits::Mat m(2, 2);
      m << uniform(-1.5, 1.5), uniform(-1.5, 1.5), uniform(-1.5, 1.5), uniform(-1.5, 1.5);
      orbits::Mat cols(4, 3);
      cols.setZero();
      cols.topLeftCorner(2, 2) = orbits::Mat::Identity(2, 2);
      cols.block(2, 0, 2, 2) = m;
      cols(2, 2) = uniform(0.3, 1.0);
      cols(3, 2) = uniform(-1.0, 1.0);
      sc.seq.list = {rel::LinearRelation::from_graph_basis(2, 2, cols)};
      sc.seq.space = metric::parse_metric_spec("norm:euclidean");
      if (uniform(0.0, 1.0) < 0.5) {
        sc.policy.kind = orbits::SelectionPolicy::Kind::MaximizeGap;
        sc.policy.budget = 16;
      }
      sc.x = Vec::Zero(2);
      sc.x[0] = 1.0;
      sc.y = Vec::Zero(2);
      sc.y[1] = 1.0;
      sc.cfg.density.horizon = 4000;
      sc.cfg.density.window = 50;
      sc.description = "purely-multivalued";
      break;
    }
    default: {  // alternating list with zero members
      sc.seq.kind = OperatorSeq::Kind::Alternating;
      sc.seq.dim = 1;
      Int len = uniform_int(2, 4);
      for (Int i = 0; i < len; ++i) {
        double c = uniform(0.0, 1.0) < 0.4 ? 0.0 : uniform(0.2, 3.0);
        sc.seq.cycle.push_back(orbits::Mat::Constant(1, 1, c));
      }
      bool has_zero = false;
      for (const auto& m : sc.seq.cycle)
        if (std::abs(m(0, 0)) == 0.0) has_zero = true;
      if (!has_zero) sc.seq.cycle[0] = orbits::Mat::Zero(1, 1);
      sc.seq.space = metric::parse_metric_spec("norm:euclidean");
      sc.cfg.density.window = 4 * len;
      sc.description = "alternating len=" + std::to_string(len);
      break;
    }
  }

  if (type <= 2) {
    sc.seq.kind = OperatorSeq::Kind::ScalarGated;
    sc.seq.dim = 1;
    sc.seq.gate = gate;
    sc.seq.on_coeff = {orbits::CoeffRule::Kind::StepIndex, 0.0};
    sc.seq.off_coeff = {orbits::CoeffRule::Kind::Constant, 0.0};
    sc.seq.space = metric::parse_metric_spec("norm:euclidean");
  }
  return sc;
}

}  // namespace

Result cmd_lattice(int samples, std::uint64_t seed, bool inject_violation) {
  if (samples < 1) return {kParseError, "lattice needs --samples >= 1\n"};
  std::ostringstream os;
  if (inject_violation) {
    classify::ChaosVerdict synthetic;
    synthetic.set(Flag::DC, true);  // with LY left false
    auto violated = classify::implication_check(synthetic);
    os << "self-test: injected DC=true, LY=false\n";
    for (const auto& e : violated) os << "violated edge " << e.name() << "\n";
    os << "self-test violations: " << violated.size() << "\n";
    return {violated.empty() ? kOk : 1, os.str()};
  }

  int total_violations = 0;
  for (int i = 0; i < samples; ++i) {
    std::uint64_t scenario_seed = seed + std::uint64_t(i);
    auto sc = make_lattice_scenario(scenario_seed);
    auto pair =
        orbits::generate_pair(sc.seq, sc.x, sc.y, sc.policy, sc.cfg.density.horizon, scenario_seed);
    auto verdict = classify::classify_pair(pair, sc.cfg);
    auto violated = classify::implication_check(verdict);
    int true_flags = 0;
    for (int f = 0; f < classify::kFlagCount; ++f)
      if (verdict.flags[std::size_t(f)]) ++true_flags;
    os << "scenario seed=" << scenario_seed << " type=" << sc.description
       << " true_flags=" << true_flags << " violations=" << violated.size() << "\n";
    for (const auto& e : violated) os << "  violated edge " << e.name() << "\n";
    total_violations += int(violated.size());
  }
  os << "total violations: " << total_violations << "\n";
  return {total_violations == 0 ? kOk : 1, os.str()};
}

Result cmd_orbit(const std::string& scenario_path, const std::string& csv_path) {
  scenario::Scenario sc;
  try {
    sc = scenario::parse_scenario_file(scenario_path);
  } catch (const scenario::ScenarioError& e) {
    return {kParseError, std::string("scenario error: ") + e.what() + "\n"};
  }
  try {
    int levels = 1;
    if (sc.seq.space.family.kind != metric::SeminormFamily::Kind::SingleNorm)
      levels = int(std::min<Int>(sc.seq.space.family.truncation, sc.seq.dim));

    // one frozen selection feeds both the seminorm columns and the distances
    orbits::Orbit orbit;
    std::vector<double> dist;
    if (sc.vectors.size() >= 2) {
      auto pair = orbits::generate_pair(sc.seq, sc.vectors[0], sc.vectors[1], sc.policy,
                                        sc.config.density.horizon, sc.seed);
      orbit = pair.a;
      dist = pair.dist;
    } else {
      orbit = orbits::generate_orbit(sc.seq, sc.vectors[0], sc.policy,
                                     sc.config.density.horizon, sc.seed);
    }
    std::vector<std::vector<double>> series;
    for (int m = 1; m <= levels; ++m)
      series.push_back(orbits::seminorm_series(orbit, sc.seq.space.family, m));

    std::ostringstream csv;
    csv << "k";
    for (int m = 1; m <= levels; ++m) csv << ",p_" << m;
    if (!dist.empty()) csv << ",d";
    csv << "\n";
    char buf[64];
    for (Int k = 1; k <= sc.config.density.horizon; ++k) {
      csv << k;
      for (int m = 0; m < levels; ++m) {
        std::snprintf(buf, sizeof(buf), "%.17g", series[std::size_t(m)][std::size_t(k - 1)]);
        csv << "," << buf;
      }
      if (!dist.empty()) {
        std::snprintf(buf, sizeof(buf), "%.17g", dist[std::size_t(k - 1)]);
        csv << "," << buf;
      }
      csv << "\n";
    }
    if (!csv_path.empty()) write_file_atomic(csv_path, csv.str());
    std::ostringstream os;
    os << "orbit rows " << sc.config.density.horizon << " levels " << levels
       << (dist.empty() ? "" : " with distances") << "\n";
    return {kOk, csv_path.empty() ? csv.str() : os.str()};
  } catch (const orbits::DomainError& e) {
    return {kDomainError, std::string("domain error: ") + e.what() + "\n"};
  }
}

}  // namespace chaoscalc::cmd
