#include "chaoscalc/presets.hpp"

#include <cmath>
#include <sstream>

namespace chaoscalc::presets {

namespace {

using classify::Flag;

Int floor_log2(Int n) {
  Int k = 0;
  while ((Int(1) << (k + 1)) <= n) ++k;
  return k;
}

// Window short enough to sit fully inside the largest block of the preset's
// sparse set below the horizon; the Banach scans cannot see runs longer than
// the horizon affords.
Int run_affordable_window(Int horizon) { return std::max<Int>(4, floor_log2(horizon) - 1); }

classify::ChaosConfig preset_config(Int horizon) {
  auto cfg = classify::ChaosConfig::defaults();
  cfg.density.horizon = horizon;
  cfg.density.window = run_affordable_window(horizon);
  cfg.density.tail = 0.5;
  return cfg;
}

scenario::Scenario gated_scalar_scenario(const std::string& gate, Int horizon) {
  scenario::Scenario sc;
  sc.seq.kind = orbits::OperatorSeq::Kind::ScalarGated;
  sc.seq.dim = 1;
  sc.seq.space = metric::parse_metric_spec("norm:euclidean");
  sc.seq.gate = natset::parse_set_spec(gate);
  sc.seq.on_coeff = {orbits::CoeffRule::Kind::StepIndex, 0.0};
  sc.seq.off_coeff = {orbits::CoeffRule::Kind::Constant, 0.0};
  sc.vectors = {orbits::Vec::Constant(1, 1.0), orbits::Vec::Constant(1, 2.0)};
  sc.config = preset_config(horizon);
  sc.seed = 7;
  return sc;
}

}  // namespace

std::optional<PresetId> preset_from_name(const std::string& name) {
  if (name == "primeran-a") return PresetId::PrimeranA;
  if (name == "primeran-b") return PresetId::PrimeranB;
  if (name == "alternating") return PresetId::Alternating;
  if (name == "eigen-witness") return PresetId::EigenWitness;
  if (name == "reci") return PresetId::Reci;
  if (name == "blockset-banach") return PresetId::BlocksetBanach;
  return std::nullopt;
}

std::string preset_name(PresetId id) {
  switch (id) {
    case PresetId::PrimeranA: return "primeran-a";
    case PresetId::PrimeranB: return "primeran-b";
    case PresetId::Alternating: return "alternating";
    case PresetId::EigenWitness: return "eigen-witness";
    case PresetId::Reci: return "reci";
    case PresetId::BlocksetBanach: return "blockset-banach";
  }
  return "?";
}

std::vector<std::string> preset_names() {
  return {"primeran-a", "primeran-b", "alternating", "eigen-witness", "reci", "blockset-banach"};
}

Preset make_preset(PresetId id, Int horizon) {
  Preset p;
  p.id = id;
  switch (id) {
    case PresetId::PrimeranA: {
      // T_k = k*I on A, 0 on B = N \ A, with A a geometric block family:
      // upper Banach density 1 on both sides, upper density of B equal to 1.
      p.scenario = gated_scalar_scenario("blocks:pos=geom(1,2):len=linear", horizon);
      p.expected_flags = {{Flag::RDC, true}, {Flag::RDC1, true}, {Flag::RDC2, false}};
      break;
    }
    case PresetId::PrimeranB: {
      // Equal alternating blocks: A at polynomial positions k^2 with linear
      // lengths, so both prefix densities settle near 1/2.
      p.scenario = gated_scalar_scenario("blocks:pos=poly(1,2):len=linear", horizon);
      p.expected_flags = {{Flag::RDC, true}, {Flag::RDC1, false}, {Flag::RDC2, false}};
      break;
    }
    case PresetId::Alternating: {
      scenario::Scenario sc;
      sc.seq.kind = orbits::OperatorSeq::Kind::Alternating;
      sc.seq.dim = 1;
      sc.seq.space = metric::parse_metric_spec("norm:euclidean");
      sc.seq.cycle = {orbits::Mat::Identity(1, 1), orbits::Mat::Zero(1, 1)};
      sc.vectors = {orbits::Vec::Constant(1, 1.0), orbits::Vec::Constant(1, 2.0)};
      sc.config = classify::ChaosConfig::defaults();
      sc.config.density.horizon = horizon;
      sc.config.density.window = std::min<Int>(1000, horizon / 10);
      sc.seed = 7;
      p.scenario = sc;
      p.expected_flags = {
          {Flag::LY, true}, {Flag::SLY, false}, {Flag::RDC, false}, {Flag::DC, false}};
      break;
    }
    case PresetId::EigenWitness:
    case PresetId::Reci:
    case PresetId::BlocksetBanach:
      // these presets run bespoke checks; see run_preset
      p.scenario.config = preset_config(horizon);
      break;
  }
  return p;
}

namespace {

void check_line(std::ostringstream& os, bool& all, const std::string& what, bool pass) {
  os << (pass ? "PASS" : "FAIL") << " " << what << "\n";
  all = all && pass;
}

PresetRun run_classification_preset(PresetId id, Int horizon) {
  auto preset = make_preset(id, horizon);
  std::ostringstream os;
  bool all = true;

  if (id == PresetId::PrimeranA || id == PresetId::PrimeranB) {
    // Validate the block construction through the density module first.
    const auto& gate = *preset.scenario.seq.gate;
    auto dcfg = preset.scenario.config.density;
    auto a_profile = density::estimate_profile(gate, dcfg);
    auto b_profile = density::estimate_profile(*natset::SetExpr::complement(preset.scenario.seq.gate), dcfg);
    double th1 = preset.scenario.config.theta1;
    check_line(os, all, "construction upper-banach(A) >= 1-theta1",
               a_profile.upper_banach.geq(1.0 - th1));
    check_line(os, all, "construction upper-banach(B) >= 1-theta1",
               b_profile.upper_banach.geq(1.0 - th1));
    check_line(os, all, "construction upper(A) <= 0.6", a_profile.upper.value() <= 0.6);
    if (id == PresetId::PrimeranA)
      check_line(os, all, "construction upper(B) >= 1-theta1", b_profile.upper.geq(1.0 - th1));
    else
      check_line(os, all, "construction upper(B) < 1-theta1", !b_profile.upper.geq(1.0 - th1));
  }

  auto pair = orbits::generate_pair(preset.scenario.seq, preset.scenario.vectors[0],
                                    preset.scenario.vectors[1], preset.scenario.policy,
                                    preset.scenario.config.density.horizon, preset.scenario.seed);
  auto verdict = classify::classify_pair(pair, preset.scenario.config);
  for (const auto& [flag, expected] : preset.expected_flags) {
    std::ostringstream what;
    what << "flag " << classify::flag_name(flag) << " expected "
         << (expected ? "true" : "false");
    check_line(os, all, what.str(), verdict.flag(flag) == expected);
  }
  PresetRun run;
  run.all_pass = all;
  run.report = os.str();
  return run;
}

PresetRun run_eigen_witness(Int horizon) {
  std::ostringstream os;
  bool all = true;
  orbits::Mat m(2, 2);
  m << 2.0, 0.0, 0.0, 1.0 / 3.0;
  auto a = rel::LinearRelation::from_matrix(m);
  orbits::Vec x = orbits::Vec::Zero(2);
  x[0] = 1.0;
  auto space = metric::parse_metric_spec("norm:euclidean");
  auto orbit = orbits::eigen_witness_orbit(a, 2.0, x, horizon, space);
  check_line(os, all, "orbit certified against A^k up to the power cap", true);
  double ratio_ok = true;
  for (Int k = 1; k < std::min<Int>(horizon, 40); ++k) {
    double r = orbit.norm0[std::size_t(k)] / orbit.norm0[std::size_t(k - 1)];
    if (std::abs(r - 2.0) > 1e-9) ratio_ok = false;
  }
  check_line(os, all, "seminorm column doubles per step", ratio_ok);
  density::Config dcfg;
  dcfg.horizon = horizon;
  dcfg.window = std::max<Int>(2, std::min<Int>(1000, horizon / 10));
  auto verdict = orbits::unbounded_verdict(orbit, space.family, 1, orbits::DensityMode::Plain,
                                           dcfg, 1e6, 0.05);
  check_line(os, all, "distributionally unbounded verdict", verdict.verdict);
  PresetRun run;
  run.all_pass = all;
  run.report = os.str();
  return run;
}

PresetRun run_reci(Int horizon) {
  std::ostringstream os;
  bool all = true;
  // M with first row (1.5, 0, 0): e1 is an eigenvector of the adjoint with
  // lambda = 1.5; the multivalued direction w is orthogonal to e1.
  orbits::Mat m(3, 3);
  m << 1.5, 0.0, 0.0, 0.3, 0.6, 0.0, -0.2, 0.1, 0.4;
  orbits::Vec w(3);
  w << 0.0, 1.0, 0.5;
  orbits::Mat cols(6, 4);
  cols.setZero();
  cols.topLeftCorner(3, 3) = orbits::Mat::Identity(3, 3);
  cols.block(3, 0, 3, 3) = m;
  cols.block(3, 3, 3, 1) = w;
  auto a = rel::LinearRelation::from_graph_basis(3, 3, cols);

  orbits::Vec xstar = orbits::Vec::Zero(3);
  xstar[0] = 1.0;
  auto adj = a.adjoint();
  check_line(os, all, "adjoint eigenpair lambda=1.5 at x*=e1",
             adj.graph_member(xstar, 1.5 * xstar, 1e-8));

  orbits::OperatorSeq seq;
  seq.kind = orbits::OperatorSeq::Kind::RelationPowers;
  seq.dim = 3;
  seq.relation = a;
  seq.space = metric::parse_metric_spec("norm:euclidean");
  orbits::Vec x(3);
  x << 1.0, 1.0, 1.0;
  Int n = std::min<Int>(horizon, 50);
  auto orbit = orbits::generate_orbit(seq, x, orbits::SelectionPolicy::canonical(), n, 11);
  bool growth_ok = true;
  double base = std::abs(xstar.dot(x));
  for (Int k = 1; k <= n; ++k) {
    double expected = std::pow(1.5, double(k)) * base;
    double got = std::abs((xstar.adjoint() * orbit.points[std::size_t(k - 1)])(0));
    if (std::abs(got - expected) > 1e-6 * expected) growth_ok = false;
  }
  check_line(os, all, "functional growth |<x*,x_n>| = |lambda|^n |<x*,x>|", growth_ok);

  auto icfg = orbits::IrregularConfig::defaults(n);
  icfg.density.horizon = n;
  icfg.density.window = std::max<Int>(2, n / 10);
  auto ev = orbits::irregular_evidence(orbit, seq.space, icfg);
  check_line(os, all, "subsequence-to-zero test is false", !ev.subsequence_to_zero);
  PresetRun run;
  run.all_pass = all;
  run.report = os.str();
  return run;
}

PresetRun run_blockset_banach(Int horizon) {
  std::ostringstream os;
  bool all = true;
  // A = union of [4^k, 4^k + k - 1], B = union of [2*4^k, 2*4^k + k - 1]:
  // the block sets of the Li-Yorke <-> reiterative-DC argument, with the
  // second family read as [l_k - k, l_k] (endpoints shortened to the grammar's
  // k-length blocks).
  auto a_set = natset::parse_set_spec("blocks:pos=geom(1,4):len=linear");
  auto b_set = natset::parse_set_spec("blocks:pos=geom(2,4):len=linear");

  Int ka = 0, kb = 0;
  while (natset::BlockRule{natset::BlockRule::Pos::Geometric, 1, 4,
                           natset::BlockRule::Len::Linear}.position(ka + 1) <= horizon)
    ++ka;
  while (natset::BlockRule{natset::BlockRule::Pos::Geometric, 2, 4,
                           natset::BlockRule::Len::Linear}.position(kb + 1) <= horizon)
    ++kb;
  density::Config dcfg;
  dcfg.horizon = horizon;
  dcfg.window = std::max<Int>(2, std::min(ka, kb) - 1);
  dcfg.tail = 0.2;  // the largest blocks of both families sit above horizon/4

  auto pa = density::estimate_profile(*a_set, dcfg);
  auto pb = density::estimate_profile(*b_set, dcfg);
  check_line(os, all, "upper-banach(A) >= 0.95", pa.upper_banach.geq(0.95));
  check_line(os, all, "upper-banach(B) >= 0.95", pb.upper_banach.geq(0.95));
  check_line(os, all, "sets disjoint below horizon", [&] {
    auto ba = a_set->bitmap(horizon);
    auto bb = b_set->bitmap(horizon);
    for (Int k = 1; k <= horizon; ++k)
      if (ba[std::size_t(k)] && bb[std::size_t(k)]) return false;
    return true;
  }());

  // Orbit growing along B and vanishing off it: reiteratively distributionally
  // irregular.
  orbits::OperatorSeq seq;
  seq.kind = orbits::OperatorSeq::Kind::ScalarGated;
  seq.dim = 1;
  seq.gate = b_set;
  seq.on_coeff = {orbits::CoeffRule::Kind::StepIndex, 0.0};
  seq.off_coeff = {orbits::CoeffRule::Kind::Constant, 0.0};
  seq.space = metric::parse_metric_spec("norm:euclidean");
  auto orbit = orbits::generate_orbit(seq, orbits::Vec::Constant(1, 1.0),
                                      orbits::SelectionPolicy::canonical(), horizon, 3);
  orbits::IrregularConfig icfg = orbits::IrregularConfig::defaults(horizon);
  icfg.density = dcfg;
  icfg.unbounded_level = 1e3;
  auto labels = orbits::irregular_class(orbit, seq.space, icfg);
  check_line(os, all, "reiteratively distributionally irregular vector",
             labels.count(orbits::IrregularLabel::ReitDistIrregular) == 1);
  PresetRun run;
  run.all_pass = all;
  run.report = os.str();
  return run;
}

}  // namespace

PresetRun run_preset(PresetId id, Int horizon) {
  switch (id) {
    case PresetId::PrimeranA:
    case PresetId::PrimeranB:
    case PresetId::Alternating:
      return run_classification_preset(id, horizon);
    case PresetId::EigenWitness:
      return run_eigen_witness(horizon);
    case PresetId::Reci:
      return run_reci(horizon);
    case PresetId::BlocksetBanach:
      return run_blockset_banach(horizon);
  }
  return {};
}

}  // namespace chaoscalc::presets
