#include <doctest.h>

#include <random>

#include "chaoscalc/classify.hpp"
#include "chaoscalc/presets.hpp"

using namespace chaoscalc;
using classify::ChaosConfig;
using classify::Flag;
using natset::Int;
using orbits::OperatorSeq;
using orbits::SelectionPolicy;
using orbits::Vec;
using rel::Mat;

namespace {

ChaosConfig test_config(Int horizon, Int window) {
  auto cfg = ChaosConfig::defaults();
  cfg.density.horizon = horizon;
  cfg.density.window = window;
  return cfg;
}

OperatorSeq alternating_seq() {
  OperatorSeq seq;
  seq.kind = OperatorSeq::Kind::Alternating;
  seq.dim = 1;
  seq.cycle = {Mat::Identity(1, 1), Mat::Zero(1, 1)};
  seq.space = metric::parse_metric_spec("norm:euclidean");
  return seq;
}

orbits::OrbitPair scalar_pair(const OperatorSeq& seq, Int horizon, std::uint64_t seed = 7) {
  return orbits::generate_pair(seq, Vec::Constant(1, 1.0), Vec::Constant(1, 2.0),
                               SelectionPolicy::canonical(), horizon, seed);
}

}  // namespace

TEST_CASE("density_stats partition duality is exact at shared thresholds") {
  auto seq = alternating_seq();
  auto cfg = test_config(4000, 40);
  auto pair = scalar_pair(seq, 4000);
  auto stats = classify::density_stats(pair.dist, cfg);
  REQUIRE(stats.lower.size() == cfg.sigma_grid.size());
  for (std::size_t i = 0; i < cfg.sigma_grid.size(); ++i) {
    const auto& l = stats.lower[i];
    const auto& u = stats.upper_at_sigma[i];
    // d_lower(L) + d_upper(U) = 1 and Bd_lower(L) + Bd_upper(U) = 1, exactly
    CHECK(l.lower.num * u.upper.den + u.upper.num * l.lower.den == l.lower.den * u.upper.den);
    CHECK(l.lower_banach.num * u.upper_banach.den + u.upper_banach.num * l.lower_banach.den ==
          l.lower_banach.den * u.upper_banach.den);
    // monotonicity along the grid
    if (i > 0) {
      CHECK(stats.lower[i - 1].upper.value() <= stats.lower[i].upper.value() + 1e-15);
      CHECK(stats.upper[i - 1].lower.value() + 1e-15 >= stats.upper[i].lower.value());
    }
  }
}

TEST_CASE("degenerate distance sequences") {
  auto cfg = test_config(2000, 40);
  // identically zero distances: every L(sigma) is everything
  std::vector<double> zeros(2000, 0.0);
  auto stats = classify::density_stats(zeros, cfg);
  for (const auto& p : stats.lower) {
    CHECK(p.lower.value() == 1.0);
    CHECK(p.upper_banach.value() == 1.0);
  }
  // alternating 0/c with sigma below c: L is the evens
  std::vector<double> alt(2000);
  for (Int k = 1; k <= 2000; ++k) alt[std::size_t(k - 1)] = (k % 2 == 1) ? 3.0 : 0.0;
  auto astats = classify::density_stats(alt, cfg);
  CHECK(astats.lower.front().lower.value() == doctest::Approx(0.5).epsilon(0.01));
  CHECK(astats.lower.front().upper.value() == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("alternating counterexample: LY but not sLY, RDC, DC") {
  auto seq = alternating_seq();
  auto cfg = test_config(20000, 100);
  auto verdict = classify::classify_pair(scalar_pair(seq, 20000), cfg);
  CHECK(verdict.flag(Flag::LY));
  CHECK_FALSE(verdict.flag(Flag::SLY));
  CHECK_FALSE(verdict.flag(Flag::RDC));
  CHECK_FALSE(verdict.flag(Flag::DC));
  CHECK(classify::implication_check(verdict).empty());
}

TEST_CASE("contraction pair: every flag false") {
  OperatorSeq seq;
  seq.kind = OperatorSeq::Kind::ConstantPowers;
  seq.dim = 1;
  seq.matrix = 0.5 * Mat::Identity(1, 1);
  seq.space = metric::parse_metric_spec("norm:euclidean");
  auto cfg = test_config(20000, 100);
  auto verdict = classify::classify_pair(scalar_pair(seq, 20000), cfg);
  for (int f = 0; f < classify::kFlagCount; ++f) CHECK_FALSE(verdict.flags[std::size_t(f)]);
}

TEST_CASE("primeran presets separate the reiterative types") {
  auto preset_a = presets::make_preset(presets::PresetId::PrimeranA, 100000);
  auto pair_a = orbits::generate_pair(preset_a.scenario.seq, preset_a.scenario.vectors[0],
                                      preset_a.scenario.vectors[1], preset_a.scenario.policy,
                                      100000, 7);
  auto va = classify::classify_pair(pair_a, preset_a.scenario.config);
  CHECK(va.flag(Flag::RDC));
  CHECK(va.flag(Flag::RDC1));
  CHECK_FALSE(va.flag(Flag::RDC2));
  CHECK(classify::implication_check(va).empty());

  auto preset_b = presets::make_preset(presets::PresetId::PrimeranB, 100000);
  auto pair_b = orbits::generate_pair(preset_b.scenario.seq, preset_b.scenario.vectors[0],
                                      preset_b.scenario.vectors[1], preset_b.scenario.policy,
                                      100000, 7);
  auto vb = classify::classify_pair(pair_b, preset_b.scenario.config);
  CHECK(vb.flag(Flag::RDC));
  CHECK_FALSE(vb.flag(Flag::RDC1));
  CHECK_FALSE(vb.flag(Flag::RDC2));
  CHECK(classify::implication_check(vb).empty());
}

TEST_CASE("implication_check reports injected violations") {
  classify::ChaosVerdict v;
  v.set(Flag::DC, true);
  auto violated = classify::implication_check(v);
  bool found_ly = false;
  for (const auto& e : violated)
    if (e.from == Flag::DC && e.to == Flag::LY) found_ly = true;
  CHECK(found_ly);

  classify::ChaosVerdict v2;
  v2.set(Flag::ANG2, true);
  auto violated2 = classify::implication_check(v2);
  bool found_ang1 = false;
  for (const auto& e : violated2)
    if (e.from == Flag::ANG2 && e.to == Flag::ANG1) found_ang1 = true;
  CHECK(found_ang1);

  classify::ChaosVerdict ok;
  ok.set(Flag::LY, true);
  CHECK(classify::implication_check(ok).empty());
}

TEST_CASE("scale equivariance of gated scalar scenarios") {
  OperatorSeq seq;
  seq.kind = OperatorSeq::Kind::ScalarGated;
  seq.dim = 1;
  seq.gate = natset::parse_set_spec("blocks:pos=geom(1,2):len=linear");
  seq.on_coeff = {orbits::CoeffRule::Kind::StepIndex, 0.0};
  seq.off_coeff = {orbits::CoeffRule::Kind::Constant, 0.0};
  seq.space = metric::parse_metric_spec("norm:euclidean");
  Int n = 30000;
  double c = 4.0;
  auto base = orbits::generate_pair(seq, Vec::Constant(1, 1.0), Vec::Constant(1, 2.0),
                                    SelectionPolicy::canonical(), n, 7);
  auto scaled = orbits::generate_pair(seq, Vec::Constant(1, c), Vec::Constant(1, 2.0 * c),
                                      SelectionPolicy::canonical(), n, 7);
  auto cfg = test_config(n, 12);
  auto cfg_scaled = cfg;
  for (auto& s : cfg_scaled.sigma_grid) s *= c;
  cfg_scaled.eps_grid = cfg_scaled.sigma_grid;
  auto v1 = classify::classify_pair(base, cfg);
  auto v2 = classify::classify_pair(scaled, cfg_scaled);
  for (int f = 0; f < classify::kFlagCount; ++f)
    CHECK(v1.flags[std::size_t(f)] == v2.flags[std::size_t(f)]);
}

TEST_CASE("sample sets aggregate under a shared threshold") {
  auto preset = presets::make_preset(presets::PresetId::PrimeranA, 30000);
  auto cfg = preset.scenario.config;
  cfg.density.horizon = 30000;
  std::vector<Vec> sample = {Vec::Constant(1, 1.0), Vec::Constant(1, 2.0), Vec::Constant(1, 3.0)};
  auto report = classify::classify_sample_set(preset.scenario.seq, sample,
                                              SelectionPolicy::canonical(), cfg, 7);
  CHECK(report.aggregate.flag(Flag::RDC));
  CHECK(report.aggregate.sampled_only);
  CHECK(report.aggregate.witnesses[std::size_t(int(Flag::RDC))].present);
  CHECK(report.pair_count >= 3);

  CHECK_THROWS_AS(classify::classify_sample_set(preset.scenario.seq,
                                                {Vec::Constant(1, 1.0), Vec::Constant(1, 1.0)},
                                                SelectionPolicy::canonical(), cfg, 7),
                  std::invalid_argument);
}

TEST_CASE("uniformly irregular manifold certifies the scrambled aggregate at 2^-m") {
  // coordmax Frechet space; every nonzero vector of span{e1} is reiteratively
  // 1-unbounded and reiteratively near zero under the gated sequence, so
  // sigma = 2^-1 certifies the reiteratively scrambled aggregate.  (Both-sided
  // plain upper density 1 would need block lengths proportional to position,
  // outside the closed-form family grammar.)
  OperatorSeq seq;
  seq.kind = OperatorSeq::Kind::ScalarGated;
  seq.dim = 2;
  seq.gate = natset::parse_set_spec("blocks:pos=geom(1,2):len=linear");
  seq.on_coeff = {orbits::CoeffRule::Kind::StepIndex, 0.0};
  seq.off_coeff = {orbits::CoeffRule::Kind::Constant, 0.0};
  seq.space = metric::parse_metric_spec("coordmax");
  Int n = 30000;
  auto cfg = test_config(n, 12);
  cfg.sigma_grid = {0.125, 0.25, 0.5};
  cfg.eps_grid = cfg.sigma_grid;

  Vec v1 = Vec::Zero(2), v2 = Vec::Zero(2), v3 = Vec::Zero(2);
  v1[0] = 1.0;
  v2[0] = 2.0;
  v3[0] = 3.0;

  // each sampled vector: reiteratively distributionally 1-unbounded and
  // reiteratively near zero, with the same seminorm index
  orbits::IrregularConfig icfg;
  icfg.density = cfg.density;
  icfg.delta_grid = {1e-6, 1e-3, 0.1};
  icfg.unbounded_level = 1e3;
  for (const auto& v : {v1, v2, v3}) {
    auto orbit = orbits::generate_orbit(seq, v, SelectionPolicy::canonical(), n, 3);
    CHECK(orbits::unbounded_verdict(orbit, seq.space.family, 1, orbits::DensityMode::Reiterative,
                                    icfg.density, icfg.unbounded_level, 0.05)
              .verdict);
    CHECK(orbits::near_zero_verdict(orbit, orbits::DensityMode::Reiterative, icfg.density,
                                    icfg.delta_grid, 0.05)
              .verdict);
    auto labels = orbits::irregular_class(orbit, seq.space, icfg);
    CHECK(labels.count(orbits::IrregularLabel::ReitDistIrregular) == 1);
  }

  auto report = classify::classify_sample_set(seq, {v1, v2, v3}, SelectionPolicy::canonical(),
                                              cfg, 7);
  CHECK(report.aggregate.flag(Flag::RDC));
  auto w = report.aggregate.witnesses[std::size_t(int(Flag::RDC))];
  REQUIRE(w.present);
  CHECK(w.sigma <= 0.5);  // certified at or below 2^-m, m = 1
}

TEST_CASE("restriction to a subspace preserves the flags") {
  OperatorSeq seq;
  seq.kind = OperatorSeq::Kind::ConstantPowers;
  seq.dim = 2;
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = 2.0;
  m(1, 1) = 0.5;
  seq.matrix = m;
  seq.space = metric::parse_metric_spec("norm:euclidean");
  auto cfg = test_config(2000, 40);

  // whole space
  Mat whole = Mat::Identity(2, 2);
  std::vector<Vec> vecs = {Vec::Zero(2), Vec::Zero(2)};
  vecs[0][0] = 1.0;
  vecs[1][0] = 2.0;
  vecs[1][1] = 0.0;
  CHECK(classify::restriction_check(seq, whole, vecs, SelectionPolicy::canonical(), cfg, 7));

  // unbounded direction span{e1}
  Mat e1span = Mat::Zero(2, 1);
  e1span(0, 0) = 1.0;
  CHECK(classify::restriction_check(seq, e1span, vecs, SelectionPolicy::canonical(), cfg, 7));

  // contracting direction span{e2}
  Mat e2span = Mat::Zero(2, 1);
  e2span(1, 0) = 1.0;
  std::vector<Vec> vecs2 = {Vec::Zero(2), Vec::Zero(2)};
  vecs2[0][1] = 1.0;
  vecs2[1][1] = 2.0;
  CHECK(classify::restriction_check(seq, e2span, vecs2, SelectionPolicy::canonical(), cfg, 7));

  // sample outside the subspace is rejected
  CHECK_THROWS_AS(
      classify::restriction_check(seq, e2span, vecs, SelectionPolicy::canonical(), cfg, 7),
      std::invalid_argument);
}

TEST_CASE("verdict JSON and stats CSV") {
  auto seq = alternating_seq();
  auto cfg = test_config(2000, 40);
  auto analysis = classify::analyze_pair(scalar_pair(seq, 2000), cfg);
  auto json = classify::verdict_to_json(analysis.verdict);
  CHECK(json.find("\"LY\": true") != std::string::npos);
  CHECK(json.find("\"sampled_only\": false") != std::string::npos);
  auto csv = classify::stats_to_csv(analysis.stats);
  CHECK(csv.rfind("sigma,dl,du,bdl,bdu,side\n", 0) == 0);
  CHECK(csv.find(",L\n") != std::string::npos);
  CHECK(csv.find(",U\n") != std::string::npos);
}
