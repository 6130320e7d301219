#include "chaoscalc/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace chaoscalc::classify {

namespace {

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> out;
  out.reserve(std::size_t(points));
  for (int i = 0; i < points; ++i)
    out.push_back(lo * std::pow(hi / lo, double(i) / double(points - 1)));
  return out;
}

}  // namespace

ChaosConfig ChaosConfig::defaults() {
  ChaosConfig cfg;
  cfg.density.horizon = 100000;
  cfg.density.window = 1000;
  cfg.density.tail = 0.5;
  cfg.sigma_grid = log_grid(1e-6, 1e2, 16);
  cfg.eps_grid = cfg.sigma_grid;
  return cfg;
}

void ChaosConfig::validate() const {
  density.validate();
  if (sigma_grid.empty() || eps_grid.empty()) throw std::invalid_argument("empty threshold grid");
  if (!std::is_sorted(sigma_grid.begin(), sigma_grid.end()) ||
      !std::is_sorted(eps_grid.begin(), eps_grid.end()))
    throw std::invalid_argument("threshold grids must be sorted");
  if (theta0 + theta_plus > 1.0)
    throw std::invalid_argument("theta0 + theta_plus must not exceed 1");
  if (theta0 <= 0 || theta1 <= 0 || theta_plus <= 0 || gap <= 0)
    throw std::invalid_argument("thresholds must be positive");
}

std::string flag_name(Flag f) {
  switch (f) {
    case Flag::DC: return "DC";
    case Flag::RDC: return "RDC";
    case Flag::RDC1: return "RDC1";
    case Flag::RDC2: return "RDC2";
    case Flag::MIX1: return "MIX1";
    case Flag::MIX2: return "MIX2";
    case Flag::MIX3: return "MIX3";
    case Flag::MIX4: return "MIX4";
    case Flag::LY: return "LY";
    case Flag::SLY: return "sLY";
    case Flag::ANG1: return "ANG1";
    case Flag::ANG2: return "ANG2";
    case Flag::RDC_0_2: return "RDC_0_2";
    case Flag::RDC_1_2: return "RDC_1_2";
    case Flag::RDC_2_2: return "RDC_2_2";
    case Flag::DC_0_2: return "DC_0_2";
    case Flag::R2H: return "R2H";
    case Flag::R2H_1: return "R2H_1";
    case Flag::R2H_2: return "R2H_2";
    case Flag::DC_2H: return "DC_2H";
    case Flag::R3: return "R3";
    case Flag::R3_1: return "R3_1";
    case Flag::R3_2: return "R3_2";
    case Flag::DC_3: return "DC_3";
  }
  return "?";
}

std::optional<Flag> flag_from_name(const std::string& name) {
  for (int i = 0; i < kFlagCount; ++i)
    if (flag_name(Flag(i)) == name) return Flag(i);
  return std::nullopt;
}

GridStats density_stats(const std::vector<double>& dist, const ChaosConfig& cfg) {
  cfg.validate();
  const Int n = cfg.density.horizon;
  if (Int(dist.size()) < n) throw std::invalid_argument("distance sequence shorter than horizon");
  GridStats stats;
  stats.sigma_grid = cfg.sigma_grid;
  stats.eps_grid = cfg.eps_grid;
  std::vector<std::uint8_t> bits(std::size_t(n) + 1, 0);
  auto profile_of = [&](double threshold, bool below) {
    for (Int k = 1; k <= n; ++k) {
      double d = dist[std::size_t(k - 1)];
      bits[std::size_t(k)] = below ? (d < threshold ? 1 : 0) : (d >= threshold ? 1 : 0);
    }
    return density::estimate_from_bitmap(bits, cfg.density);
  };
  for (double s : cfg.sigma_grid) {
    stats.lower.push_back(profile_of(s, true));
    stats.upper_at_sigma.push_back(profile_of(s, false));
  }
  for (double e : cfg.eps_grid) stats.upper.push_back(profile_of(e, false));
  return stats;
}

namespace {

struct Evidence {
  bool liminf_zero = false;
  bool limsup_positive = false;
  bool unbounded_diff = false;
  double eps_min = 0.0;
  bool eps_lower_ok = false;         // lower density of U(eps_min) ~ 0
  bool eps_lower_banach_ok = false;  // lower Banach density of U(eps_min) ~ 0
};

Evidence gather_evidence(const orbits::OrbitPair& pair, const GridStats& stats,
                         const ChaosConfig& cfg) {
  Evidence ev;
  const Int n = cfg.density.horizon;
  Int start = std::max<Int>(1, Int(std::ceil(cfg.density.tail * double(n))));
  double tmin = std::numeric_limits<double>::infinity(), tmax = 0.0;
  for (Int k = start; k <= n; ++k) {
    double d = pair.dist[std::size_t(k - 1)];
    tmin = std::min(tmin, d);
    tmax = std::max(tmax, d);
  }
  ev.liminf_zero = tmin < cfg.theta0 * cfg.sigma_grid.front();
  ev.limsup_positive = tmax >= cfg.theta_plus;
  ev.unbounded_diff = pair.diff_seminorm_sup > cfg.unbounded_level;
  ev.eps_min = cfg.eps_grid.front();
  const auto& u0 = stats.upper.front();
  ev.eps_lower_ok = u0.lower.leq(cfg.theta0);
  ev.eps_lower_banach_ok = u0.lower_banach.leq(cfg.theta0);
  return ev;
}

}  // namespace

PairAnalysis analyze_pair(const orbits::OrbitPair& pair, const ChaosConfig& cfg) {
  cfg.validate();
  if (Int(pair.dist.size()) < cfg.density.horizon)
    throw std::invalid_argument("pair horizon shorter than the configured one");

  PairAnalysis out;
  out.stats = density_stats(pair.dist, cfg);
  auto ev = gather_evidence(pair, out.stats, cfg);
  out.liminf_zero = ev.liminf_zero;
  out.limsup_positive = ev.limsup_positive;
  out.unbounded_diff = ev.unbounded_diff;
  out.verdict.config = cfg;

  const int g = int(cfg.sigma_grid.size());
  const auto& L = out.stats.lower;
  const auto& US = out.stats.upper_at_sigma;

  auto set_sigma_flag = [&](Flag f, auto&& sigma_clause, bool eps_clause) {
    auto& cert = out.certs[std::size_t(int(f))];
    cert.assign(std::size_t(g), 0);
    for (int i = 0; i < g; ++i) cert[std::size_t(i)] = (sigma_clause(i) && eps_clause) ? 1 : 0;
    for (int i = 0; i < g; ++i) {
      if (cert[std::size_t(i)]) {
        out.verdict.set(f, true);
        auto& w = out.verdict.witnesses[std::size_t(int(f))];
        w.present = true;
        w.sigma = cfg.sigma_grid[std::size_t(i)];
        w.eps = ev.eps_min;
        w.low_stat = L[std::size_t(i)].lower_banach.value();
        w.up_stat = US[std::size_t(i)].upper_banach.value();
        break;
      }
    }
  };

  auto set_single_flag = [&](Flag f, bool value) {
    out.certs[std::size_t(int(f))].assign(1, value ? 1 : 0);
    out.verdict.set(f, value);
    if (value) {
      auto& w = out.verdict.witnesses[std::size_t(int(f))];
      w.present = true;
      w.eps = ev.eps_min;
    }
  };

  set_sigma_flag(Flag::DC, [&](int i) { return L[std::size_t(i)].lower.leq(cfg.theta0); },
                 ev.eps_lower_ok);
  set_sigma_flag(Flag::RDC, [&](int i) { return L[std::size_t(i)].lower_banach.leq(cfg.theta0); },
                 ev.eps_lower_banach_ok);
  set_sigma_flag(Flag::RDC1, [&](int i) { return L[std::size_t(i)].lower_banach.leq(cfg.theta0); },
                 ev.eps_lower_ok);
  set_sigma_flag(Flag::RDC2, [&](int i) { return L[std::size_t(i)].lower.leq(cfg.theta0); },
                 ev.eps_lower_banach_ok);
  set_sigma_flag(Flag::MIX1, [&](int i) { return L[std::size_t(i)].lower_banach.leq(cfg.theta0); },
                 ev.liminf_zero);
  set_sigma_flag(Flag::MIX2, [&](int i) { return L[std::size_t(i)].lower.leq(cfg.theta0); },
                 ev.liminf_zero);
  set_single_flag(Flag::MIX3, ev.limsup_positive && ev.eps_lower_banach_ok);
  set_single_flag(Flag::MIX4, ev.limsup_positive && ev.eps_lower_ok);
  set_single_flag(Flag::LY, ev.liminf_zero && ev.limsup_positive);
  set_single_flag(Flag::SLY, ev.unbounded_diff && ev.liminf_zero);
  set_single_flag(Flag::ANG1, ev.unbounded_diff && ev.eps_lower_banach_ok);
  set_single_flag(Flag::ANG2, ev.unbounded_diff && ev.eps_lower_ok);

  set_sigma_flag(Flag::RDC_0_2,
                 [&](int i) { return US[std::size_t(i)].upper_banach.geq(cfg.theta_plus); },
                 ev.eps_lower_banach_ok);
  set_sigma_flag(Flag::RDC_1_2,
                 [&](int i) { return US[std::size_t(i)].upper_banach.geq(cfg.theta_plus); },
                 ev.eps_lower_ok);
  set_sigma_flag(Flag::RDC_2_2,
                 [&](int i) { return US[std::size_t(i)].upper.geq(cfg.theta_plus); },
                 ev.eps_lower_banach_ok);
  set_sigma_flag(Flag::DC_0_2,
                 [&](int i) { return US[std::size_t(i)].upper.geq(cfg.theta_plus); },
                 ev.eps_lower_ok);

  // Type 2.5: a gap of at least `gap` between the running sup of the lower
  // stat and the running inf of the upper stat over all grid sigmas <= grid[j].
  // Type 3: the same over a grid interval [sigma_i, sigma_j]; the profiles are
  // piecewise constant in sigma, so a single grid point certifies a genuine
  // interval.
  auto stat_low = [&](Flag f, int i) {
    const auto& p = L[std::size_t(i)];
    return (f == Flag::R2H || f == Flag::R2H_1 || f == Flag::R3 || f == Flag::R3_1)
               ? p.lower_banach.value()
               : p.lower.value();
  };
  auto stat_up = [&](Flag f, int i) {
    const auto& p = L[std::size_t(i)];
    return (f == Flag::R2H || f == Flag::R2H_2 || f == Flag::R3 || f == Flag::R3_2)
               ? p.upper_banach.value()
               : p.upper.value();
  };

  auto set_range_flag = [&](Flag f) {
    auto& cert = out.certs[std::size_t(int(f))];
    cert.assign(std::size_t(g), 0);
    double sup_low = 0.0, inf_up = 1.0;
    for (int j = 0; j < g; ++j) {
      sup_low = std::max(sup_low, stat_low(f, j));
      inf_up = std::min(inf_up, stat_up(f, j));
      cert[std::size_t(j)] = sup_low + cfg.gap <= inf_up ? 1 : 0;
      if (cert[std::size_t(j)] && !out.verdict.flag(f)) {
        out.verdict.set(f, true);
        auto& w = out.verdict.witnesses[std::size_t(int(f))];
        w.present = true;
        w.r = cfg.sigma_grid[std::size_t(j)];
        w.c = 0.5 * (sup_low + inf_up);
        w.low_stat = sup_low;
        w.up_stat = inf_up;
      }
    }
  };
  auto set_interval_flag = [&](Flag f) {
    auto& cert = out.certs[std::size_t(int(f))];
    cert.assign(std::size_t(g) * std::size_t(g), 0);
    for (int i = 0; i < g; ++i) {
      double sup_low = 0.0, inf_up = 1.0;
      for (int j = i; j < g; ++j) {
        sup_low = std::max(sup_low, stat_low(f, j));
        inf_up = std::min(inf_up, stat_up(f, j));
        bool ok = sup_low + cfg.gap <= inf_up;
        cert[std::size_t(i) * std::size_t(g) + std::size_t(j)] = ok ? 1 : 0;
        if (ok && !out.verdict.flag(f)) {
          out.verdict.set(f, true);
          auto& w = out.verdict.witnesses[std::size_t(int(f))];
          w.present = true;
          w.a = cfg.sigma_grid[std::size_t(i)];
          w.b = cfg.sigma_grid[std::size_t(j)];
          w.c = 0.5 * (sup_low + inf_up);
          w.low_stat = sup_low;
          w.up_stat = inf_up;
        }
      }
    }
  };
  set_range_flag(Flag::R2H);
  set_range_flag(Flag::R2H_1);
  set_range_flag(Flag::R2H_2);
  set_range_flag(Flag::DC_2H);
  set_interval_flag(Flag::R3);
  set_interval_flag(Flag::R3_1);
  set_interval_flag(Flag::R3_2);
  set_interval_flag(Flag::DC_3);

  return out;
}

ChaosVerdict classify_pair(const orbits::OrbitPair& pair, const ChaosConfig& cfg) {
  return analyze_pair(pair, cfg).verdict;
}

const std::vector<Edge>& implication_edges() {
  static const std::vector<Edge> edges = [] {
    std::vector<Edge> e;
    auto add = [&](Flag from, std::initializer_list<Flag> tos) {
      for (Flag to : tos) e.push_back({from, to});
    };
    // (i) -> (ii)-(ix); (ii) -> (iv),(v),(vii),(viii),(ix);
    // (iii) -> (iv)-(vii),(ix); (iv) -> (v),(vii),(ix);
    // (v),(vii),(viii) -> (ix); (vi) -> (v),(ix)
    add(Flag::DC, {Flag::RDC1, Flag::RDC2, Flag::RDC, Flag::MIX1, Flag::MIX2, Flag::MIX3,
                   Flag::MIX4, Flag::LY});
    add(Flag::RDC1, {Flag::RDC, Flag::MIX1, Flag::MIX3, Flag::MIX4, Flag::LY});
    add(Flag::RDC2, {Flag::RDC, Flag::MIX1, Flag::MIX2, Flag::MIX3, Flag::LY});
    add(Flag::RDC, {Flag::MIX1, Flag::MIX3, Flag::LY});
    add(Flag::MIX1, {Flag::LY});
    add(Flag::MIX2, {Flag::MIX1, Flag::LY});
    add(Flag::MIX3, {Flag::LY});
    add(Flag::MIX4, {Flag::LY});
    // type ladders s = 1 -> 2 -> 2.5 -> 3 (all ordered pairs)
    add(Flag::RDC, {Flag::RDC_0_2, Flag::R2H, Flag::R3});
    add(Flag::RDC_0_2, {Flag::R2H, Flag::R3});
    add(Flag::R2H, {Flag::R3});
    add(Flag::RDC1, {Flag::RDC_1_2, Flag::R2H_1, Flag::R3_1});
    add(Flag::RDC_1_2, {Flag::R2H_1, Flag::R3_1});
    add(Flag::R2H_1, {Flag::R3_1});
    add(Flag::RDC2, {Flag::RDC_2_2, Flag::R2H_2, Flag::R3_2});
    add(Flag::RDC_2_2, {Flag::R2H_2, Flag::R3_2});
    add(Flag::R2H_2, {Flag::R3_2});
    add(Flag::DC, {Flag::DC_0_2, Flag::DC_2H, Flag::DC_3});
    add(Flag::DC_0_2, {Flag::DC_2H, Flag::DC_3});
    add(Flag::DC_2H, {Flag::DC_3});
    // type 0;s implies types 1;s and 2;s
    add(Flag::DC_0_2, {Flag::RDC_1_2, Flag::RDC_2_2});
    add(Flag::DC_2H, {Flag::R2H_1, Flag::R2H_2});
    add(Flag::DC_3, {Flag::R3_1, Flag::R3_2});
    // types 1;s and 2;s imply reiterative type 0;s
    add(Flag::RDC_1_2, {Flag::RDC_0_2});
    add(Flag::RDC_2_2, {Flag::RDC_0_2});
    add(Flag::R2H_1, {Flag::R2H});
    add(Flag::R2H_2, {Flag::R2H});
    add(Flag::R3_1, {Flag::R3});
    add(Flag::R3_2, {Flag::R3});
    // strong Li-Yorke block: (A)-(C)
    add(Flag::SLY, {Flag::LY});
    add(Flag::ANG1, {Flag::SLY});
    add(Flag::ANG2, {Flag::ANG1, Flag::SLY});
    return e;
  }();
  return edges;
}

std::vector<Edge> implication_check(const ChaosVerdict& v) {
  std::vector<Edge> violated;
  for (const auto& e : implication_edges())
    if (v.flag(e.from) && !v.flag(e.to)) violated.push_back(e);
  return violated;
}

SampleSetReport classify_sample_set(const orbits::OperatorSeq& seq,
                                    const std::vector<orbits::Vec>& vectors,
                                    const orbits::SelectionPolicy& policy, const ChaosConfig& cfg,
                                    std::uint64_t seed, bool line_evidence) {
  if (vectors.size() < 2) throw std::invalid_argument("sample set needs at least 2 vectors");
  std::vector<orbits::Vec> sample = vectors;
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i + 1; j < sample.size(); ++j)
      if ((sample[i] - sample[j]).norm() <= 1e-14 * (1.0 + sample[i].norm()))
        throw std::invalid_argument("sample set contains two equal vectors");
  if (line_evidence) {
    for (double t : {0.25, 0.5, 0.75}) {
      orbits::Vec p = vectors[0] + t * (vectors[1] - vectors[0]);
      bool dup = false;
      for (const auto& v : sample)
        if ((v - p).norm() <= 1e-12 * (1.0 + p.norm())) dup = true;
      if (!dup) sample.push_back(p);
    }
  }

  SampleSetReport report;
  report.vector_count = int(sample.size());
  std::array<std::vector<std::uint8_t>, kFlagCount> agg;
  bool first = true;
  std::uint64_t stream = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      auto pair = orbits::generate_pair(seq, sample[i], sample[j], policy,
                                        cfg.density.horizon, seed + 1000 * stream++);
      auto analysis = analyze_pair(pair, cfg);
      report.pair_verdicts.push_back(analysis.verdict);
      ++report.pair_count;
      if (first) {
        agg = analysis.certs;
        first = false;
      } else {
        for (int f = 0; f < kFlagCount; ++f)
          for (std::size_t idx = 0; idx < agg[std::size_t(f)].size(); ++idx)
            agg[std::size_t(f)][idx] &= analysis.certs[std::size_t(f)][idx];
      }
    }
  }

  report.aggregate.config = cfg;
  report.aggregate.sampled_only = true;
  for (int f = 0; f < kFlagCount; ++f) {
    const auto& cert = agg[std::size_t(f)];
    auto it = std::find(cert.begin(), cert.end(), std::uint8_t(1));
    if (it == cert.end()) continue;
    report.aggregate.set(Flag(f), true);
    auto& w = report.aggregate.witnesses[std::size_t(f)];
    w.present = true;
    std::size_t idx = std::size_t(it - cert.begin());
    if (cert.size() == cfg.sigma_grid.size()) {
      w.sigma = cfg.sigma_grid[idx];
    } else if (cert.size() == cfg.sigma_grid.size() * cfg.sigma_grid.size()) {
      w.a = cfg.sigma_grid[idx / cfg.sigma_grid.size()];
      w.b = cfg.sigma_grid[idx % cfg.sigma_grid.size()];
    }
  }
  return report;
}

bool restriction_check(const orbits::OperatorSeq& seq, const orbits::Mat& subspace,
                       const std::vector<orbits::Vec>& vectors,
                       const orbits::SelectionPolicy& policy, const ChaosConfig& cfg,
                       std::uint64_t seed) {
  orbits::Mat w = rel::orthonormal_basis(subspace);
  for (const auto& v : vectors) {
    orbits::Vec resid = v - w * (w.adjoint() * v);
    if (resid.norm() > 1e-9 * (1.0 + v.norm()))
      throw std::invalid_argument("sample vector outside the restriction subspace");
  }

  const Int n = cfg.density.horizon;
  std::uint64_t stream = 0;

  // Restricted-member pair for one (x, y).  Constant powers keep the member
  // in factored form (W, M^k W): a single graph basis cannot hold both scales
  // once ||M^k|| crosses 1/eps, while the factored value map stays exact.
  auto restricted_pair = [&](const orbits::Vec& x, const orbits::Vec& y,
                             std::uint64_t pair_seed) {
    if (seq.kind == orbits::OperatorSeq::Kind::ConstantPowers) {
      orbits::Orbit a, b;
      a.base = x;
      b.base = y;
      a.horizon = b.horizon = n;
      orbits::Vec cx = w.adjoint() * x, cy = w.adjoint() * y;
      orbits::Mat images = w;
      for (Int k = 1; k <= n; ++k) {
        images = seq.matrix * images;
        a.points.push_back(images * cx);
        b.points.push_back(images * cy);
      }
      a.norm0.resize(std::size_t(n));
      b.norm0.resize(std::size_t(n));
      for (Int k = 0; k < n; ++k) {
        a.norm0[std::size_t(k)] = seq.space.norm_from_zero(a.points[std::size_t(k)]);
        b.norm0[std::size_t(k)] = seq.space.norm_from_zero(b.points[std::size_t(k)]);
      }
      return orbits::pair_distance_sequence(seq, a, b);
    }
    orbits::OperatorSeq restricted;
    restricted.kind = orbits::OperatorSeq::Kind::ExplicitList;
    restricted.dim = seq.dim;
    restricted.space = seq.space;
    restricted.list.reserve(std::size_t(n));
    for (Int k = 1; k <= n; ++k) restricted.list.push_back(seq.restricted_member(k, w));
    return orbits::generate_pair(restricted, x, y, policy, n, pair_seed);
  };

  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      auto base = orbits::generate_pair(seq, vectors[i], vectors[j], policy, n,
                                        seed + 1000 * stream);
      auto restr = restricted_pair(vectors[i], vectors[j], seed + 1000 * stream);
      ++stream;
      auto v1 = classify_pair(base, cfg);
      auto v2 = classify_pair(restr, cfg);
      if (v1.flags != v2.flags) return false;
    }
  }
  return true;
}

namespace {

nlohmann::ordered_json witness_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["sigma"] = w.sigma;
  j["eps"] = w.eps;
  j["c"] = w.c;
  j["r"] = w.r;
  j["a"] = w.a;
  j["b"] = w.b;
  j["low_stat"] = w.low_stat;
  j["up_stat"] = w.up_stat;
  return j;
}

}  // namespace

std::string verdict_to_json(const ChaosVerdict& v) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json flags;
  for (int f = 0; f < kFlagCount; ++f) flags[flag_name(Flag(f))] = v.flags[std::size_t(f)];
  j["flags"] = flags;
  nlohmann::ordered_json wits;
  for (int f = 0; f < kFlagCount; ++f)
    if (v.witnesses[std::size_t(f)].present)
      wits[flag_name(Flag(f))] = witness_json(v.witnesses[std::size_t(f)]);
  j["witnesses"] = wits;
  nlohmann::ordered_json cfg;
  cfg["horizon"] = v.config.density.horizon;
  cfg["window"] = v.config.density.window;
  cfg["tail"] = v.config.density.tail;
  cfg["sigma_grid"] = v.config.sigma_grid;
  cfg["eps_grid"] = v.config.eps_grid;
  cfg["theta0"] = v.config.theta0;
  cfg["theta1"] = v.config.theta1;
  cfg["theta_plus"] = v.config.theta_plus;
  cfg["gap"] = v.config.gap;
  cfg["unbounded_level"] = v.config.unbounded_level;
  j["config"] = cfg;
  j["sampled_only"] = v.sampled_only;
  return j.dump(2);
}

std::string stats_to_csv(const GridStats& stats) {
  std::ostringstream os;
  os << "sigma,dl,du,bdl,bdu,side\n";
  char buf[256];
  auto row = [&](double s, const density::Profile& p, const char* side) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%s\n", s, p.lower.value(),
                  p.upper.value(), p.lower_banach.value(), p.upper_banach.value(), side);
    os << buf;
  };
  for (std::size_t i = 0; i < stats.sigma_grid.size(); ++i)
    row(stats.sigma_grid[i], stats.lower[i], "L");
  for (std::size_t i = 0; i < stats.eps_grid.size(); ++i)
    row(stats.eps_grid[i], stats.upper[i], "U");
  return os.str();
}

}  // namespace chaoscalc::classify
