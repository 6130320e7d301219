#include "chaoscalc/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace chaoscalc::orbits {

namespace {

// Overflowed distances saturate to +inf: on expanding scenarios the true
// distance diverges, and NaN from inf-inf cancellation must not poison the
// density scans.
double saturate(double v) { return std::isnan(v) ? std::numeric_limits<double>::infinity() : v; }

// Expanding orbits escape double range long before the horizon ends; clamping
// component magnitudes at 1e300 keeps later products finite (no inf*0 = NaN)
// while every "exceeds the level" comparison still reads divergence.
constexpr double kMagnitudeCap = 1e300;

double clamp_mag(double v) {
  if (v > kMagnitudeCap) return kMagnitudeCap;
  if (v < -kMagnitudeCap) return -kMagnitudeCap;
  return v;
}

Vec clamp_components(Vec v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v[i] = Cplx(clamp_mag(v[i].real()), clamp_mag(v[i].imag()));
  return v;
}

}  // namespace

void OperatorSeq::validate() const {
  if (dim < 1 || dim > rel::kDimCap) throw std::invalid_argument("operator dimension out of range");
  switch (kind) {
    case Kind::ConstantPowers:
      if (matrix.rows() != dim || matrix.cols() != dim)
        throw std::invalid_argument("constant operator must be square of the scenario dimension");
      break;
    case Kind::ScalarGated:
      if (!gate) throw std::invalid_argument("scalar_gated sequence needs a gate set");
      break;
    case Kind::Alternating:
      if (cycle.empty()) throw std::invalid_argument("alternating sequence needs matrices");
      for (const auto& m : cycle)
        if (m.rows() != dim || m.cols() != dim)
          throw std::invalid_argument("alternating member of wrong dimension");
      break;
    case Kind::RelationPowers:
      if (relation.dx() != dim || relation.dy() != dim)
        throw std::invalid_argument("relation_powers member of wrong dimension");
      break;
    case Kind::ExplicitList:
      if (list.empty()) throw std::invalid_argument("explicit sequence needs relations");
      for (const auto& r : list)
        if (r.dx() != dim || r.dy() != dim)
          throw std::invalid_argument("explicit member of wrong dimension");
      break;
  }
  space.validate();
}

bool OperatorSeq::members_single_valued_linear() const {
  switch (kind) {
    case Kind::ConstantPowers:
    case Kind::ScalarGated:
    case Kind::Alternating:
      return true;
    case Kind::RelationPowers:
      return relation.parts().single_valued;
    case Kind::ExplicitList:
      for (const auto& r : list)
        if (!r.parts().single_valued) return false;
      return true;
  }
  return false;
}

rel::LinearRelation OperatorSeq::member_relation(Int k) const {
  if (k < 1) throw std::invalid_argument("member index must be >= 1");
  switch (kind) {
    case Kind::ConstantPowers: {
      if (k > rel::kPowerCap) throw std::invalid_argument("member_relation beyond power cap");
      Mat p = Mat::Identity(dim, dim);
      for (Int i = 0; i < k; ++i) p = matrix * p;
      return rel::LinearRelation::from_matrix(p);
    }
    case Kind::ScalarGated: {
      double c = gate->member(k) ? on_coeff.eval(k) : off_coeff.eval(k);
      return rel::LinearRelation::from_matrix(Mat::Identity(dim, dim) * c);
    }
    case Kind::Alternating:
      return rel::LinearRelation::from_matrix(cycle[std::size_t((k - 1) % Int(cycle.size()))]);
    case Kind::RelationPowers:
      if (k > rel::kPowerCap) throw std::invalid_argument("member_relation beyond power cap");
      return relation.power(int(k));
    case Kind::ExplicitList:
      return list[std::size_t((k - 1) % Int(list.size()))];
  }
  throw std::logic_error("unreachable");
}

rel::LinearRelation OperatorSeq::restricted_member(Int k, const Mat& subspace) const {
  switch (kind) {
    case Kind::ConstantPowers: {
      // graph {(x, M^k x) : x in subspace} without materializing M^k
      Mat w = subspace;
      for (Int i = 0; i < k; ++i) w = matrix * w;
      Mat cols(2 * dim, subspace.cols());
      cols.topRows(dim) = subspace;
      cols.bottomRows(dim) = w;
      return rel::LinearRelation::from_graph_basis(dim, dim, cols);
    }
    case Kind::ScalarGated:
    case Kind::Alternating:
    case Kind::ExplicitList:
    case Kind::RelationPowers:
      return member_relation(k).restrict_domain(subspace);
  }
  throw std::logic_error("unreachable");
}

namespace {

struct Selector {
  const SelectionPolicy& policy;
  std::mt19937_64 rng;

  explicit Selector(const SelectionPolicy& p, std::uint64_t seed) : policy(p), rng(seed) {}

  // Pick x_k from the value set; `objective` is maximized under maximize_gap.
  template <typename Objective>
  Vec pick(const rel::ValueSet& vs, Int k, Objective objective) {
    switch (policy.kind) {
      case SelectionPolicy::Kind::Canonical:
        return vs.representative;
      case SelectionPolicy::Kind::Offset: {
        if (policy.offset.size() != vs.representative.size())
          throw std::invalid_argument("offset policy: wrong dimension");
        return vs.representative + policy.offset;
      }
      case SelectionPolicy::Kind::MaximizeGap: {
        if (vs.offsets.cols() == 0) return vs.representative;
        double radius = std::pow(2.0, double(std::min<Int>(k, 996)));
        Vec best = vs.representative;
        double best_score = objective(best);
        auto consider = [&](const Vec& cand) {
          double s = objective(cand);
          if (s > best_score) {
            best_score = s;
            best = cand;
          }
        };
        for (Eigen::Index j = 0; j < vs.offsets.cols(); ++j) {
          consider(vs.representative + radius * vs.offsets.col(j));
          consider(vs.representative - radius * vs.offsets.col(j));
        }
        std::normal_distribution<double> gauss(0.0, 1.0);
        int remaining = std::max(0, policy.budget - 2 * int(vs.offsets.cols()));
        for (int t = 0; t < remaining; ++t) {
          Vec coeff(vs.offsets.cols());
          for (Eigen::Index j = 0; j < coeff.size(); ++j)
            coeff[j] = Cplx(gauss(rng), gauss(rng));
          double nc = coeff.norm();
          if (nc == 0.0) continue;
          consider(vs.representative + (radius / nc) * (vs.offsets * coeff));
        }
        return best;
      }
    }
    throw std::logic_error("unreachable");
  }
};

rel::ValueSet value_set_or_throw(const rel::LinearRelation& r, const Vec& x, Int k) {
  auto vs = r.value_set(x);
  if (!vs)
    throw DomainError(k, "vector leaves the domain of the sequence at k=" + std::to_string(k));
  return *vs;
}

// Every selected representative must be certified; an offset outside A_k0
// would silently fabricate orbit points otherwise.
void certify_selection(const rel::LinearRelation& member, const Vec& x, const Vec& picked,
                       Int k) {
  if (!member.graph_member(x, picked, 1e-6))
    throw std::invalid_argument("selection policy produced an uncertified representative at k=" +
                                std::to_string(k));
}

}  // namespace

Orbit generate_orbit(const OperatorSeq& seq, const Vec& x, const SelectionPolicy& policy,
                     Int horizon, std::uint64_t seed) {
  seq.validate();
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (x.size() != seq.dim) throw std::invalid_argument("base vector of wrong dimension");

  Orbit orbit;
  orbit.base = x;
  orbit.horizon = horizon;
  orbit.points.reserve(std::size_t(horizon));
  Selector select(policy, seed);
  auto norm_objective = [&](const Vec& v) { return saturate(seq.space.norm_from_zero(v)); };

  switch (seq.kind) {
    case OperatorSeq::Kind::ConstantPowers: {
      Vec cur = x;
      for (Int k = 1; k <= horizon; ++k) {
        cur = clamp_components(seq.matrix * cur);
        orbit.points.push_back(cur);
      }
      break;
    }
    case OperatorSeq::Kind::ScalarGated: {
      auto gate_bits = seq.gate->bitmap(horizon);
      for (Int k = 1; k <= horizon; ++k) {
        double c = gate_bits[std::size_t(k)] ? seq.on_coeff.eval(k) : seq.off_coeff.eval(k);
        orbit.points.push_back(c * x);
      }
      break;
    }
    case OperatorSeq::Kind::Alternating: {
      for (Int k = 1; k <= horizon; ++k)
        orbit.points.push_back(seq.cycle[std::size_t((k - 1) % Int(seq.cycle.size()))] * x);
      break;
    }
    case OperatorSeq::Kind::RelationPowers: {
      // Selected chains x_k in A x_{k-1} are certified members of A^k x.
      Vec cur = x;
      for (Int k = 1; k <= horizon; ++k) {
        auto vs = value_set_or_throw(seq.relation, cur, k);
        Vec picked = select.pick(vs, k, norm_objective);
        certify_selection(seq.relation, cur, picked, k);
        cur = clamp_components(picked);
        orbit.points.push_back(cur);
      }
      break;
    }
    case OperatorSeq::Kind::ExplicitList: {
      for (Int k = 1; k <= horizon; ++k) {
        auto member = seq.list[std::size_t((k - 1) % Int(seq.list.size()))];
        auto vs = value_set_or_throw(member, x, k);
        Vec picked = select.pick(vs, k, norm_objective);
        certify_selection(member, x, picked, k);
        orbit.points.push_back(picked);
      }
      break;
    }
  }

  orbit.norm0.resize(std::size_t(horizon));
  for (Int k = 1; k <= horizon; ++k)
    orbit.norm0[std::size_t(k - 1)] = saturate(seq.space.norm_from_zero(orbit.points[std::size_t(k - 1)]));
  return orbit;
}

OrbitPair generate_pair(const OperatorSeq& seq, const Vec& x, const Vec& y,
                        const SelectionPolicy& policy, Int horizon, std::uint64_t seed) {
  seq.validate();
  if (seq.members_single_valued_linear() && seq.kind != OperatorSeq::Kind::ExplicitList &&
      seq.kind != OperatorSeq::Kind::RelationPowers) {
    // Single-valued linear members: T_k x - T_k y = T_k (x - y), so the
    // distance sequence comes from the difference orbit, which avoids
    // overflow cancellation on expanding scenarios.
    OrbitPair pair;
    pair.a = generate_orbit(seq, x, policy, horizon, seed);
    pair.b = generate_orbit(seq, y, policy, horizon, seed + 1);
    Orbit diff = generate_orbit(seq, x - y, policy, horizon, seed + 2);
    pair.dist.resize(std::size_t(horizon));
    pair.diff_seminorm_sup = 0.0;
    for (Int k = 0; k < horizon; ++k) {
      pair.dist[std::size_t(k)] = saturate(seq.space.distance_of_difference(diff.points[std::size_t(k)]));
      pair.diff_seminorm_sup = std::max(
          pair.diff_seminorm_sup, saturate(seq.space.family.top(diff.points[std::size_t(k)])));
    }
    return pair;
  }

  OrbitPair pair;
  pair.a.base = x;
  pair.b.base = y;
  pair.a.horizon = pair.b.horizon = horizon;
  Selector select(policy, seed);
  pair.diff_seminorm_sup = 0.0;

  auto step = [&](const rel::LinearRelation& member, const Vec& bx, const Vec& by, Int k) {
    auto vs_x = value_set_or_throw(member, bx, k);
    auto vs_y = value_set_or_throw(member, by, k);
    Vec yk = vs_y.representative;
    auto gap_objective = [&](const Vec& cand) {
      return saturate(seq.space.distance(cand, yk));
    };
    Vec xk = select.pick(vs_x, k, gap_objective);
    certify_selection(member, bx, xk, k);
    pair.a.points.push_back(xk);
    pair.b.points.push_back(yk);
  };

  if (seq.kind == OperatorSeq::Kind::RelationPowers) {
    Vec cx = x, cy = y;
    for (Int k = 1; k <= horizon; ++k) {
      step(seq.relation, cx, cy, k);
      cx = pair.a.points.back();
      cy = pair.b.points.back();
    }
  } else if (seq.kind == OperatorSeq::Kind::ExplicitList) {
    for (Int k = 1; k <= horizon; ++k)
      step(seq.list[std::size_t((k - 1) % Int(seq.list.size()))], x, y, k);
  } else {
    // multivalued never reaches here; fall back to independent generation
    pair.a = generate_orbit(seq, x, policy, horizon, seed);
    pair.b = generate_orbit(seq, y, policy, horizon, seed + 1);
  }

  pair.a.norm0.resize(std::size_t(horizon));
  pair.b.norm0.resize(std::size_t(horizon));
  pair.dist.resize(std::size_t(horizon));
  for (Int k = 0; k < horizon; ++k) {
    const Vec& ak = pair.a.points[std::size_t(k)];
    const Vec& bk = pair.b.points[std::size_t(k)];
    pair.a.norm0[std::size_t(k)] = saturate(seq.space.norm_from_zero(ak));
    pair.b.norm0[std::size_t(k)] = saturate(seq.space.norm_from_zero(bk));
    pair.dist[std::size_t(k)] = saturate(seq.space.distance(ak, bk));
    pair.diff_seminorm_sup =
        std::max(pair.diff_seminorm_sup, saturate(seq.space.family.top(ak - bk)));
  }
  return pair;
}

OrbitPair pair_distance_sequence(const OperatorSeq& seq, const Orbit& a, const Orbit& b) {
  if (a.horizon != b.horizon) throw std::invalid_argument("mismatched orbit horizons");
  OrbitPair pair;
  pair.a = a;
  pair.b = b;
  pair.dist.resize(std::size_t(a.horizon));
  pair.diff_seminorm_sup = 0.0;
  for (Int k = 0; k < a.horizon; ++k) {
    Vec diff = a.points[std::size_t(k)] - b.points[std::size_t(k)];
    pair.dist[std::size_t(k)] = saturate(seq.space.distance_of_difference(diff));
    pair.diff_seminorm_sup = std::max(pair.diff_seminorm_sup, saturate(seq.space.family.top(diff)));
  }
  return pair;
}

std::vector<double> seminorm_series(const Orbit& orbit, const metric::SeminormFamily& family,
                                    int level) {
  std::vector<double> out(orbit.points.size());
  for (std::size_t i = 0; i < orbit.points.size(); ++i)
    out[i] = family.eval(level, orbit.points[i]);
  return out;
}

namespace {

density::Profile indicator_profile(const std::vector<std::uint8_t>& bits,
                                   const density::Config& cfg) {
  return density::estimate_from_bitmap(bits, cfg);
}

}  // namespace

SetVerdict near_zero_verdict(const Orbit& orbit, DensityMode mode, const density::Config& cfg,
                             const std::vector<double>& delta_grid, double theta1) {
  if (delta_grid.empty()) throw std::invalid_argument("empty delta grid");
  if (Int(orbit.norm0.size()) < cfg.horizon)
    throw std::invalid_argument("orbit shorter than density horizon");
  SetVerdict verdict;
  verdict.verdict = true;
  std::vector<std::uint8_t> bits(std::size_t(cfg.horizon) + 1, 0);
  for (double delta : delta_grid) {
    for (Int k = 1; k <= cfg.horizon; ++k)
      bits[std::size_t(k)] = orbit.norm0[std::size_t(k - 1)] < delta ? 1 : 0;
    auto profile = indicator_profile(bits, cfg);
    const auto& stat =
        mode == DensityMode::Plain ? profile.upper : profile.upper_banach;
    bool ok = stat.geq(1.0 - theta1);
    if (delta == delta_grid.front()) {
      verdict.binding_threshold = delta;
      verdict.binding_profile = profile;
    }
    if (!ok) {
      verdict.verdict = false;
      verdict.binding_threshold = delta;
      verdict.binding_profile = profile;
      break;
    }
  }
  return verdict;
}

SetVerdict unbounded_verdict(const Orbit& orbit, const metric::SeminormFamily& family, int m,
                             DensityMode mode, const density::Config& cfg, double level,
                             double theta1) {
  if (Int(orbit.points.size()) < cfg.horizon)
    throw std::invalid_argument("orbit shorter than density horizon");
  auto series = seminorm_series(orbit, family, m);
  std::vector<std::uint8_t> bits(std::size_t(cfg.horizon) + 1, 0);
  double sup = 0.0;
  for (Int k = 1; k <= cfg.horizon; ++k) {
    double p = series[std::size_t(k - 1)];
    bits[std::size_t(k)] = p > level ? 1 : 0;
    sup = std::max(sup, p);
  }
  auto profile = indicator_profile(bits, cfg);
  const auto& stat = mode == DensityMode::Plain ? profile.upper : profile.upper_banach;
  bool density_ok = stat.geq(1.0 - theta1);
  // escape through a log ladder of levels up to the cap
  bool escape = true;
  for (int j = 1; j <= 8 && escape; ++j)
    escape = sup > std::pow(level, double(j) / 8.0);
  SetVerdict verdict;
  verdict.verdict = density_ok && escape;
  verdict.binding_threshold = level;
  verdict.binding_profile = profile;
  return verdict;
}

IrregularConfig IrregularConfig::defaults(Int horizon) {
  IrregularConfig cfg;
  cfg.density.horizon = horizon;
  cfg.density.window = std::max<Int>(2, std::min<Int>(1000, horizon / 10));
  cfg.density.tail = 0.5;
  cfg.delta_grid = {1e-6, 1e-4, 1e-2, 1.0};
  return cfg;
}

IrregularEvidence irregular_evidence(const Orbit& orbit, const metric::MetricSpace& space,
                                     const IrregularConfig& cfg) {
  IrregularEvidence ev;
  ev.near_zero_plain =
      near_zero_verdict(orbit, DensityMode::Plain, cfg.density, cfg.delta_grid, cfg.theta1).verdict;
  ev.near_zero_reit =
      near_zero_verdict(orbit, DensityMode::Reiterative, cfg.density, cfg.delta_grid, cfg.theta1)
          .verdict;

  int levels = 1;
  if (space.family.kind != metric::SeminormFamily::Kind::SingleNorm)
    levels = int(std::min<Eigen::Index>(space.family.truncation, orbit.base.size()));
  for (int m = 1; m <= levels && !(ev.unbounded_plain && ev.unbounded_reit); ++m) {
    if (!ev.unbounded_plain &&
        unbounded_verdict(orbit, space.family, m, DensityMode::Plain, cfg.density,
                          cfg.unbounded_level, cfg.theta1)
            .verdict) {
      ev.unbounded_plain = true;
      ev.unbounded_level_index = m;
    }
    if (!ev.unbounded_reit &&
        unbounded_verdict(orbit, space.family, m, DensityMode::Reiterative, cfg.density,
                          cfg.unbounded_level, cfg.theta1)
            .verdict) {
      ev.unbounded_reit = true;
      if (ev.unbounded_level_index == 0) ev.unbounded_level_index = m;
    }
  }

  // Decreasing-minimum evidence for a null subsequence, at three horizons.
  auto tail_min = [&](Int h) {
    Int start = std::max<Int>(1, Int(std::ceil(cfg.density.tail * double(h))));
    double best = std::numeric_limits<double>::infinity();
    for (Int k = start; k <= h; ++k) best = std::min(best, orbit.norm0[std::size_t(k - 1)]);
    return best;
  };
  Int n = cfg.density.horizon;
  double m1 = tail_min(std::max<Int>(4, n / 4));
  double m2 = tail_min(std::max<Int>(4, n / 2));
  double m3 = tail_min(n);
  ev.subsequence_to_zero = m3 <= m2 && m2 <= m1 && m3 < cfg.theta0;

  Int start = std::max<Int>(1, Int(std::ceil(cfg.density.tail * double(n))));
  double tail_sup = 0.0, sup = 0.0;
  for (Int k = 1; k <= n; ++k) {
    sup = std::max(sup, orbit.norm0[std::size_t(k - 1)]);
    if (k >= start) tail_sup = std::max(tail_sup, orbit.norm0[std::size_t(k - 1)]);
  }
  ev.not_converging_to_zero = tail_sup >= cfg.theta_plus;

  double top_sup = 0.0;
  for (const auto& pt : orbit.points) top_sup = std::max(top_sup, space.family.top(pt));
  ev.unbounded_sup = top_sup > cfg.unbounded_level;
  return ev;
}

std::set<IrregularLabel> irregular_class(const Orbit& orbit, const metric::MetricSpace& space,
                                         const IrregularConfig& cfg) {
  auto ev = irregular_evidence(orbit, space, cfg);
  std::set<IrregularLabel> labels;
  auto add_if = [&](bool cond, IrregularLabel label) {
    if (cond) labels.insert(label);
  };
  add_if(ev.near_zero_plain && ev.unbounded_plain, IrregularLabel::DistIrregular);
  add_if(ev.near_zero_reit && ev.unbounded_reit, IrregularLabel::ReitDistIrregular);
  add_if(ev.near_zero_plain && ev.unbounded_reit, IrregularLabel::ReitDistIrregularType1);
  add_if(ev.near_zero_reit && ev.unbounded_plain, IrregularLabel::ReitDistIrregularType2);
  add_if(ev.unbounded_sup && ev.subsequence_to_zero, IrregularLabel::StrongLiYorkeIrregular);
  add_if(ev.not_converging_to_zero && ev.subsequence_to_zero, IrregularLabel::LiYorkeIrregular);
  add_if(ev.unbounded_reit && ev.subsequence_to_zero, IrregularLabel::Mixed1DistIrregular);
  add_if(ev.unbounded_plain && ev.subsequence_to_zero, IrregularLabel::Mixed2DistIrregular);
  add_if(ev.not_converging_to_zero && ev.near_zero_reit, IrregularLabel::Mixed3DistIrregular);
  add_if(ev.not_converging_to_zero && ev.near_zero_plain, IrregularLabel::Mixed4DistIrregular);
  add_if(ev.unbounded_sup && ev.near_zero_reit, IrregularLabel::BracketMixed1Irregular);
  add_if(ev.unbounded_sup && ev.near_zero_plain, IrregularLabel::BracketMixed2Irregular);
  add_if(ev.subsequence_to_zero, IrregularLabel::LiYorkeNearZero);
  return labels;
}

std::string label_name(IrregularLabel label) {
  switch (label) {
    case IrregularLabel::DistIrregular: return "dist_irregular";
    case IrregularLabel::ReitDistIrregular: return "reit_dist_irregular";
    case IrregularLabel::ReitDistIrregularType1: return "reit_dist_irregular_type1";
    case IrregularLabel::ReitDistIrregularType2: return "reit_dist_irregular_type2";
    case IrregularLabel::StrongLiYorkeIrregular: return "strong_li_yorke_irregular";
    case IrregularLabel::LiYorkeIrregular: return "li_yorke_irregular";
    case IrregularLabel::Mixed1DistIrregular: return "mixed1_dist_irregular";
    case IrregularLabel::Mixed2DistIrregular: return "mixed2_dist_irregular";
    case IrregularLabel::Mixed3DistIrregular: return "mixed3_dist_irregular";
    case IrregularLabel::Mixed4DistIrregular: return "mixed4_dist_irregular";
    case IrregularLabel::BracketMixed1Irregular: return "bracket_mixed1_irregular";
    case IrregularLabel::BracketMixed2Irregular: return "bracket_mixed2_irregular";
    case IrregularLabel::LiYorkeNearZero: return "li_yorke_near_zero";
  }
  return "?";
}

Orbit eigen_witness_orbit(const rel::LinearRelation& a, Cplx lambda, const Vec& x, Int horizon,
                          const metric::MetricSpace& space) {
  if (!a.graph_member(x, lambda * x, 1e-7))
    throw std::invalid_argument("eigen_witness_orbit: (lambda, x) is not an eigenpair");
  Orbit orbit;
  orbit.base = x;
  orbit.horizon = horizon;
  orbit.points.reserve(std::size_t(horizon));
  Cplx factor = 1.0;
  rel::LinearRelation acc = rel::LinearRelation::identity(a.dx());
  for (Int k = 1; k <= horizon; ++k) {
    factor *= lambda;
    if (std::abs(factor) > kMagnitudeCap)
      factor *= kMagnitudeCap / std::abs(factor);  // freeze magnitude, keep phase
    Vec pt = factor * x;
    if (k <= rel::kPowerCap) {
      acc = rel::LinearRelation::compose(a, acc);
      if (!acc.graph_member(x, pt, 1e-6))
        throw std::runtime_error("eigen witness failed certification at k=" + std::to_string(k));
    }
    orbit.points.push_back(pt);
  }
  orbit.norm0.resize(std::size_t(horizon));
  for (Int k = 0; k < horizon; ++k)
    orbit.norm0[std::size_t(k)] = saturate(space.norm_from_zero(orbit.points[std::size_t(k)]));
  return orbit;
}

}  // namespace chaoscalc::orbits
