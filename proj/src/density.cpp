#include "chaoscalc/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace chaoscalc::density {

void Config::validate() const {
  if (horizon < 10) throw std::invalid_argument("density horizon must be >= 10");
  if (tail <= 0.0 || tail >= 1.0) throw std::invalid_argument("tail fraction must be in (0,1)");
  if (window < 1 || double(window) > tail * double(horizon))
    throw std::invalid_argument("window must satisfy 1 <= S <= tail*horizon");
}

Int Config::tail_start() const {
  return std::max<Int>(1, Int(std::ceil(tail * double(horizon))));
}

bool RatioStat::less_than(const RatioStat& o) const {
  // num/den < o.num/o.den with positive denominators
  return num * o.den < o.num * den;
}

bool Profile::chain_holds(double tolerance) const {
  double bl = lower_banach.value(), l = lower.value(), u = upper.value(), bu = upper_banach.value();
  return bl <= l + tolerance && l <= u + 1e-15 && u <= bu + tolerance;
}

Profile estimate_from_bitmap(const std::vector<std::uint8_t>& member, const Config& cfg) {
  cfg.validate();
  const Int n_max = cfg.horizon;
  if (Int(member.size()) < n_max + 1)
    throw std::invalid_argument("bitmap shorter than horizon");

  std::vector<Int> counts(std::size_t(n_max) + 1, 0);
  for (Int k = 1; k <= n_max; ++k)
    counts[std::size_t(k)] = counts[std::size_t(k - 1)] + (member[std::size_t(k)] ? 1 : 0);

  Profile p;
  p.mode = Profile::Mode::Estimated;
  p.config = cfg;

  const Int n0 = cfg.tail_start();
  RatioStat lo{counts[std::size_t(n0)], n0, n0};
  RatioStat hi = lo;
  for (Int n = n0 + 1; n <= n_max; ++n) {
    RatioStat r{counts[std::size_t(n)], n, n};
    if (r.less_than(lo)) lo = r;
    if (hi.less_than(r)) hi = r;
  }
  p.lower = lo;
  p.upper = hi;

  const Int s = cfg.window;
  Int w0 = std::min(n0, n_max - s);
  RatioStat blo{counts[std::size_t(w0 + s)] - counts[std::size_t(w0)], s, w0};
  RatioStat bhi = blo;
  for (Int n = w0 + 1; n + s <= n_max; ++n) {
    Int c = counts[std::size_t(n + s)] - counts[std::size_t(n)];
    if (c < blo.num) blo = RatioStat{c, s, n};
    if (c > bhi.num) bhi = RatioStat{c, s, n};
  }
  p.lower_banach = blo;
  p.upper_banach = bhi;
  return p;
}

Profile estimate_profile(const natset::SetExpr& a, const Config& cfg) {
  cfg.validate();
  return estimate_from_bitmap(a.bitmap(cfg.horizon), cfg);
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

// Normal forms under which the four densities are derivable.  Each form is
// understood up to a finite symmetric difference, which none of the four
// densities see.
struct NormalForm {
  enum class Kind {
    Finite,     // profile (0,0,0,0)
    Cofinite,   // profile (1,1,1,1)
    Periodic,   // all four = |R|/m
    ThinRuns,   // density 0, arbitrarily long runs: (0,0,0,1)
    CoThinRuns  // complement of the above: (1,1,0,1)
  };
  Kind kind = Kind::Finite;
  Int modulus = 1;
  std::vector<bool> residues;  // size modulus, Periodic only

  Int residue_count() const {
    return std::count(residues.begin(), residues.end(), true);
  }
};

constexpr Int kModulusCap = 1 << 20;

std::optional<NormalForm> nf_complement(const NormalForm& a) {
  NormalForm out = a;
  switch (a.kind) {
    case NormalForm::Kind::Finite: out.kind = NormalForm::Kind::Cofinite; return out;
    case NormalForm::Kind::Cofinite: out.kind = NormalForm::Kind::Finite; return out;
    case NormalForm::Kind::Periodic:
      for (std::size_t i = 0; i < out.residues.size(); ++i) out.residues[i] = !out.residues[i];
      return out;
    case NormalForm::Kind::ThinRuns: out.kind = NormalForm::Kind::CoThinRuns; return out;
    case NormalForm::Kind::CoThinRuns: out.kind = NormalForm::Kind::ThinRuns; return out;
  }
  return std::nullopt;
}

std::optional<NormalForm> nf_union(const NormalForm& a, const NormalForm& b) {
  using K = NormalForm::Kind;
  if (a.kind == K::Finite) return b;
  if (b.kind == K::Finite) return a;
  if (a.kind == K::Cofinite || b.kind == K::Cofinite) {
    NormalForm out;
    out.kind = K::Cofinite;
    return out;
  }
  if (a.kind == K::Periodic && b.kind == K::Periodic) {
    Int l = std::lcm(a.modulus, b.modulus);
    if (l > kModulusCap) return std::nullopt;
    NormalForm out;
    out.kind = K::Periodic;
    out.modulus = l;
    out.residues.assign(std::size_t(l), false);
    for (Int r = 0; r < l; ++r)
      out.residues[std::size_t(r)] =
          a.residues[std::size_t(r % a.modulus)] || b.residues[std::size_t(r % b.modulus)];
    return out;
  }
  if (a.kind == K::ThinRuns && b.kind == K::ThinRuns) return a;
  return std::nullopt;
}

std::optional<NormalForm> normal_form(const natset::SetExpr& a) {
  using Kind = natset::SetExpr::Kind;
  switch (a.kind()) {
    case Kind::Finite: {
      NormalForm out;
      out.kind = NormalForm::Kind::Finite;
      return out;
    }
    case Kind::Periodic: {
      if (a.residues().empty()) {
        NormalForm out;
        out.kind = NormalForm::Kind::Finite;
        return out;
      }
      if (Int(a.residues().size()) == a.modulus()) {
        NormalForm out;
        out.kind = NormalForm::Kind::Cofinite;
        return out;
      }
      NormalForm out;
      out.kind = NormalForm::Kind::Periodic;
      out.modulus = a.modulus();
      out.residues.assign(std::size_t(a.modulus()), false);
      for (Int r : a.residues()) out.residues[std::size_t(r)] = true;
      return out;
    }
    case Kind::Blocks: {
      const auto& r = a.block_rule();
      if (r.pos == natset::BlockRule::Pos::Geometric &&
          r.len == natset::BlockRule::Len::Linear) {
        NormalForm out;
        out.kind = NormalForm::Kind::ThinRuns;
        return out;
      }
      return std::nullopt;
    }
    case Kind::Complement: {
      auto inner = normal_form(*a.left());
      if (!inner) return std::nullopt;
      return nf_complement(*inner);
    }
    case Kind::Union: {
      auto l = normal_form(*a.left());
      auto r = normal_form(*a.right());
      if (!l || !r) return std::nullopt;
      return nf_union(*l, *r);
    }
    case Kind::Intersection: {
      // De Morgan through the complement rule
      auto l = normal_form(*a.left());
      auto r = normal_form(*a.right());
      if (!l || !r) return std::nullopt;
      auto lc = nf_complement(*l);
      auto rc = nf_complement(*r);
      if (!lc || !rc) return std::nullopt;
      auto u = nf_union(*lc, *rc);
      if (!u) return std::nullopt;
      return nf_complement(*u);
    }
  }
  return std::nullopt;
}

Profile profile_from_nf(const NormalForm& nf) {
  Profile p;
  p.mode = Profile::Mode::Exact;
  auto set4 = [&](RatioStat a, RatioStat b, RatioStat c, RatioStat d) {
    p.lower_banach = a;
    p.lower = b;
    p.upper = c;
    p.upper_banach = d;
  };
  RatioStat zero{0, 1, 0}, one{1, 1, 0};
  switch (nf.kind) {
    case NormalForm::Kind::Finite: set4(zero, zero, zero, zero); break;
    case NormalForm::Kind::Cofinite: set4(one, one, one, one); break;
    case NormalForm::Kind::Periodic: {
      RatioStat q{nf.residue_count(), nf.modulus, 0};
      set4(q, q, q, q);
      break;
    }
    case NormalForm::Kind::ThinRuns: set4(zero, zero, zero, one); break;
    case NormalForm::Kind::CoThinRuns: set4(zero, one, one, one); break;
  }
  return p;
}

}  // namespace

std::optional<Profile> exact_profile(const natset::SetExpr& a) {
  auto nf = normal_form(a);
  if (!nf) return std::nullopt;
  return profile_from_nf(*nf);
}

std::vector<std::pair<Int, double>> prefix_ratio_series(const natset::SetExpr& a,
                                                        const Config& cfg, Int stride) {
  cfg.validate();
  if (stride < 1) throw std::invalid_argument("stride must be >= 1");
  auto bm = a.bitmap(cfg.horizon);
  std::vector<std::pair<Int, double>> out;
  Int count = 0;
  Int next = stride;
  for (Int k = 1; k <= cfg.horizon; ++k) {
    count += bm[std::size_t(k)] ? 1 : 0;
    if (k == next) {
      out.emplace_back(k, double(count) / double(k));
      next += stride;
    }
  }
  return out;
}

std::string profile_to_json(const Profile& p) {
  nlohmann::ordered_json j;
  j["lower"] = p.lower.value();
  j["upper"] = p.upper.value();
  j["lower_banach"] = p.lower_banach.value();
  j["upper_banach"] = p.upper_banach.value();
  j["mode"] = p.mode == Profile::Mode::Exact ? "exact" : "estimated";
  j["horizon"] = p.config.horizon;
  j["window"] = p.config.window;
  return j.dump();
}

std::string ratio_series_csv(const std::vector<std::pair<Int, double>>& series) {
  std::ostringstream os;
  os << "n,ratio\n";
  char buf[64];
  for (const auto& [n, r] : series) {
    std::snprintf(buf, sizeof(buf), "%.17g", r);
    os << n << "," << buf << "\n";
  }
  return os.str();
}

}  // namespace chaoscalc::density
