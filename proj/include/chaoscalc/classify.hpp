#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaoscalc/density.hpp"
#include "chaoscalc/orbits.hpp"

namespace chaoscalc::classify {

using Int = natset::Int;

struct ChaosConfig {
  density::Config density;
  std::vector<double> sigma_grid;  // thresholds for the proximity sets L(sigma)
  std::vector<double> eps_grid;    // thresholds for the separation sets U(eps)
  double theta0 = 0.05;       // a density estimate <= theta0 counts as "= 0"
  double theta1 = 0.05;       // "= 1" means >= 1 - theta1
  double theta_plus = 0.05;   // "> 0" means >= theta_plus
  double gap = 0.1;           // certified gap for the type-2.5/3 inequalities
  double unbounded_level = 1e6;

  static ChaosConfig defaults();
  void validate() const;
};

/// The 24 chaos predicates evaluated on a distance sequence.
enum class Flag : int {
  DC, RDC, RDC1, RDC2,
  MIX1, MIX2, MIX3, MIX4,
  LY, SLY, ANG1, ANG2,
  RDC_0_2, RDC_1_2, RDC_2_2, DC_0_2,
  R2H, R2H_1, R2H_2, DC_2H,
  R3, R3_1, R3_2, DC_3,
};
constexpr int kFlagCount = 24;
std::string flag_name(Flag f);
std::optional<Flag> flag_from_name(const std::string& name);

struct Witness {
  bool present = false;
  double sigma = 0.0;  // proximity threshold that certified the flag
  double eps = 0.0;    // binding separation threshold
  double c = 0.0;      // gap midpoint (type 2.5/3)
  double r = 0.0;      // sigma-range bound (type 2.5)
  double a = 0.0, b = 0.0;  // sigma interval (type 3)
  double low_stat = 0.0, up_stat = 0.0;  // realized densities at the witness
};

struct ChaosVerdict {
  std::array<bool, kFlagCount> flags{};
  std::array<Witness, kFlagCount> witnesses{};
  ChaosConfig config;
  bool sampled_only = false;

  bool flag(Flag f) const { return flags[std::size_t(int(f))]; }
  void set(Flag f, bool v) { flags[std::size_t(int(f))] = v; }
};

/// Profiles of the level sets of a distance sequence over the grids.
struct GridStats {
  std::vector<double> sigma_grid, eps_grid;
  std::vector<density::Profile> lower;           // L(sigma) = {k : d_k < sigma}
  std::vector<density::Profile> upper_at_sigma;  // U(sigma) = {k : d_k >= sigma}
  std::vector<density::Profile> upper;           // U(eps) over the eps grid
};

GridStats density_stats(const std::vector<double>& dist, const ChaosConfig& cfg);

/// Everything classify_pair derives; the per-grid certificates let a sample
/// set be aggregated under one shared threshold.
struct PairAnalysis {
  ChaosVerdict verdict;
  GridStats stats;
  bool liminf_zero = false;
  bool limsup_positive = false;
  bool unbounded_diff = false;
  // per flag: certificate indexed by sigma (or range/interval index);
  // single-entry vectors for threshold-free flags
  std::array<std::vector<std::uint8_t>, kFlagCount> certs;
};

PairAnalysis analyze_pair(const orbits::OrbitPair& pair, const ChaosConfig& cfg);
ChaosVerdict classify_pair(const orbits::OrbitPair& pair, const ChaosConfig& cfg);

struct Edge {
  Flag from, to;
  std::string name() const { return flag_name(from) + "->" + flag_name(to); }
};

const std::vector<Edge>& implication_edges();
std::vector<Edge> implication_check(const ChaosVerdict& v);

struct SampleSetReport {
  std::vector<ChaosVerdict> pair_verdicts;
  ChaosVerdict aggregate;   // sampled_only = true
  int vector_count = 0;
  int pair_count = 0;
};

/// Pairwise classification over a finite sample; a flag aggregates only when
/// one grid threshold certifies it for every distinct pair.  When the sample
/// spans a line, three interior points of the segment join the sample as the
/// one-parameter family evidence.
SampleSetReport classify_sample_set(const orbits::OperatorSeq& seq,
                                    const std::vector<orbits::Vec>& vectors,
                                    const orbits::SelectionPolicy& policy, const ChaosConfig& cfg,
                                    std::uint64_t seed, bool line_evidence = true);

/// Flags of (A_k) on vectors inside the subspace equal the flags of the
/// domain-restricted members (A_k)|W on the same vectors.
bool restriction_check(const orbits::OperatorSeq& seq, const orbits::Mat& subspace,
                       const std::vector<orbits::Vec>& vectors,
                       const orbits::SelectionPolicy& policy, const ChaosConfig& cfg,
                       std::uint64_t seed);

std::string verdict_to_json(const ChaosVerdict& v);
std::string stats_to_csv(const GridStats& stats);

}  // namespace chaoscalc::classify
