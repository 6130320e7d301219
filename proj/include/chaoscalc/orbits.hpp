#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chaoscalc/density.hpp"
#include "chaoscalc/metric.hpp"
#include "chaoscalc/natset.hpp"
#include "chaoscalc/relations.hpp"

namespace chaoscalc::orbits {

using Int = natset::Int;
using Vec = rel::Vec;
using Mat = rel::Mat;
using Cplx = rel::Cplx;

/// Thrown when a base vector leaves the domain of a sequence member.
class DomainError : public std::runtime_error {
public:
  DomainError(Int step, const std::string& what) : std::runtime_error(what), step(step) {}
  Int step;
};

struct CoeffRule {
  enum class Kind { StepIndex, Constant };  // c_k = k, or a fixed value
  Kind kind = Kind::Constant;
  double value = 0.0;

  double eval(Int k) const { return kind == Kind::StepIndex ? double(k) : value; }
};

/// A sequence of relations (A_k) acting on one space.  ConstantPowers and
/// RelationPowers are the classical orbit of a single operator (A_k = A^k);
/// the other variants list the members directly.
struct OperatorSeq {
  enum class Kind { ConstantPowers, ScalarGated, Alternating, RelationPowers, ExplicitList };

  Kind kind = Kind::ScalarGated;
  int dim = 1;
  metric::MetricSpace space;

  Mat matrix;                            // ConstantPowers
  natset::SetExprPtr gate;               // ScalarGated: k in gate -> on, else off
  CoeffRule on_coeff, off_coeff;         // ScalarGated
  std::vector<Mat> cycle;                // Alternating: T_k = cycle[(k-1) % size]
  rel::LinearRelation relation;          // RelationPowers
  std::vector<rel::LinearRelation> list; // ExplicitList, cycled

  void validate() const;
  bool members_single_valued_linear() const;
  /// The member relation at step k.  For the power variants this composes up
  /// to rel::kPowerCap and refuses beyond it.
  rel::LinearRelation member_relation(Int k) const;
  /// The member restricted to x-inputs inside the given subspace.
  rel::LinearRelation restricted_member(Int k, const Mat& subspace) const;
};

struct SelectionPolicy {
  enum class Kind { Canonical, Offset, MaximizeGap };
  Kind kind = Kind::Canonical;
  Vec offset;       // Offset: fixed element of A_k0 added each step
  int budget = 64;  // MaximizeGap samples per step

  static SelectionPolicy canonical() { return {}; }
};

struct Orbit {
  Vec base;
  Int horizon = 0;
  std::vector<Vec> points;      // points[k-1] = x_k
  std::vector<double> norm0;    // distance(x_k, 0) in the scenario metric
};

struct OrbitPair {
  Orbit a, b;
  std::vector<double> dist;     // d_k = d(x_k, y_k)
  double diff_seminorm_sup = 0; // sup_k of the top seminorm of x_k - y_k
};

Orbit generate_orbit(const OperatorSeq& seq, const Vec& x, const SelectionPolicy& policy,
                     Int horizon, std::uint64_t seed);

/// Joint generation: under maximize_gap the shared multivalued offsets are
/// spent on widening d(x_k, y_k); the same selected sequences feed every
/// predicate evaluated on the pair.
OrbitPair generate_pair(const OperatorSeq& seq, const Vec& x, const Vec& y,
                        const SelectionPolicy& policy, Int horizon, std::uint64_t seed);

OrbitPair pair_distance_sequence(const OperatorSeq& seq, const Orbit& a, const Orbit& b);

std::vector<double> seminorm_series(const Orbit& orbit, const metric::SeminormFamily& family,
                                    int level);

enum class DensityMode { Plain, Reiterative };  // upper density vs upper Banach density

struct SetVerdict {
  bool verdict = false;
  double binding_threshold = 0.0;      // the grid point that decided it
  density::Profile binding_profile;    // profile of the witness set
};

/// Distributionally-near-to-zero test: every delta-set {k : d(x_k,0) < delta}
/// must have upper (Banach) density estimate >= 1 - theta1.
SetVerdict near_zero_verdict(const Orbit& orbit, DensityMode mode, const density::Config& cfg,
                             const std::vector<double>& delta_grid, double theta1);

/// Distributionally m-unbounded test: {k : p_m(x_k) > level} must have upper
/// (Banach) density estimate >= 1 - theta1 and the series must escape through
/// a log ladder of levels below the cap.
SetVerdict unbounded_verdict(const Orbit& orbit, const metric::SeminormFamily& family, int m,
                             DensityMode mode, const density::Config& cfg, double level,
                             double theta1);

enum class IrregularLabel {
  DistIrregular,            // (iii)
  ReitDistIrregular,        // (iii), reiterative reading
  ReitDistIrregularType1,   // (iv)
  ReitDistIrregularType2,   // (v)
  StrongLiYorkeIrregular,   // (vi)
  LiYorkeIrregular,         // (vii)
  Mixed1DistIrregular,      // (viii)
  Mixed2DistIrregular,      // (ix)
  Mixed3DistIrregular,      // (x)
  Mixed4DistIrregular,      // (xi)
  BracketMixed1Irregular,   // (xii)
  BracketMixed2Irregular,   // (xiii)
  LiYorkeNearZero,          // (xiv)
};

std::string label_name(IrregularLabel label);

struct IrregularConfig {
  density::Config density;
  std::vector<double> delta_grid;   // near-zero thresholds
  double theta0 = 0.05;
  double theta1 = 0.05;
  double theta_plus = 0.05;
  double unbounded_level = 1e6;

  static IrregularConfig defaults(Int horizon);
};

/// Evidence predicates feeding the label computation; one frozen selected
/// sequence backs all of them.
struct IrregularEvidence {
  bool near_zero_plain = false, near_zero_reit = false;
  bool unbounded_plain = false, unbounded_reit = false;
  int unbounded_level_index = 0;  // seminorm index that witnessed unboundedness
  bool subsequence_to_zero = false;
  bool not_converging_to_zero = false;
  bool unbounded_sup = false;
};

IrregularEvidence irregular_evidence(const Orbit& orbit, const metric::MetricSpace& space,
                                     const IrregularConfig& cfg);
std::set<IrregularLabel> irregular_class(const Orbit& orbit, const metric::MetricSpace& space,
                                         const IrregularConfig& cfg);

/// x_k = lambda^k x for a verified eigenpair; membership in A^k is certified
/// by graph_member up to the power cap and carried by induction beyond it.
Orbit eigen_witness_orbit(const rel::LinearRelation& a, Cplx lambda, const Vec& x, Int horizon,
                          const metric::MetricSpace& space);

}  // namespace chaoscalc::orbits
