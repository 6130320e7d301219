#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaoscalc/natset.hpp"

namespace chaoscalc::density {

using Int = natset::Int;

/// Finite-horizon truncation of the density limits: prefix ratios are scanned
/// over n in [tail*horizon, horizon], window ratios over starts in the same
/// tail range with a fixed window length.
struct Config {
  Int horizon = 100000;
  Int window = 1000;
  double tail = 0.5;

  void validate() const;
  Int tail_start() const;  // first prefix index scanned
};

/// An extremal count ratio kept as an exact integer fraction so that the
/// complement dualities hold exactly, not just up to rounding.
struct RatioStat {
  Int num = 0;
  Int den = 1;
  Int at = 0;  // index n (prefix) or window start (banach) attaining the extreme

  double value() const { return den == 0 ? 0.0 : double(num) / double(den); }
  // exact fraction comparison, no overflow for counts up to ~3e9
  bool less_than(const RatioStat& o) const;
  bool leq(double threshold) const { return double(num) <= threshold * double(den); }
  bool geq(double threshold) const { return double(num) >= threshold * double(den); }
};

struct Profile {
  RatioStat lower, upper, lower_banach, upper_banach;
  enum class Mode { Exact, Estimated } mode = Mode::Estimated;
  Config config;

  bool chain_holds(double tolerance) const;
};

Profile estimate_profile(const natset::SetExpr& a, const Config& cfg);

/// Shared estimator core over a 1-based membership indicator (index 0 unused).
Profile estimate_from_bitmap(const std::vector<std::uint8_t>& member, const Config& cfg);

/// Closed-form profile where one is derivable (Finite, Periodic, geometric
/// blocks with linear lengths, and boolean combinations reachable through the
/// complement duality, finite perturbation and periodic-lattice rules).
/// Empty optional = not-closed-form signal.
std::optional<Profile> exact_profile(const natset::SetExpr& a);

std::vector<std::pair<Int, double>> prefix_ratio_series(const natset::SetExpr& a,
                                                        const Config& cfg, Int stride);

std::string profile_to_json(const Profile& p);
std::string ratio_series_csv(const std::vector<std::pair<Int, double>>& series);

}  // namespace chaoscalc::density
