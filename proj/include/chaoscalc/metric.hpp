#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

namespace chaoscalc::metric {

using Vec = Eigen::VectorXcd;

/// Increasing family of seminorms p_1 <= p_2 <= ... on a finite-dimensional
/// coordinate space.  SingleNorm repeats one norm at every level (the Banach
/// case); CoordinateMax is the truncated sequence-space family
/// p_n(x) = max_{i<=min(n,d)} |x_i|; Weighted scales coordinate i by base^i.
struct SeminormFamily {
  enum class Kind { SingleNorm, CoordinateMax, Weighted };
  enum class Norm { Euclidean, Sup };

  Kind kind = Kind::SingleNorm;
  Norm norm = Norm::Euclidean;
  double weight_base = 2.0;
  int truncation = 53;  // seminorm levels summed by the metric

  double eval(int n, const Vec& x) const;
  /// p at the top level of the family (the largest seminorm in play).
  double top(const Vec& x) const { return eval(truncation, x); }
};

/// sum_{n=1}^{M} 2^-n p_n(x-y) / (1 + p_n(x-y)); truncation error <= 2^-M.
double frechet_distance(const SeminormFamily& f, const Vec& x, const Vec& y);
double frechet_of_difference(const SeminormFamily& f, const Vec& diff);

enum class DistanceMode { BanachNorm, Frechet };

struct MetricSpace {
  SeminormFamily family;
  DistanceMode mode = DistanceMode::BanachNorm;

  double distance(const Vec& x, const Vec& y) const;
  double distance_of_difference(const Vec& diff) const;
  double norm_from_zero(const Vec& x) const { return distance_of_difference(x); }
  void validate() const;
};

/// Family spec strings: norm:euclidean | norm:sup | coordmax | weighted:2^i
/// The single-norm specs select the Banach metric; the proper families select
/// the Frechet metric.  A "frechet:" prefix forces the Frechet metric on a
/// single-norm family.
MetricSpace parse_metric_spec(const std::string& spec);
std::string to_metric_spec(const MetricSpace& space);

}  // namespace chaoscalc::metric
