#include "chaoscalc/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace chaoscalc::metric {

double SeminormFamily::eval(int n, const Vec& x) const {
  if (n < 1) throw std::invalid_argument("seminorm level must be >= 1");
  switch (kind) {
    case Kind::SingleNorm:
      if (norm == Norm::Euclidean) return x.norm();
      return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
    case Kind::CoordinateMax: {
      Eigen::Index m = std::min<Eigen::Index>(n, x.size());
      double best = 0.0;
      for (Eigen::Index i = 0; i < m; ++i) best = std::max(best, std::abs(x[i]));
      return best;
    }
    case Kind::Weighted: {
      Eigen::Index m = std::min<Eigen::Index>(n, x.size());
      double best = 0.0;
      double w = weight_base;
      for (Eigen::Index i = 0; i < m; ++i, w *= weight_base)
        best = std::max(best, w * std::abs(x[i]));
      return best;
    }
  }
  return 0.0;
}

double frechet_of_difference(const SeminormFamily& f, const Vec& diff) {
  double sum = 0.0;
  double scale = 0.5;
  for (int n = 1; n <= f.truncation; ++n, scale *= 0.5) {
    double p = f.eval(n, diff);
    // p/(1+p) -> 1 as p -> inf; inf/inf must not produce NaN
    sum += scale * (std::isinf(p) ? 1.0 : p / (1.0 + p));
  }
  return sum;
}

double frechet_distance(const SeminormFamily& f, const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
  return frechet_of_difference(f, x - y);
}

void MetricSpace::validate() const {
  if (mode == DistanceMode::BanachNorm && family.kind != SeminormFamily::Kind::SingleNorm)
    throw std::invalid_argument("banach_norm distance requires a single-norm family");
}

double MetricSpace::distance(const Vec& x, const Vec& y) const {
  if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
  return distance_of_difference(x - y);
}

double MetricSpace::distance_of_difference(const Vec& diff) const {
  if (mode == DistanceMode::BanachNorm) return family.eval(1, diff);
  return frechet_of_difference(family, diff);
}

MetricSpace parse_metric_spec(const std::string& spec) {
  MetricSpace space;
  std::string s = spec;
  bool force_frechet = false;
  if (s.rfind("frechet:", 0) == 0) {
    force_frechet = true;
    s = s.substr(8);
  }
  if (s == "norm:euclidean") {
    space.family.kind = SeminormFamily::Kind::SingleNorm;
    space.family.norm = SeminormFamily::Norm::Euclidean;
    space.mode = force_frechet ? DistanceMode::Frechet : DistanceMode::BanachNorm;
  } else if (s == "norm:sup") {
    space.family.kind = SeminormFamily::Kind::SingleNorm;
    space.family.norm = SeminormFamily::Norm::Sup;
    space.mode = force_frechet ? DistanceMode::Frechet : DistanceMode::BanachNorm;
  } else if (s == "coordmax") {
    space.family.kind = SeminormFamily::Kind::CoordinateMax;
    space.mode = DistanceMode::Frechet;
  } else if (s.rfind("weighted:", 0) == 0) {
    std::string base = s.substr(9);
    space.family.kind = SeminormFamily::Kind::Weighted;
    if (base == "2^i") {
      space.family.weight_base = 2.0;
    } else {
      throw std::invalid_argument("unknown weight rule '" + base + "'");
    }
    space.mode = DistanceMode::Frechet;
  } else {
    throw std::invalid_argument("unknown metric spec '" + spec + "'");
  }
  return space;
}

std::string to_metric_spec(const MetricSpace& space) {
  std::string prefix =
      (space.mode == DistanceMode::Frechet &&
       space.family.kind == SeminormFamily::Kind::SingleNorm)
          ? "frechet:"
          : "";
  switch (space.family.kind) {
    case SeminormFamily::Kind::SingleNorm:
      return prefix + (space.family.norm == SeminormFamily::Norm::Euclidean ? "norm:euclidean"
                                                                            : "norm:sup");
    case SeminormFamily::Kind::CoordinateMax:
      return "coordmax";
    case SeminormFamily::Kind::Weighted:
      return "weighted:2^i";
  }
  return "";
}

}  // namespace chaoscalc::metric
