#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace chaoscalc::rel {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

constexpr double kRankTol = 1e-9;  // relative to largest singular value
constexpr double kResTol = 1e-9;   // graph-membership residual, relative
constexpr int kDimCap = 64;
constexpr int kPowerCap = 16;

// Subspace helpers shared by the relation algebra and its tests.
Mat orthonormal_basis(const Mat& columns, double tol = kRankTol);
Mat null_space(const Mat& m, double tol = kRankTol);
Mat subspace_intersection(const Mat& a, const Mat& b, double tol = kRankTol);
bool subspace_contained(const Mat& a, const Mat& b, double tol = kRankTol);
bool subspace_equal(const Mat& a, const Mat& b, double tol = kRankTol);

/// Brute-force relation on finite ground sets {1..nx} x {1..ny}.
struct FiniteRelation {
  int nx = 0, ny = 0;
  std::set<std::pair<int, int>> pairs;

  static FiniteRelation identity(int n);
  FiniteRelation inverse() const;
  static FiniteRelation compose(const FiniteRelation& s, const FiniteRelation& r);
  FiniteRelation power(int n) const;  // requires nx == ny, n >= 0
  std::set<int> domain_set() const;
  std::set<int> range_set() const;
};

struct Parts {
  Mat domain;              // subspace of the x-space
  Mat range;               // subspace of the y-space
  Mat kernel;              // N(A) = {x : (x,0) in A}
  Mat multivalued;         // A0 = {y : (0,y) in A}
  bool single_valued = false;
  bool purely_multivalued = false;
};

struct EigenPair {
  Cplx lambda;
  Vec x;  // unit eigenvector, lambda*x in Ax
};

struct EigenReport {
  bool continuum = false;  // identically singular pencil: eigenvalues fill K
  std::vector<EigenPair> pairs;
};

/// The value set Ax = representative + span(multivalued part); the stored
/// representative is the minimal-norm one.
struct ValueSet {
  Vec representative;
  Mat offsets;  // basis of A0, possibly 0 columns
};

/// A multivalued linear operator given by an orthonormal full-column-rank
/// basis of its graph subspace {(x,y) : y in Ax} in K^dx x K^dy.
class LinearRelation {
public:
  LinearRelation() = default;
  static LinearRelation from_graph_basis(int dx, int dy, const Mat& columns);
  static LinearRelation from_matrix(const Mat& m);  // graph {(x, Mx)}
  static LinearRelation identity(int d);
  static LinearRelation zero_operator(int d);  // graph {(x, 0)}
  static LinearRelation from_finite(const FiniteRelation& r);  // indicator embedding

  int dx() const { return dx_; }
  int dy() const { return dy_; }
  int rank() const { return int(basis_.cols()); }
  const Mat& basis() const { return basis_; }
  Mat x_block() const { return basis_.topRows(dx_); }
  Mat y_block() const { return basis_.bottomRows(dy_); }

  LinearRelation inverse() const;
  static LinearRelation compose(const LinearRelation& s, const LinearRelation& r);  // s∘r
  LinearRelation power(int n) const;  // n may be negative (via inverse)
  static LinearRelation sum(const LinearRelation& a, const LinearRelation& b);
  LinearRelation scale(Cplx z) const;
  bool subset_of(const LinearRelation& b, double tol = kRankTol) const;
  bool graph_equal(const LinearRelation& b, double tol = kRankTol) const;
  LinearRelation adjoint() const;
  LinearRelation restrict_domain(const Mat& subspace) const;

  Parts parts() const;
  EigenReport eigenvalues(std::uint64_t seed = 20260810) const;

  /// Distance of (x,y) to the graph subspace.
  double graph_residual(const Vec& x, const Vec& y) const;
  bool graph_member(const Vec& x, const Vec& y, double tol = kResTol) const;

  /// Value set of x, or empty when x leaves the domain (residual above tol).
  std::optional<ValueSet> value_set(const Vec& x, double tol = kResTol) const;

  /// Smallest n <= nmax with x in A^n x, if any.
  std::optional<int> first_period(const Vec& x, int nmax) const;

private:
  int dx_ = 0, dy_ = 0;
  Mat basis_;  // (dx+dy) x r, orthonormal columns
};

}  // namespace chaoscalc::rel
