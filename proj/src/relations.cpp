#include "chaoscalc/relations.hpp"

#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace chaoscalc::rel {

namespace {

Eigen::JacobiSVD<Mat> svd_of(const Mat& m) {
  return Eigen::JacobiSVD<Mat>(m, Eigen::ComputeThinU | Eigen::ComputeFullV);
}

int numeric_rank(const Eigen::JacobiSVD<Mat>& svd, double tol) {
  if (svd.singularValues().size() == 0) return 0;
  double cutoff = tol * std::max(1.0, svd.singularValues()(0));
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cutoff) ++r;
  return r;
}

}  // namespace

Mat orthonormal_basis(const Mat& columns, double tol) {
  if (columns.cols() == 0 || columns.rows() == 0) return Mat(columns.rows(), 0);
  auto svd = svd_of(columns);
  int r = numeric_rank(svd, tol);
  return svd.matrixU().leftCols(r);
}

Mat null_space(const Mat& m, double tol) {
  if (m.cols() == 0) return Mat(0, 0);
  if (m.rows() == 0) return Mat::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  int r = numeric_rank(svd, tol);
  return svd.matrixV().rightCols(m.cols() - r);
}

Mat subspace_intersection(const Mat& a, const Mat& b, double tol) {
  if (a.cols() == 0 || b.cols() == 0) return Mat(a.rows(), 0);
  Mat joint(a.rows(), a.cols() + b.cols());
  joint << a, -b;
  Mat ns = null_space(joint, tol);
  if (ns.cols() == 0) return Mat(a.rows(), 0);
  Mat w = a * ns.topRows(a.cols());
  return orthonormal_basis(w, tol);
}

bool subspace_contained(const Mat& a, const Mat& b, double tol) {
  if (a.cols() == 0) return true;
  Mat bb = orthonormal_basis(b, tol);
  // residual of each basis vector of a against span(b)
  Mat resid = a - bb * (bb.adjoint() * a);
  return resid.colwise().norm().maxCoeff() <= tol * 10.0 * std::max(1.0, a.colwise().norm().maxCoeff());
}

bool subspace_equal(const Mat& a, const Mat& b, double tol) {
  return subspace_contained(a, b, tol) && subspace_contained(b, a, tol);
}

// ---------------------------------------------------------------------------
// FiniteRelation

FiniteRelation FiniteRelation::identity(int n) {
  FiniteRelation r;
  r.nx = r.ny = n;
  for (int i = 1; i <= n; ++i) r.pairs.insert({i, i});
  return r;
}

FiniteRelation FiniteRelation::inverse() const {
  FiniteRelation out;
  out.nx = ny;
  out.ny = nx;
  for (const auto& [x, y] : pairs) out.pairs.insert({y, x});
  return out;
}

FiniteRelation FiniteRelation::compose(const FiniteRelation& s, const FiniteRelation& r) {
  if (r.ny != s.nx) throw std::invalid_argument("finite compose: ground set mismatch");
  FiniteRelation out;
  out.nx = r.nx;
  out.ny = s.ny;
  for (const auto& [x, y] : r.pairs)
    for (const auto& [z, t] : s.pairs)
      if (y == z) out.pairs.insert({x, t});
  return out;
}

FiniteRelation FiniteRelation::power(int n) const {
  if (nx != ny) throw std::invalid_argument("finite power: relation not square");
  if (n < 0) return power(-n).inverse();
  FiniteRelation acc = identity(nx);
  for (int i = 0; i < n; ++i) acc = compose(*this, acc);
  return acc;
}

std::set<int> FiniteRelation::domain_set() const {
  std::set<int> out;
  for (const auto& [x, y] : pairs) out.insert(x);
  return out;
}

std::set<int> FiniteRelation::range_set() const {
  std::set<int> out;
  for (const auto& [x, y] : pairs) out.insert(y);
  return out;
}

// ---------------------------------------------------------------------------
// LinearRelation

LinearRelation LinearRelation::from_graph_basis(int dx, int dy, const Mat& columns) {
  if (dx < 0 || dy < 0 || dx > kDimCap || dy > kDimCap)
    throw std::invalid_argument("relation dimension outside [0, 64]");
  if (columns.rows() != dx + dy) throw std::invalid_argument("graph basis has wrong row count");
  LinearRelation r;
  r.dx_ = dx;
  r.dy_ = dy;
  r.basis_ = orthonormal_basis(columns);
  return r;
}

LinearRelation LinearRelation::from_matrix(const Mat& m) {
  int dy = int(m.rows()), dx = int(m.cols());
  Mat cols(dx + dy, dx);
  cols.topRows(dx) = Mat::Identity(dx, dx);
  cols.bottomRows(dy) = m;
  return from_graph_basis(dx, dy, cols);
}

LinearRelation LinearRelation::identity(int d) {
  return from_matrix(Mat::Identity(d, d));
}

LinearRelation LinearRelation::zero_operator(int d) {
  return from_matrix(Mat::Zero(d, d));
}

LinearRelation LinearRelation::from_finite(const FiniteRelation& r) {
  Mat cols = Mat::Zero(r.nx + r.ny, Eigen::Index(r.pairs.size()));
  Eigen::Index j = 0;
  for (const auto& [x, y] : r.pairs) {
    cols(x - 1, j) = 1.0;
    cols(r.nx + y - 1, j) = 1.0;
    ++j;
  }
  return from_graph_basis(r.nx, r.ny, cols);
}

LinearRelation LinearRelation::inverse() const {
  Mat cols(dy_ + dx_, basis_.cols());
  cols.topRows(dy_) = basis_.bottomRows(dy_);
  cols.bottomRows(dx_) = basis_.topRows(dx_);
  return from_graph_basis(dy_, dx_, cols);
}

LinearRelation LinearRelation::compose(const LinearRelation& s, const LinearRelation& r) {
  if (r.dy_ != s.dx_) throw std::invalid_argument("compose: dimension mismatch");
  const int dx = r.dx_, dm = r.dy_, dt = s.dy_;
  // Lift both graphs into (x, y, t) space, intersect, project to (x, t).
  Mat lift1 = Mat::Zero(dx + dm + dt, r.basis_.cols() + dt);
  lift1.topLeftCorner(dx + dm, r.basis_.cols()) = r.basis_;
  lift1.bottomRightCorner(dt, dt) = Mat::Identity(dt, dt);
  Mat lift2 = Mat::Zero(dx + dm + dt, dx + s.basis_.cols());
  lift2.topLeftCorner(dx, dx) = Mat::Identity(dx, dx);
  lift2.bottomRightCorner(dm + dt, s.basis_.cols()) = s.basis_;
  Mat inter = subspace_intersection(lift1, lift2);
  Mat proj(dx + dt, inter.cols());
  proj.topRows(dx) = inter.topRows(dx);
  proj.bottomRows(dt) = inter.bottomRows(dt);
  return from_graph_basis(dx, dt, proj);
}

LinearRelation LinearRelation::power(int n) const {
  if (dx_ != dy_) throw std::invalid_argument("power: relation not square");
  if (n < 0) return power(-n).inverse();
  LinearRelation acc = identity(dx_);
  for (int i = 0; i < n; ++i) acc = compose(*this, acc);
  return acc;
}

LinearRelation LinearRelation::sum(const LinearRelation& a, const LinearRelation& b) {
  if (a.dx_ != b.dx_ || a.dy_ != b.dy_) throw std::invalid_argument("sum: dimension mismatch");
  const int dx = a.dx_, dy = a.dy_;
  // Pairs ((x, y), (x, z)) with a shared x live in the intersection of the
  // two graphs lifted to (x, y, z); the sum maps them to (x, y + z).
  Mat lift1 = Mat::Zero(dx + 2 * dy, a.basis_.cols() + dy);
  lift1.topRows(dx) = Mat::Zero(dx, a.basis_.cols() + dy);
  lift1.topLeftCorner(dx, a.basis_.cols()) = a.basis_.topRows(dx);
  lift1.block(dx, 0, dy, a.basis_.cols()) = a.basis_.bottomRows(dy);
  lift1.block(dx + dy, a.basis_.cols(), dy, dy) = Mat::Identity(dy, dy);
  Mat lift2 = Mat::Zero(dx + 2 * dy, b.basis_.cols() + dy);
  lift2.topLeftCorner(dx, b.basis_.cols()) = b.basis_.topRows(dx);
  lift2.block(dx + dy, 0, dy, b.basis_.cols()) = b.basis_.bottomRows(dy);
  lift2.block(dx, b.basis_.cols(), dy, dy) = Mat::Identity(dy, dy);
  Mat inter = subspace_intersection(lift1, lift2);
  Mat out(dx + dy, inter.cols());
  out.topRows(dx) = inter.topRows(dx);
  out.bottomRows(dy) = inter.block(dx, 0, dy, inter.cols()) + inter.bottomRows(dy);
  return from_graph_basis(dx, dy, out);
}

LinearRelation LinearRelation::scale(Cplx z) const {
  Mat cols = basis_;
  cols.bottomRows(dy_) *= z;
  if (std::abs(z) == 0.0) {
    // (0*A)x = {0} on D(A): the graph is D(A) x {0}.
    Mat dom = orthonormal_basis(basis_.topRows(dx_));
    Mat out = Mat::Zero(dx_ + dy_, dom.cols());
    out.topRows(dx_) = dom;
    return from_graph_basis(dx_, dy_, out);
  }
  return from_graph_basis(dx_, dy_, cols);
}

bool LinearRelation::subset_of(const LinearRelation& b, double tol) const {
  if (dx_ != b.dx_ || dy_ != b.dy_) throw std::invalid_argument("subset: dimension mismatch");
  return subspace_contained(basis_, b.basis_, tol);
}

bool LinearRelation::graph_equal(const LinearRelation& b, double tol) const {
  return dx_ == b.dx_ && dy_ == b.dy_ && subspace_equal(basis_, b.basis_, tol);
}

LinearRelation LinearRelation::adjoint() const {
  // (y*, x*) with <y*, y_i> = <x*, x_i> for every graph basis column (x_i, y_i),
  // pairing conjugate-linear in the second slot.
  const Eigen::Index r = basis_.cols();
  Mat constraints(r, dy_ + dx_);
  for (Eigen::Index i = 0; i < r; ++i) {
    constraints.row(i).head(dy_) = basis_.col(i).tail(dy_).conjugate().transpose();
    constraints.row(i).tail(dx_) = -basis_.col(i).head(dx_).conjugate().transpose();
  }
  Mat ns = null_space(constraints);
  return from_graph_basis(dy_, dx_, ns);
}

LinearRelation LinearRelation::restrict_domain(const Mat& subspace) const {
  // graph ∩ (subspace x K^dy)
  Mat lifted = Mat::Zero(dx_ + dy_, subspace.cols() + dy_);
  lifted.topLeftCorner(dx_, subspace.cols()) = subspace;
  lifted.bottomRightCorner(dy_, dy_) = Mat::Identity(dy_, dy_);
  Mat inter = subspace_intersection(basis_, lifted);
  return from_graph_basis(dx_, dy_, inter);
}

Parts LinearRelation::parts() const {
  Parts p;
  p.domain = orthonormal_basis(basis_.topRows(dx_));
  p.range = orthonormal_basis(basis_.bottomRows(dy_));
  Mat np = null_space(basis_.topRows(dx_));
  p.multivalued = np.cols() == 0 ? Mat(dy_, 0) : orthonormal_basis(basis_.bottomRows(dy_) * np);
  Mat nq = null_space(basis_.bottomRows(dy_));
  p.kernel = nq.cols() == 0 ? Mat(dx_, 0) : orthonormal_basis(basis_.topRows(dx_) * nq);
  p.single_valued = p.multivalued.cols() == 0;
  p.purely_multivalued = !p.single_valued;
  return p;
}

double LinearRelation::graph_residual(const Vec& x, const Vec& y) const {
  if (x.size() != dx_ || y.size() != dy_)
    throw std::invalid_argument("graph_residual: dimension mismatch");
  Vec v(dx_ + dy_);
  v << x, y;
  Vec proj = basis_ * (basis_.adjoint() * v);
  return (v - proj).norm();
}

bool LinearRelation::graph_member(const Vec& x, const Vec& y, double tol) const {
  Vec v(dx_ + dy_);
  v << x, y;
  return graph_residual(x, y) <= tol * (1.0 + v.norm());
}

std::optional<ValueSet> LinearRelation::value_set(const Vec& x, double tol) const {
  if (x.size() != dx_) throw std::invalid_argument("value_set: dimension mismatch");
  Mat p = basis_.topRows(dx_);
  // least-squares coefficient vector for P v = x
  Eigen::JacobiSVD<Mat> svd(p, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(kRankTol);
  Vec v = svd.solve(x);
  if ((p * v - x).norm() > tol * (1.0 + x.norm())) return std::nullopt;
  Vec rep = basis_.bottomRows(dy_) * v;
  Mat np = null_space(p);
  Mat offsets = np.cols() == 0 ? Mat(dy_, 0) : orthonormal_basis(basis_.bottomRows(dy_) * np);
  if (offsets.cols() > 0) rep -= offsets * (offsets.adjoint() * rep);
  ValueSet out;
  out.representative = rep;
  out.offsets = offsets;
  return out;
}

std::optional<int> LinearRelation::first_period(const Vec& x, int nmax) const {
  if (dx_ != dy_) throw std::invalid_argument("first_period: relation not square");
  LinearRelation acc = identity(dx_);
  for (int n = 1; n <= nmax; ++n) {
    acc = compose(*this, acc);
    if (acc.graph_member(x, x)) return n;
  }
  return std::nullopt;
}

EigenReport LinearRelation::eigenvalues(std::uint64_t seed) const {
  if (dx_ != dy_) throw std::invalid_argument("eigenvalues: relation not square");
  EigenReport report;
  const int d = dx_;
  Mat p = basis_.topRows(d);
  Mat q = basis_.bottomRows(d);

  // Split off the vertical directions: on V1 = N(P)^⊥ the x-part is injective,
  // and the multivalued part A0 = Q N(P) is quotiented away.
  Mat np = null_space(p);
  Mat a0 = np.cols() == 0 ? Mat(d, 0) : orthonormal_basis(q * np);
  Mat v1;
  {
    Eigen::JacobiSVD<Mat> svd(p, Eigen::ComputeFullV);
    int r1 = numeric_rank(svd, kRankTol);
    v1 = svd.matrixV().leftCols(r1);
  }
  if (v1.cols() == 0) return report;  // domain is {0}: no eigenvectors

  Mat pt = p * v1;
  Mat qt = q * v1;
  if (a0.cols() > 0) {
    pt -= a0 * (a0.adjoint() * pt);
    qt -= a0 * (a0.adjoint() * qt);
  }

  // Identically singular pencil: every scalar is an eigenvalue.
  Mat stacked(2 * d, v1.cols());
  stacked << pt, qt;
  if (null_space(stacked).cols() > 0) {
    report.continuum = true;
    return report;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  auto random_shift = [&]() { return Cplx(1.0 + unif(rng), unif(rng)); };
  const Eigen::Index r1 = v1.cols();
  Cplx shift = 0.0;
  Mat m;
  bool full_rank = false;
  for (int attempt = 0; attempt < 4 && !full_rank; ++attempt) {
    shift = random_shift();
    m = qt - shift * pt;
    Eigen::JacobiSVD<Mat> svd(m);
    full_rank = numeric_rank(svd, kRankTol) == int(r1);
  }
  if (!full_rank) {
    report.continuum = true;
    return report;
  }

  // Qt v = λ Pt v  ⟺  C w = μ w with C = M⁺ Pt, μ = 1/(λ - shift).
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(kRankTol);
  Mat c = svd.solve(pt);
  Eigen::ComplexEigenSolver<Mat> solver(c);
  if (solver.info() != Eigen::Success) return report;
  for (Eigen::Index i = 0; i < r1; ++i) {
    Cplx mu = solver.eigenvalues()(i);
    if (std::abs(mu) < 1e-12) continue;  // λ at infinity
    Cplx lambda = shift + 1.0 / mu;
    Vec v = v1 * solver.eigenvectors().col(i);
    Vec x = p * v;
    double xn = x.norm();
    if (xn < kRankTol) continue;
    x /= xn;
    Vec y = lambda * x;
    if (graph_member(x, y, 1e-7)) report.pairs.push_back({lambda, x});
  }
  return report;
}

}  // namespace chaoscalc::rel
