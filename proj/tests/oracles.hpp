#pragma once

// Test-only reference solvers. These deliberately avoid the library's
// Gram-Schmidt and closed forms: every answer comes from an Eigen
// factorization of an equality-constrained least-squares (KKT) system.

#include <Eigen/Dense>

#include <random>

namespace oracle {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// argmin |z - x|^2 subject to C z = d, via the augmented system
/// [I C^T; C 0] [z; lambda] = [x; d]. Redundant constraints are tolerated
/// (minimum-norm solve of a consistent singular system).
inline Vec constrained_nearest(const Mat& c, const Vec& d, const Vec& x) {
  const Eigen::Index n = x.size();
  const Eigen::Index k = c.rows();
  Mat kkt = Mat::Zero(n + k, n + k);
  kkt.topLeftCorner(n, n).setIdentity();
  kkt.topRightCorner(n, k) = c.transpose();
  kkt.bottomLeftCorner(k, n) = c;
  Vec rhs(n + k);
  rhs << x, d;
  return kkt.completeOrthogonalDecomposition().solve(rhs).head(n);
}

/// Nearest point of {p + S t : <p + S t, c> = gamma} to x, solved in the
/// coordinates t: [S^T S, S^T c; c^T S, 0] [t; lambda] = [S^T (x - p); gamma - <c,p>].
/// With no columns in S the set is {p} (or empty); p is returned.
inline Vec affine_hyperplane_nearest(const Vec& p, const Mat& s, const Vec& c, double gamma,
                                     const Vec& x) {
  const Eigen::Index k = s.cols();
  if (k == 0) return p;
  Mat kkt = Mat::Zero(k + 1, k + 1);
  kkt.topLeftCorner(k, k) = s.transpose() * s;
  kkt.topRightCorner(k, 1) = s.transpose() * c;
  kkt.bottomLeftCorner(1, k) = (s.transpose() * c).transpose();
  Vec rhs(k + 1);
  rhs << s.transpose() * (x - p), gamma - c.dot(p);
  const Vec t = kkt.completeOrthogonalDecomposition().solve(rhs).head(k);
  return p + s * t;
}

/// Nearest point of p + range(S) to x (unconstrained least squares in t).
inline Vec affine_nearest(const Vec& p, const Mat& s, const Vec& x) {
  if (s.cols() == 0) return p;
  const Vec t = s.completeOrthogonalDecomposition().solve(x - p);
  return p + s * t;
}

/// Component of r orthogonal to range(S), via Householder QR.
inline Vec orthogonal_part(const Mat& s, const Vec& r) {
  if (s.cols() == 0) return r;
  Eigen::HouseholderQR<Mat> qr(s);
  const Mat q = qr.householderQ() * Mat::Identity(s.rows(), s.cols());
  return r - q * (q.transpose() * r);
}

inline Vec gaussian(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> dist;
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = dist(rng);
  return v;
}

inline Mat gaussian(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> dist;
  Mat m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = dist(rng);
  return m;
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace oracle
