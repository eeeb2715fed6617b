#include "affproj/affine_subspace.hpp"

#include "affproj/orthonormalize.hpp"

#include <cmath>
#include <stdexcept>

namespace affproj {

void Tolerances::validate() const {
  for (double t : {orth, rank, feas}) {
    if (!(t > 0.0 && t < 1e-4)) throw std::invalid_argument("tolerances must lie in (0, 1e-4)");
  }
}

AffineSubspace::AffineSubspace(Vector anchor, std::vector<Vector> basis, const Tolerances& tol)
    : anchor_(std::move(anchor)), basis_(std::move(basis)) {
  tol.validate();
  require_valid(anchor_, "affine subspace anchor");
  if (basis_.size() > static_cast<std::size_t>(anchor_.size())) {
    throw std::invalid_argument("affine subspace basis exceeds ambient dimension");
  }
  for (const Vector& u : basis_) {
    require_dim(u, anchor_.size(), "affine subspace basis vector");
    require_valid(u, "affine subspace basis vector");
  }
  if (orthonormality_defect(basis_) > tol.orth) {
    throw std::invalid_argument("affine subspace basis is not orthonormal");
  }
  const double scale = tol.orth * (1.0 + anchor_.norm());
  for (const Vector& u : basis_) {
    if (std::abs(anchor_.dot(u)) > scale) {
      throw std::invalid_argument("affine subspace anchor is not orthogonal to the basis");
    }
  }
}

Matrix AffineSubspace::basis_matrix() const {
  Matrix out(ambient_dim(), static_cast<Eigen::Index>(basis_.size()));
  for (std::size_t j = 0; j < basis_.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = basis_[j];
  return out;
}

AffineSubspace AffineSubspace::from_hyperplane(const Hyperplane& plane, const Tolerances& tol) {
  const Vector unit = plane.normal() / std::sqrt(plane.normal_squared_norm());
  const std::vector<Vector> normal_dir{unit};
  Vector anchor = (plane.offset() / plane.normal_squared_norm()) * plane.normal();
  return AffineSubspace(std::move(anchor), orthogonal_complement(normal_dir, plane.dim(), tol.rank),
                        tol);
}

namespace {

// Removes the component of `point` along the orthonormal `basis`.
Vector strip_components(Vector point, const std::vector<Vector>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const Vector& u : basis) point -= u.dot(point) * u;
  }
  return point;
}

}  // namespace

AffineSubspace affine_from_point_basis(const Vector& point, std::span<const Vector> spanning,
                                       const Tolerances& tol) {
  tol.validate();
  require_valid(point, "affine point");
  for (const Vector& s : spanning) {
    require_dim(s, point.size(), "spanning vector");
    require_valid(s, "spanning vector");
  }
  std::vector<Vector> basis = orthonormalize(spanning, tol.rank);
  Vector anchor = strip_components(point, basis);
  return AffineSubspace(std::move(anchor), std::move(basis), tol);
}

std::variant<AffineSubspace, Infeasible> affine_from_linear_system(const Matrix& m,
                                                                   const Vector& b,
                                                                   const Tolerances& tol) {
  tol.validate();
  if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("linear system has empty shape");
  require_dim(b, m.rows(), "right-hand side");
  if (!m.allFinite() || !b.allFinite()) throw InvalidVector("linear system has non-finite entries");

  std::vector<Vector> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).transpose());
  const std::vector<Vector> row_basis = orthonormalize(rows, tol.rank);
  const auto rank = static_cast<Eigen::Index>(row_basis.size());

  // Minimum-norm least squares: x = R^T y with y minimizing |(M R^T) y - b|.
  Vector solution = Vector::Zero(m.cols());
  if (rank > 0) {
    Matrix r(m.cols(), rank);
    for (Eigen::Index j = 0; j < rank; ++j) r.col(j) = row_basis[static_cast<std::size_t>(j)];
    const Matrix reduced = m * r;
    const Vector y = reduced.colPivHouseholderQr().solve(b);
    solution = r * y;
  }
  const double residual = (m * solution - b).norm();
  if (residual > tol.feas * (1.0 + b.norm())) return Infeasible{residual};

  std::vector<Vector> null_basis = orthogonal_complement(row_basis, m.cols(), tol.rank);
  Vector anchor = strip_components(std::move(solution), null_basis);
  return AffineSubspace(std::move(anchor), std::move(null_basis), tol);
}

Vector parallel_project(const AffineSubspace& set, const Vector& x) {
  require_dim(x, set.ambient_dim(), "parallel_project");
  Vector out = Vector::Zero(x.size());
  for (const Vector& u : set.basis()) out += u.dot(x) * u;
  return out;
}

Vector affine_project(const AffineSubspace& set, const Vector& x) {
  return set.anchor() + parallel_project(set, x);
}

}  // namespace affproj
