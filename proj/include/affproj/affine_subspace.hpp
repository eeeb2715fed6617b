#pragma once

#include "affproj/hyperplane.hpp"
#include "affproj/tolerances.hpp"
#include "affproj/vector.hpp"

#include <span>
#include <variant>
#include <vector>

namespace affproj {

/// Closed affine set anchor + U, stored as the anchor P_A(0) (which lies in
/// the orthogonal complement of U) and an orthonormal basis of U.
///
/// Instances come from the factory functions below, which enforce both
/// invariants; the class is immutable afterwards.
class AffineSubspace {
 public:
  /// Validating constructor for already-orthonormal data. Throws
  /// std::invalid_argument when the basis or the anchor violate `tol.orth`.
  AffineSubspace(Vector anchor, std::vector<Vector> basis, const Tolerances& tol = {});

  const Vector& anchor() const noexcept { return anchor_; }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  Eigen::Index ambient_dim() const noexcept { return anchor_.size(); }
  std::size_t subspace_dim() const noexcept { return basis_.size(); }

  /// Basis as the columns of an ambient_dim x subspace_dim matrix.
  Matrix basis_matrix() const;

  /// The hyperplane {<x,c> = gamma} as anchor (gamma/|c|^2) c plus a basis of c-perp.
  static AffineSubspace from_hyperplane(const Hyperplane& plane, const Tolerances& tol = {});

 private:
  Vector anchor_;
  std::vector<Vector> basis_;
};

/// The linear system M x = b has no solution within `Tolerances::feas`.
struct Infeasible {
  double residual;  ///< |M x_ls - b| of the minimum-norm least-squares solution.
};

/// point + span(spanning); dependent spanning vectors are dropped.
AffineSubspace affine_from_point_basis(const Vector& point, std::span<const Vector> spanning,
                                       const Tolerances& tol = {});

/// Solution set of M x = b, or Infeasible when the system is inconsistent.
std::variant<AffineSubspace, Infeasible> affine_from_linear_system(const Matrix& m,
                                                                   const Vector& b,
                                                                   const Tolerances& tol = {});

/// P_U(x) = sum_i <x,u_i> u_i.
Vector parallel_project(const AffineSubspace& set, const Vector& x);

/// P_A(x) = anchor + P_U(x).
Vector affine_project(const AffineSubspace& set, const Vector& x);

}  // namespace affproj
