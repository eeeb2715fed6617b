#pragma once

#include "affproj/vector.hpp"

#include <span>
#include <vector>

namespace affproj {

/// Extends the orthonormal list `basis` with the candidates, in order.
///
/// Each candidate goes through classical Gram-Schmidt against the current
/// basis twice; it is dropped when the surviving residual has norm at most
/// `rank_tol` times its original norm. Zero candidates are always dropped.
/// Returns the number of vectors appended.
std::size_t extend_orthonormal(std::vector<Vector>& basis, std::span<const Vector> candidates,
                               double rank_tol);

/// Orthonormal basis of span(candidates), built by `extend_orthonormal`.
std::vector<Vector> orthonormalize(std::span<const Vector> candidates, double rank_tol);

/// Orthonormal basis of the orthogonal complement of span(basis) in R^dim.
///
/// `basis` must already be orthonormal. Completes it with the standard basis
/// vectors and returns the vectors that were added.
std::vector<Vector> orthogonal_complement(std::span<const Vector> basis, Eigen::Index dim,
                                          double rank_tol);

/// Largest |<u_i, u_j> - delta_ij| over the list.
double orthonormality_defect(std::span<const Vector> basis);

}  // namespace affproj
