#pragma once

#include "affproj/affine_subspace.hpp"
#include "affproj/hyperplane.hpp"
#include "affproj/tolerances.hpp"
#include "affproj/vector.hpp"

#include <optional>
#include <string_view>

namespace affproj {

/// Which branch of the affine/hyperplane trichotomy applies.
enum class TrichotomyCase {
  DegenerateConsistent,    ///< P_U(c) = 0 and A lies inside H.
  DegenerateInconsistent,  ///< P_U(c) = 0 and A, H are disjoint.
  Transversal,             ///< P_U(c) != 0; A and H always meet.
};

std::string_view to_string(TrichotomyCase c) noexcept;

/// Outcome of projecting onto A ∩ H (or onto the generalized intersection
/// when the two sets are disjoint).
struct TrichotomyResult {
  TrichotomyCase kind;
  /// Projection onto A ∩ H, or onto Fix(P_A P_H) = A in the disjoint case.
  Vector point;
  /// Shortest vector from A to H; zero unless kind is DegenerateInconsistent.
  Vector gap;
  /// |P_U(c)|, the quantity deciding degeneracy.
  double projected_normal_norm = 0.0;
  /// |c1|^2 |c2|^2 - <c1,c2>^2, set only by the two-hyperplane routine.
  std::optional<double> pair_determinant;
};

/// Nearest point of A ∩ H to x, with the three-way case split.
TrichotomyResult project_affine_hyperplane(const AffineSubspace& set, const Hyperplane& plane,
                                           const Vector& x, const Tolerances& tol = {});

/// Gap vector of (A, H): the shortest h - a over a in A, h in H.
/// Zero whenever the sets intersect.
Vector gap_vector(const AffineSubspace& set, const Hyperplane& plane, const Tolerances& tol = {});

/// Projection onto E = A ∩ (H - g), which equals A ∩ H when that is nonempty.
Vector generalized_project(const AffineSubspace& set, const Hyperplane& plane, const Vector& x,
                           const Tolerances& tol = {});

enum class PairKind { Identical, ParallelDistinct, Transversal };

std::string_view to_string(PairKind k) noexcept;

struct PairClassification {
  PairKind kind;
};

/// Point-independent classification of two hyperplanes.
PairClassification classify_hyperplane_pair(const Hyperplane& first, const Hyperplane& second,
                                            const Tolerances& tol = {});

/// Closed-form nearest point of H1 ∩ H2 (or of Fix(P_H1 P_H2) when the planes are
/// parallel and distinct).
TrichotomyResult project_two_hyperplanes(const Hyperplane& first, const Hyperplane& second,
                                         const Vector& x, const Tolerances& tol = {});

}  // namespace affproj
