#pragma once

#include "affproj/vector.hpp"

#include <functional>

namespace affproj {

using Projector = std::function<Vector(const Vector&)>;

/// Componentwise max(x_i, 0): projection onto the nonnegative orthant.
Vector orthant_project(const Vector& x);

/// The affine-subspace formula with P_A replaced by the projector of a cone K:
///
///   P_K(x) + ((beta - <P_K(x), v>) / |P_K(v)|^2) P_K(v)
///
/// This is NOT the projection onto K ∩ {<x,v> = beta}; for K = R^2_+ it leaves
/// K. It exists to demonstrate that failure. Throws DegenerateDirection when
/// P_K(v) = 0.
Vector naive_cone_formula(const Projector& project_cone, const Vector& v, double beta,
                          const Vector& x);

}  // namespace affproj
