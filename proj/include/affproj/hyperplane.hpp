#pragma once

#include "affproj/vector.hpp"

namespace affproj {

/// The level set {x : <x, normal> = offset} of a nonzero linear functional.
///
/// The normal is stored exactly as given (not normalized); every formula
/// divides by its squared norm explicitly.
class Hyperplane {
 public:
  /// Throws InvalidVector for a zero or non-finite normal, or a non-finite offset.
  Hyperplane(Vector normal, double offset);

  const Vector& normal() const noexcept { return normal_; }
  double offset() const noexcept { return offset_; }
  Eigen::Index dim() const noexcept { return normal_.size(); }
  double normal_squared_norm() const noexcept { return normal_sq_; }

  /// Signed residual <x, normal> - offset.
  double residual(const Vector& x) const;

  /// Same set with normal and offset multiplied by a nonzero factor.
  Hyperplane scaled(double factor) const;

 private:
  Vector normal_;
  double offset_;
  double normal_sq_;
};

/// Nearest point of `plane` to `x`: x - ((<x,c> - gamma) / |c|^2) c.
Vector hyperplane_project(const Hyperplane& plane, const Vector& x);

}  // namespace affproj
