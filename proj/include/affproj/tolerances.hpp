#pragma once

namespace affproj {

/// Numerical thresholds shared by every rank and feasibility decision.
///
/// `orth` bounds drift of stored orthonormal bases, `rank` is the relative
/// norm below which a projected direction is treated as zero, and `feas` is
/// the relative residual below which a linear constraint counts as satisfied.
struct Tolerances {
  double orth = 1e-10;
  double rank = 1e-10;
  double feas = 1e-8;

  /// Throws std::invalid_argument unless every field lies in (0, 1e-4).
  void validate() const;
};

}  // namespace affproj
