#pragma once

#include "affproj/hyperplane.hpp"
#include "affproj/tolerances.hpp"
#include "affproj/vector.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace affproj {

/// The rows of M x = b as hyperplanes H_i = {x : <m_i, x> = b_i}.
class HyperplaneFamily {
 public:
  explicit HyperplaneFamily(std::vector<Hyperplane> planes);

  /// One hyperplane per row. Throws InvalidVector on a zero row.
  static HyperplaneFamily from_system(const Matrix& m, const Vector& b);

  const std::vector<Hyperplane>& planes() const noexcept { return planes_; }
  std::size_t size() const noexcept { return planes_.size(); }
  Eigen::Index dim() const noexcept { return planes_.front().dim(); }

 private:
  std::vector<Hyperplane> planes_;
};

enum class SweepKind {
  SinglePass,  ///< P_{H_m} ... P_{H_2} P_{H_1}
  PairedPass,  ///< P_{H_m ∩ H_m-1} ... P_{H_2 ∩ H_1}, odd leftover projected last
};

/// One cyclic pass over a hyperplane family.
class SweepOperator {
 public:
  SweepOperator(SweepKind kind, HyperplaneFamily family, Tolerances tol = {});

  SweepKind kind() const noexcept { return kind_; }
  const HyperplaneFamily& family() const noexcept { return family_; }
  /// Consecutive index pairs (0,1), (2,3), ...; empty for SinglePass.
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept { return pairs_; }
  /// Unpaired last index when a PairedPass family has odd size.
  std::optional<std::size_t> leftover() const noexcept { return leftover_; }

  /// Applies the full pass once.
  Vector apply(const Vector& x) const;

 private:
  SweepKind kind_;
  HyperplaneFamily family_;
  Tolerances tol_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::optional<std::size_t> leftover_;
};

inline Vector sweep(const SweepOperator& op, const Vector& x) { return op.apply(x); }

/// M x = b has no solution; carries the least-squares residual.
class InfeasibleSystem : public std::runtime_error {
 public:
  explicit InfeasibleSystem(double residual);
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// P_C(x0) for C = {x : M x = b}. Throws InfeasibleSystem when C is empty.
Vector exact_projection(const Matrix& m, const Vector& b, const Vector& x0,
                        const Tolerances& tol = {});

inline constexpr double kProximityFloorDb = -320.0;

/// 20 log10(|xn - x*| / |x0 - x*|), clamped below at -320 dB.
/// Returns nullopt when |x0 - x*| <= 1e-300 (converged at start).
std::optional<double> proximity_db(const Vector& xn, const Vector& x0, const Vector& target);

}  // namespace affproj
