#include "affproj/sweep.hpp"

#include "affproj/affine_subspace.hpp"
#include "affproj/intersection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace affproj {

HyperplaneFamily::HyperplaneFamily(std::vector<Hyperplane> planes) : planes_(std::move(planes)) {
  if (planes_.empty()) throw std::invalid_argument("hyperplane family is empty");
  for (const Hyperplane& h : planes_) require_dim(h.normal(), planes_.front().dim(), "hyperplane family");
}

HyperplaneFamily HyperplaneFamily::from_system(const Matrix& m, const Vector& b) {
  require_dim(b, m.rows(), "right-hand side");
  std::vector<Hyperplane> planes;
  planes.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) planes.emplace_back(m.row(i).transpose(), b[i]);
  return HyperplaneFamily(std::move(planes));
}

SweepOperator::SweepOperator(SweepKind kind, HyperplaneFamily family, Tolerances tol)
    : kind_(kind), family_(std::move(family)), tol_(tol) {
  tol_.validate();
  if (kind_ == SweepKind::PairedPass) {
    const std::size_t m = family_.size();
    for (std::size_t i = 0; i + 1 < m; i += 2) pairs_.emplace_back(i, i + 1);
    if (m % 2 == 1) leftover_ = m - 1;
  }
}

Vector SweepOperator::apply(const Vector& x) const {
  require_dim(x, family_.dim(), "sweep");
  const auto& planes = family_.planes();
  Vector y = x;
  if (kind_ == SweepKind::SinglePass) {
    for (const Hyperplane& h : planes) y = hyperplane_project(h, y);
    return y;
  }
  for (const auto& [i, j] : pairs_) y = project_two_hyperplanes(planes[i], planes[j], y, tol_).point;
  if (leftover_) y = hyperplane_project(planes[*leftover_], y);
  return y;
}

InfeasibleSystem::InfeasibleSystem(double residual)
    : std::runtime_error("linear system is inconsistent (residual " + std::to_string(residual) + ")"),
      residual_(residual) {}

Vector exact_projection(const Matrix& m, const Vector& b, const Vector& x0, const Tolerances& tol) {
  require_dim(x0, m.cols(), "starting point");
  auto built = affine_from_linear_system(m, b, tol);
  if (const auto* bad = std::get_if<Infeasible>(&built)) throw InfeasibleSystem(bad->residual);
  return affine_project(std::get<AffineSubspace>(built), x0);
}

std::optional<double> proximity_db(const Vector& xn, const Vector& x0, const Vector& target) {
  require_dim(xn, target.size(), "proximity_db iterate");
  require_dim(x0, target.size(), "proximity_db start");
  const double initial = (x0 - target).norm();
  if (initial <= 1e-300) return std::nullopt;
  const double ratio = (xn - target).norm() / initial;
  if (!(ratio > 0.0)) return kProximityFloorDb;
  return std::max(kProximityFloorDb, 20.0 * std::log10(ratio));
}

}  // namespace affproj
