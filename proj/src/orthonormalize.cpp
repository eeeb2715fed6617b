#include "affproj/orthonormalize.hpp"

#include <algorithm>
#include <cmath>

namespace affproj {

namespace {

void subtract_projections(const std::vector<Vector>& basis, Vector& r) {
  // Classical Gram-Schmidt: coefficients against the incoming residual.
  Eigen::VectorXd coeffs(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) coeffs[static_cast<Eigen::Index>(i)] = basis[i].dot(r);
  for (std::size_t i = 0; i < basis.size(); ++i) r -= coeffs[static_cast<Eigen::Index>(i)] * basis[i];
}

}  // namespace

std::size_t extend_orthonormal(std::vector<Vector>& basis, std::span<const Vector> candidates,
                               double rank_tol) {
  std::size_t added = 0;
  for (const Vector& c : candidates) {
    if (!basis.empty()) require_dim(c, basis.front().size(), "orthonormalize");
    const double original = c.norm();
    if (!(original > 0.0)) continue;
    Vector r = c;
    subtract_projections(basis, r);
    subtract_projections(basis, r);
    const double remaining = r.norm();
    if (remaining <= rank_tol * original) continue;
    basis.push_back(r / remaining);
    ++added;
  }
  return added;
}

std::vector<Vector> orthonormalize(std::span<const Vector> candidates, double rank_tol) {
  std::vector<Vector> basis;
  extend_orthonormal(basis, candidates, rank_tol);
  return basis;
}

std::vector<Vector> orthogonal_complement(std::span<const Vector> basis, Eigen::Index dim,
                                          double rank_tol) {
  std::vector<Vector> full(basis.begin(), basis.end());
  const std::size_t start = full.size();
  const auto target = static_cast<std::size_t>(dim);
  for (Eigen::Index i = 0; i < dim && full.size() < target; ++i) {
    const Vector e = Vector::Unit(dim, i);
    extend_orthonormal(full, std::span<const Vector>(&e, 1), rank_tol);
  }
  return {full.begin() + static_cast<std::ptrdiff_t>(start), full.end()};
}

double orthonormality_defect(std::span<const Vector> basis) {
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(basis[i].dot(basis[j]) - target));
    }
  }
  return worst;
}

}  // namespace affproj
