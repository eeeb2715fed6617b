#include "affproj/intersection.hpp"

#include <cmath>

namespace affproj {

std::string_view to_string(TrichotomyCase c) noexcept {
  switch (c) {
    case TrichotomyCase::DegenerateConsistent: return "DegenerateConsistent";
    case TrichotomyCase::DegenerateInconsistent: return "DegenerateInconsistent";
    case TrichotomyCase::Transversal: return "Transversal";
  }
  return "Unknown";
}

std::string_view to_string(PairKind k) noexcept {
  switch (k) {
    case PairKind::Identical: return "Identical";
    case PairKind::ParallelDistinct: return "ParallelDistinct";
    case PairKind::Transversal: return "Transversal";
  }
  return "Unknown";
}

namespace {

void check_operands(const AffineSubspace& set, const Hyperplane& plane) {
  require_dim(plane.normal(), set.ambient_dim(), "hyperplane normal vs affine subspace");
}

bool normal_is_degenerate(double projected_norm, const Hyperplane& plane, const Tolerances& tol) {
  return projected_norm <= tol.rank * std::sqrt(plane.normal_squared_norm());
}

// With c orthogonal to U, <a,c> is constant on A; compare it to gamma.
// Both sides scale linearly with (c, gamma), so the decision does too.
bool anchor_satisfies(const AffineSubspace& set, const Hyperplane& plane, const Tolerances& tol) {
  const double cnorm = std::sqrt(plane.normal_squared_norm());
  const double lhs = std::abs(set.anchor().dot(plane.normal()) - plane.offset());
  const double rhs =
      tol.feas * (cnorm + std::abs(plane.offset()) + set.anchor().norm() * cnorm);
  return lhs <= rhs;
}

// (gamma - <a0, c>) / |c|^2 * c, the gap when c is orthogonal to U.
Vector degenerate_gap(const AffineSubspace& set, const Hyperplane& plane) {
  const double t = (plane.offset() - set.anchor().dot(plane.normal())) / plane.normal_squared_norm();
  return t * plane.normal();
}

}  // namespace

TrichotomyResult project_affine_hyperplane(const AffineSubspace& set, const Hyperplane& plane,
                                           const Vector& x, const Tolerances& tol) {
  tol.validate();
  check_operands(set, plane);
  require_dim(x, set.ambient_dim(), "query point");

  const Vector w = parallel_project(set, plane.normal());
  const double wnorm = w.norm();
  Vector base = affine_project(set, x);

  TrichotomyResult out{TrichotomyCase::Transversal, Vector(), Vector::Zero(x.size()), wnorm,
                       std::nullopt};
  if (normal_is_degenerate(wnorm, plane, tol)) {
    if (anchor_satisfies(set, plane, tol)) {
      out.kind = TrichotomyCase::DegenerateConsistent;
    } else {
      out.kind = TrichotomyCase::DegenerateInconsistent;
      out.gap = degenerate_gap(set, plane);
    }
    out.point = std::move(base);
    return out;
  }

  const double step = (plane.offset() - base.dot(plane.normal())) / (wnorm * wnorm);
  out.point = base + step * w;
  return out;
}

Vector gap_vector(const AffineSubspace& set, const Hyperplane& plane, const Tolerances& tol) {
  tol.validate();
  check_operands(set, plane);
  const Vector w = parallel_project(set, plane.normal());
  if (!normal_is_degenerate(w.norm(), plane, tol) || anchor_satisfies(set, plane, tol)) {
    return Vector::Zero(set.ambient_dim());
  }
  return degenerate_gap(set, plane);
}

Vector generalized_project(const AffineSubspace& set, const Hyperplane& plane, const Vector& x,
                           const Tolerances& tol) {
  return project_affine_hyperplane(set, plane, x, tol).point;
}

namespace {

struct PairGeometry {
  double n1;     // |c1|^2
  double n2;     // |c2|^2
  double cross;  // <c1, c2>
  double perp;   // |c2 - (<c1,c2>/|c1|^2) c1|
};

PairGeometry pair_geometry(const Hyperplane& first, const Hyperplane& second) {
  require_dim(second.normal(), first.dim(), "hyperplane pair");
  PairGeometry g{first.normal_squared_norm(), second.normal_squared_norm(),
                 first.normal().dot(second.normal()), 0.0};
  g.perp = (second.normal() - (g.cross / g.n1) * first.normal()).norm();
  return g;
}

PairKind classify(const Hyperplane& first, const Hyperplane& second, const PairGeometry& g,
                  const Tolerances& tol) {
  // |P_{c1-perp}(c2)| <= tol_rank |c2| is the parallel test; computing the
  // residual directly avoids the cancellation in |c1|^2|c2|^2 - <c1,c2>^2.
  if (g.perp > tol.rank * std::sqrt(g.n2)) return PairKind::Transversal;
  const double g1 = first.offset();
  const double g2 = second.offset();
  const double lhs = std::abs(g2 * g.n1 - g.cross * g1);
  const double rhs =
      tol.feas * (g.n1 * std::sqrt(g.n2) + std::abs(g2) * g.n1 + std::abs(g1) * std::sqrt(g.n1 * g.n2));
  return lhs <= rhs ? PairKind::Identical : PairKind::ParallelDistinct;
}

}  // namespace

PairClassification classify_hyperplane_pair(const Hyperplane& first, const Hyperplane& second,
                                            const Tolerances& tol) {
  tol.validate();
  return {classify(first, second, pair_geometry(first, second), tol)};
}

TrichotomyResult project_two_hyperplanes(const Hyperplane& first, const Hyperplane& second,
                                         const Vector& x, const Tolerances& tol) {
  tol.validate();
  const PairGeometry g = pair_geometry(first, second);
  require_dim(x, first.dim(), "query point");

  const double det = g.n1 * g.n2 - g.cross * g.cross;
  TrichotomyResult out{TrichotomyCase::Transversal, Vector(), Vector::Zero(x.size()),
                       g.perp, det};

  switch (classify(first, second, g, tol)) {
    case PairKind::Identical:
      out.kind = TrichotomyCase::DegenerateConsistent;
      out.point = hyperplane_project(first, x);
      return out;
    case PairKind::ParallelDistinct: {
      out.kind = TrichotomyCase::DegenerateInconsistent;
      out.point = hyperplane_project(first, x);
      // Anchor of H1 is (gamma1/|c1|^2) c1, so <a0, c2> = gamma1 <c1,c2> / |c1|^2.
      const double t = (second.offset() - first.offset() * g.cross / g.n1) / g.n2;
      out.gap = t * second.normal();
      return out;
    }
    case PairKind::Transversal:
      break;
  }

  const double r1 = x.dot(first.normal()) - first.offset();
  const double r2 = x.dot(second.normal()) - second.offset();
  const double alpha = (-g.n2 * r1 + g.cross * r2) / det;
  const double beta = (-g.n1 * r2 + g.cross * r1) / det;
  out.point = x + alpha * first.normal() + beta * second.normal();
  return out;
}

}  // namespace affproj
