#include "affproj/cone.hpp"

#include <cmath>

namespace affproj {

Vector orthant_project(const Vector& x) { return x.cwiseMax(0.0); }

Vector naive_cone_formula(const Projector& project_cone, const Vector& v, double beta,
                          const Vector& x) {
  require_dim(x, v.size(), "naive_cone_formula");
  const Vector pv = project_cone(v);
  const double pv_sq = pv.squaredNorm();
  if (!(pv_sq > 0.0) || !std::isfinite(pv_sq)) {
    throw DegenerateDirection("projection of the hyperplane normal onto the cone is zero");
  }
  const Vector px = project_cone(x);
  return px + ((beta - px.dot(v)) / pv_sq) * pv;
}

}  // namespace affproj
