#include "affproj/hyperplane.hpp"

#include <cmath>
#include <sstream>

namespace affproj {

DimensionMismatch::DimensionMismatch(const std::string& what, Eigen::Index expected,
                                     Eigen::Index actual)
    : std::invalid_argument([&] {
        std::ostringstream os;
        os << what << ": expected dimension " << expected << ", got " << actual;
        return os.str();
      }()),
      expected_(expected),
      actual_(actual) {}

void require_valid(const Vector& v, const char* what) {
  if (v.size() == 0) throw InvalidVector(std::string(what) + ": empty vector");
  if (!v.allFinite()) throw InvalidVector(std::string(what) + ": non-finite entry");
}

void require_dim(const Vector& v, Eigen::Index dim, const char* what) {
  if (v.size() != dim) throw DimensionMismatch(what, dim, v.size());
}

Hyperplane::Hyperplane(Vector normal, double offset)
    : normal_(std::move(normal)), offset_(offset), normal_sq_(normal_.squaredNorm()) {
  require_valid(normal_, "hyperplane normal");
  if (!std::isfinite(offset_)) throw InvalidVector("hyperplane offset is not finite");
  if (!(normal_sq_ > 0.0)) throw InvalidVector("hyperplane normal is zero");
}

double Hyperplane::residual(const Vector& x) const {
  require_dim(x, dim(), "hyperplane residual");
  return x.dot(normal_) - offset_;
}

Hyperplane Hyperplane::scaled(double factor) const {
  return Hyperplane(normal_ * factor, offset_ * factor);
}

Vector hyperplane_project(const Hyperplane& plane, const Vector& x) {
  require_dim(x, plane.dim(), "hyperplane_project");
  return x - (plane.residual(x) / plane.normal_squared_norm()) * plane.normal();
}

}  // namespace affproj
