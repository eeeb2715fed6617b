#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace affproj {

/// Dense real coordinate vector of the ambient space.
using Vector = Eigen::VectorXd;
/// Dense row-major-agnostic real matrix (rows are equations).
using Matrix = Eigen::MatrixXd;

/// Two operands live in spaces of different dimension.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(const std::string& what, Eigen::Index expected, Eigen::Index actual);

  Eigen::Index expected() const noexcept { return expected_; }
  Eigen::Index actual() const noexcept { return actual_; }

 private:
  Eigen::Index expected_;
  Eigen::Index actual_;
};

/// A vector was empty or carried NaN/Inf entries.
class InvalidVector : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A direction whose projection must be nonzero collapsed to zero.
class DegenerateDirection : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Throws InvalidVector unless v is nonempty with finite entries.
void require_valid(const Vector& v, const char* what);

// Throws DimensionMismatch unless v.size() == dim.
void require_dim(const Vector& v, Eigen::Index dim, const char* what);

}  // namespace affproj
