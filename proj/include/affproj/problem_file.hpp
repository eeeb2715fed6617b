#pragma once

#include "affproj/vector.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace affproj {

/// A closed affine set point + span(spans) and a hyperplane {<x,normal> = offset}.
struct AffineHyperplaneProblem {
  Vector point;
  std::vector<Vector> spans;
  Vector normal;
  double offset = 0.0;
  Vector query;
};

struct TwoHyperplanesProblem {
  Vector normal1;
  double offset1 = 0.0;
  Vector normal2;
  double offset2 = 0.0;
  Vector query;
};

/// Solution set of M x = rhs and a query point to project onto it.
struct LinearSystemProblem {
  Matrix m;
  Vector rhs;
  Vector query;
};

struct ProblemFile {
  std::variant<AffineHyperplaneProblem, TwoHyperplanesProblem, LinearSystemProblem> payload;

  std::string_view kind_name() const noexcept;
};

/// Malformed problem text. `line` is 1-based, 0 when the problem is global
/// (e.g. a missing field).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

/// Parses the line-oriented format documented in docs/problem-format.md.
/// Throws ParseError on syntax errors and DimensionMismatch when a vector's
/// length disagrees with the declared `dim`.
ProblemFile parse_problem(std::string_view text);

ProblemFile read_problem_file(const std::string& path);

/// Writes `problem` so that parse_problem recovers every double exactly.
void write_problem(std::ostream& out, const ProblemFile& problem);

/// Random problem of the given kind ("affine_hyperplane", "two_hyperplanes",
/// "linear_system") in dimension `dim`, iid standard normal data.
ProblemFile random_problem(std::string_view kind, int dim, std::uint64_t seed);

/// `%.16e` rendering: 17 significant digits, lossless for doubles.
std::string format_real(double value);
std::string format_vector(const Vector& v);

}  // namespace affproj
