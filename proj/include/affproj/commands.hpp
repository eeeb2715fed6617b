#pragma once

#include "affproj/experiment.hpp"
#include "affproj/tolerances.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace affproj::cli {

/// Process exit codes. Mathematical outcomes (empty intersections,
/// inconsistent systems) always exit with kOk.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kDimension = 3,
  kOutput = 4,
};

int project(const std::string& input_path, const Tolerances& tol, std::ostream& out,
            std::ostream& err);

int gap(const std::string& input_path, const Tolerances& tol, std::ostream& out,
        std::ostream& err);

int classify(const std::string& input_path, const Tolerances& tol, std::ostream& out,
             std::ostream& err);

/// Writes the convergence CSV to `csv_path` and a summary to `out`.
int experiment(const ExperimentConfig& cfg, const std::string& csv_path, const Tolerances& tol,
               std::ostream& out, std::ostream& err);

/// Writes a random problem file of `kind` (stdout when `out_path` is empty).
int generate(const std::string& kind, int dim, std::uint64_t seed, const std::string& out_path,
             std::ostream& out, std::ostream& err);

}  // namespace affproj::cli
