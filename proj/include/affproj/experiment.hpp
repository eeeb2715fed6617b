#pragma once

#include "affproj/tolerances.hpp"
#include "affproj/vector.hpp"

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

namespace affproj {

/// Random consistent underdetermined systems M x = b with b = M xbar, each
/// attacked from several random starting points.
struct ExperimentConfig {
  int rows = 10;
  int cols = 50;
  int instances = 100;
  int starts_per_instance = 100;
  int iterations = 50;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on non-positive sizes, negative
  /// iterations, or rows > cols.
  void validate() const;
};

/// Median dB proximity per sweep index, single-plane sweeps vs paired sweeps.
struct ConvergenceTable {
  std::vector<int> iteration_index;
  std::vector<double> median_db_single;
  std::vector<double> median_db_paired;
};

/// Distance-to-limit history of one (instance, start) cell.
struct CellTrace {
  std::vector<double> distance_single;  ///< |p_n - x*|, n = 0..iterations
  std::vector<double> distance_paired;  ///< |q_n - x*|
  double target_norm = 0.0;             ///< |x*|
};

/// Relative slack allowed in |x_{n+1} - x*| <= (1 + slack) |x_n - x*|.
inline constexpr double kFejerRelativeSlack = 1e-12;

struct ExperimentReport {
  ConvergenceTable table;
  /// max over all cells and n of (d_{n+1} - (1 + kFejerRelativeSlack) d_n) / (1 + |x*|),
  /// both sweeps. Nonpositive for exact Fejer monotone runs.
  double worst_fejer_excess = 0.0;
  /// max over all cells and n of d_{n+1} / d_n (for d_n > 0), both sweeps.
  double worst_fejer_ratio = 0.0;
};

/// Deterministic engine for the substream keyed by (seed, instance, stream).
/// Stream 0 of an instance generates M and xbar; stream s + 1 generates start s.
std::mt19937_64 substream_engine(std::uint64_t seed, std::uint64_t instance, std::uint64_t stream);

/// Runs both cyclic iterations from x0 towards P_C(x0) for `iterations` sweeps.
CellTrace trace_cell(const Matrix& m, const Vector& b, const Vector& x0, int iterations,
                     const Tolerances& tol = {});

/// Median over starts within each instance, then median over instances.
ExperimentReport run_experiment_report(const ExperimentConfig& cfg, const Tolerances& tol = {});

ConvergenceTable run_experiment(const ExperimentConfig& cfg, const Tolerances& tol = {});

/// Median of the values; mean of the two middle order statistics for even counts.
double median(std::vector<double> values);

/// Header `iteration,median_db_single,median_db_paired`, LF line endings,
/// 17 significant digits.
void write_csv(std::ostream& out, const ConvergenceTable& table);

}  // namespace affproj
