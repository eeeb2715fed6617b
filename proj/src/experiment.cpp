#include "affproj/experiment.hpp"

#include "affproj/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace affproj {

void ExperimentConfig::validate() const {
  if (rows <= 0 || cols <= 0 || instances <= 0 || starts_per_instance <= 0) {
    throw std::invalid_argument("experiment sizes must be positive");
  }
  if (iterations < 0) throw std::invalid_argument("iteration count must be nonnegative");
  if (rows > cols) throw std::invalid_argument("experiment requires rows <= cols");
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Vector normal_vector(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = dist(rng);
  return v;
}

std::vector<double> to_db(const std::vector<double>& distances) {
  std::vector<double> out(distances.size());
  const double initial = distances.front();
  if (initial <= 1e-300) {
    // Started on the limit: report 0 dB at n = 0 and the floor afterwards.
    std::fill(out.begin(), out.end(), kProximityFloorDb);
    out.front() = 0.0;
    return out;
  }
  for (std::size_t n = 0; n < distances.size(); ++n) {
    const double ratio = distances[n] / initial;
    out[n] = ratio > 0.0 ? std::max(kProximityFloorDb, 20.0 * std::log10(ratio)) : kProximityFloorDb;
  }
  return out;
}

struct CellResult {
  std::vector<double> db_single;
  std::vector<double> db_paired;
  double fejer_excess = 0.0;
  double fejer_ratio = 0.0;
};

void fejer_stats(const std::vector<double>& d, double target_norm, CellResult& cell) {
  for (std::size_t n = 0; n + 1 < d.size(); ++n) {
    const double excess = d[n + 1] - (1.0 + kFejerRelativeSlack) * d[n];
    cell.fejer_excess = std::max(cell.fejer_excess, excess / (1.0 + target_norm));
    if (d[n] > 0.0) cell.fejer_ratio = std::max(cell.fejer_ratio, d[n + 1] / d[n]);
  }
}

}  // namespace

std::mt19937_64 substream_engine(std::uint64_t seed, std::uint64_t instance, std::uint64_t stream) {
  const std::uint64_t key = splitmix64(splitmix64(splitmix64(seed) ^ instance) ^ stream);
  std::seed_seq seq{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)};
  return std::mt19937_64(seq);
}

CellTrace trace_cell(const Matrix& m, const Vector& b, const Vector& x0, int iterations,
                     const Tolerances& tol) {
  const Vector target = exact_projection(m, b, x0, tol);
  const HyperplaneFamily family = HyperplaneFamily::from_system(m, b);
  const SweepOperator single(SweepKind::SinglePass, family, tol);
  const SweepOperator paired(SweepKind::PairedPass, family, tol);

  CellTrace trace;
  trace.target_norm = target.norm();
  const auto count = static_cast<std::size_t>(iterations) + 1;
  trace.distance_single.reserve(count);
  trace.distance_paired.reserve(count);

  Vector p = x0;
  Vector q = x0;
  trace.distance_single.push_back((p - target).norm());
  trace.distance_paired.push_back((q - target).norm());
  for (int n = 0; n < iterations; ++n) {
    p = single.apply(p);
    q = paired.apply(q);
    trace.distance_single.push_back((p - target).norm());
    trace.distance_paired.push_back((q - target).norm());
  }
  return trace;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

ExperimentReport run_experiment_report(const ExperimentConfig& cfg, const Tolerances& tol) {
  cfg.validate();
  tol.validate();
  const auto instances = static_cast<std::size_t>(cfg.instances);
  const auto starts = static_cast<std::size_t>(cfg.starts_per_instance);

  // Write-once grid indexed [instance][start]; filled in any order.
  std::vector<std::vector<CellResult>> grid(instances, std::vector<CellResult>(starts));

  auto run_instance = [&](std::size_t k) {
    auto rng = substream_engine(cfg.seed, k, 0);
    Matrix m(cfg.rows, cfg.cols);
    {
      std::normal_distribution<double> dist(0.0, 1.0);
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = dist(rng);
    }
    const Vector xbar = normal_vector(rng, cfg.cols);
    const Vector b = m * xbar;
    for (std::size_t s = 0; s < starts; ++s) {
      auto start_rng = substream_engine(cfg.seed, k, s + 1);
      const Vector x0 = normal_vector(start_rng, cfg.cols);
      const CellTrace trace = trace_cell(m, b, x0, cfg.iterations, tol);
      CellResult& cell = grid[k][s];
      cell.db_single = to_db(trace.distance_single);
      cell.db_paired = to_db(trace.distance_paired);
      fejer_stats(trace.distance_single, trace.target_norm, cell);
      fejer_stats(trace.distance_paired, trace.target_norm, cell);
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, instances);
  if (workers == 1) {
    for (std::size_t k = 0; k < instances; ++k) run_instance(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < instances; k = next++) run_instance(k);
      });
    }
  }

  ExperimentReport report;
  const auto count = static_cast<std::size_t>(cfg.iterations) + 1;
  ConvergenceTable& table = report.table;
  std::vector<double> per_start(starts);
  std::vector<double> per_instance_single(instances);
  std::vector<double> per_instance_paired(instances);
  for (std::size_t n = 0; n < count; ++n) {
    for (std::size_t k = 0; k < instances; ++k) {
      for (std::size_t s = 0; s < starts; ++s) per_start[s] = grid[k][s].db_single[n];
      per_instance_single[k] = median(per_start);
      for (std::size_t s = 0; s < starts; ++s) per_start[s] = grid[k][s].db_paired[n];
      per_instance_paired[k] = median(per_start);
    }
    table.iteration_index.push_back(static_cast<int>(n));
    table.median_db_single.push_back(median(per_instance_single));
    table.median_db_paired.push_back(median(per_instance_paired));
  }
  for (const auto& row : grid) {
    for (const CellResult& cell : row) {
      report.worst_fejer_excess = std::max(report.worst_fejer_excess, cell.fejer_excess);
      report.worst_fejer_ratio = std::max(report.worst_fejer_ratio, cell.fejer_ratio);
    }
  }
  return report;
}

ConvergenceTable run_experiment(const ExperimentConfig& cfg, const Tolerances& tol) {
  return run_experiment_report(cfg, tol).table;
}

void write_csv(std::ostream& out, const ConvergenceTable& table) {
  out << "iteration,median_db_single,median_db_paired\n";
  char line[128];
  for (std::size_t n = 0; n < table.iteration_index.size(); ++n) {
    std::snprintf(line, sizeof line, "%d,%.16e,%.16e\n", table.iteration_index[n],
                  table.median_db_single[n], table.median_db_paired[n]);
    out << line;
  }
}

}  // namespace affproj
