#include "affproj/commands.hpp"

#include "affproj/affine_subspace.hpp"
#include "affproj/intersection.hpp"
#include "affproj/problem_file.hpp"
#include "affproj/sweep.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace affproj::cli {

namespace {

// Maps library exceptions onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const DimensionMismatch& e) {
    err << "dimension mismatch: " << e.what() << '\n';
    return kDimension;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

AffineSubspace affine_of(const AffineHyperplaneProblem& p, const Tolerances& tol) {
  return affine_from_point_basis(p.point, p.spans, tol);
}

void print_result(std::ostream& out, const TrichotomyResult& r) {
  out << "case: " << to_string(r.kind) << '\n';
  out << "point: " << format_vector(r.point) << '\n';
  if (r.kind == TrichotomyCase::DegenerateInconsistent) {
    out << "gap: " << format_vector(r.gap) << '\n';
    out << "gap_norm: " << format_real(r.gap.norm()) << '\n';
  }
  out << "projected_normal_norm: " << format_real(r.projected_normal_norm) << '\n';
  if (r.pair_determinant) out << "pair_determinant: " << format_real(*r.pair_determinant) << '\n';
}

struct ProjectReport {
  std::ostream& out;
  const Tolerances& tol;

  void operator()(const AffineHyperplaneProblem& p) const {
    const AffineSubspace set = affine_of(p, tol);
    print_result(out, project_affine_hyperplane(set, Hyperplane(p.normal, p.offset), p.query, tol));
  }
  void operator()(const TwoHyperplanesProblem& p) const {
    const Hyperplane h1(p.normal1, p.offset1);
    const Hyperplane h2(p.normal2, p.offset2);
    out << "classification: " << to_string(classify_hyperplane_pair(h1, h2, tol).kind) << '\n';
    print_result(out, project_two_hyperplanes(h1, h2, p.query, tol));
  }
  void operator()(const LinearSystemProblem& p) const {
    require_dim(p.query, p.m.cols(), "query");
    const auto built = affine_from_linear_system(p.m, p.rhs, tol);
    if (const auto* bad = std::get_if<Infeasible>(&built)) {
      out << "status: infeasible\n";
      out << "residual: " << format_real(bad->residual) << '\n';
      return;
    }
    const auto& set = std::get<AffineSubspace>(built);
    const Vector point = affine_project(set, p.query);
    out << "status: feasible\n";
    out << "solution_dim: " << set.subspace_dim() << '\n';
    out << "point: " << format_vector(point) << '\n';
    out << "residual: " << format_real((p.m * point - p.rhs).norm()) << '\n';
  }
};

void print_gap(std::ostream& out, const Vector& g) {
  const double norm = g.norm();
  out << "gap: " << format_vector(g) << '\n';
  out << "distance: " << format_real(norm) << '\n';
  out << "status: " << (norm > 0.0 ? "disjoint" : "intersecting") << '\n';
}

}  // namespace

int project(const std::string& input_path, const Tolerances& tol, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&] {
    tol.validate();
    const ProblemFile problem = read_problem_file(input_path);
    std::ostringstream report;
    report << "kind: " << problem.kind_name() << '\n';
    std::visit(ProjectReport{report, tol}, problem.payload);
    out << report.str();
    return kOk;
  });
}

int gap(const std::string& input_path, const Tolerances& tol, std::ostream& out,
        std::ostream& err) {
  return guarded(err, [&] {
    tol.validate();
    const ProblemFile problem = read_problem_file(input_path);
    if (const auto* p = std::get_if<AffineHyperplaneProblem>(&problem.payload)) {
      print_gap(out, gap_vector(affine_of(*p, tol), Hyperplane(p->normal, p->offset), tol));
      return kOk;
    }
    if (const auto* p = std::get_if<TwoHyperplanesProblem>(&problem.payload)) {
      const Hyperplane h1(p->normal1, p->offset1);
      const Hyperplane h2(p->normal2, p->offset2);
      print_gap(out, project_two_hyperplanes(h1, h2, p->query, tol).gap);
      return kOk;
    }
    throw ParseError(0, "kind", "gap needs an affine_hyperplane or two_hyperplanes problem");
  });
}

int classify(const std::string& input_path, const Tolerances& tol, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    tol.validate();
    const ProblemFile problem = read_problem_file(input_path);
    const auto* p = std::get_if<TwoHyperplanesProblem>(&problem.payload);
    if (p == nullptr) throw ParseError(0, "kind", "classify needs a two_hyperplanes problem");
    const Hyperplane h1(p->normal1, p->offset1);
    const Hyperplane h2(p->normal2, p->offset2);
    out << "classification: " << to_string(classify_hyperplane_pair(h1, h2, tol).kind) << '\n';
    return kOk;
  });
}

int experiment(const ExperimentConfig& cfg, const std::string& csv_path, const Tolerances& tol,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    cfg.validate();
    tol.validate();
    std::ofstream csv(csv_path, std::ios::binary | std::ios::trunc);
    if (!csv) {
      err << "cannot write '" << csv_path << "'\n";
      return static_cast<int>(kOutput);
    }
    const ConvergenceTable table = run_experiment(cfg, tol);
    write_csv(csv, table);
    csv.flush();
    if (!csv) {
      err << "failed writing '" << csv_path << "'\n";
      return static_cast<int>(kOutput);
    }
    const double single = table.median_db_single.back();
    const double paired = table.median_db_paired.back();
    out << "iterations: " << cfg.iterations << '\n';
    out << "final_median_db_single: " << format_real(single) << '\n';
    out << "final_median_db_paired: " << format_real(paired) << '\n';
    out << "paired_minus_single_db: " << format_real(paired - single) << '\n';
    return static_cast<int>(kOk);
  });
}

int generate(const std::string& kind, int dim, std::uint64_t seed, const std::string& out_path,
             std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ProblemFile problem = random_problem(kind, dim, seed);
    if (out_path.empty()) {
      write_problem(out, problem);
      return static_cast<int>(kOk);
    }
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "cannot write '" << out_path << "'\n";
      return static_cast<int>(kOutput);
    }
    write_problem(file, problem);
    return file ? static_cast<int>(kOk) : static_cast<int>(kOutput);
  });
}

}  // namespace affproj::cli
