#include "affproj/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace affproj;

  CLI::App app{"Projections onto intersections of affine subspaces and hyperplanes"};
  app.require_subcommand(1);

  Tolerances tol;
  auto add_tolerances = [&](CLI::App* cmd) {
    cmd->add_option("--tol-rank", tol.rank, "relative threshold for P_U(c) = 0")->capture_default_str();
    cmd->add_option("--tol-feas", tol.feas, "relative residual for feasibility")->capture_default_str();
  };

  std::string input;
  auto* project = app.add_subcommand("project", "project the query point of a problem file");
  project->add_option("input", input, "problem file")->required();
  add_tolerances(project);

  auto* gap = app.add_subcommand("gap", "gap vector between an affine set and a hyperplane");
  gap->add_option("input", input, "problem file")->required();
  add_tolerances(gap);

  auto* classify = app.add_subcommand("classify", "classify a pair of hyperplanes");
  classify->add_option("input", input, "two_hyperplanes problem file")->required();
  add_tolerances(classify);

  ExperimentConfig cfg;
  std::string csv_path;
  auto* experiment = app.add_subcommand("experiment", "cyclic projection convergence experiment");
  experiment->add_option("--rows", cfg.rows, "equations per system")->capture_default_str();
  experiment->add_option("--cols", cfg.cols, "unknowns per system")->capture_default_str();
  experiment->add_option("--instances", cfg.instances, "random systems")->capture_default_str();
  experiment->add_option("--starts", cfg.starts_per_instance, "starting points per system")
      ->capture_default_str();
  experiment->add_option("--iters", cfg.iterations, "sweeps per run")->capture_default_str();
  experiment->add_option("--seed", cfg.seed, "generator seed")->capture_default_str();
  experiment->add_option("--out", csv_path, "CSV output path")->required();
  add_tolerances(experiment);

  std::string kind = "affine_hyperplane";
  int dim = 3;
  std::uint64_t seed = 0;
  std::string out_path;
  auto* generate = app.add_subcommand("generate", "write a random problem file");
  generate->add_option("--kind", kind, "affine_hyperplane | two_hyperplanes | linear_system")
      ->capture_default_str();
  generate->add_option("--dim", dim, "ambient dimension")->capture_default_str();
  generate->add_option("--seed", seed, "generator seed")->capture_default_str();
  generate->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsage;
  }

  if (*project) return cli::project(input, tol, std::cout, std::cerr);
  if (*gap) return cli::gap(input, tol, std::cout, std::cerr);
  if (*classify) return cli::classify(input, tol, std::cout, std::cerr);
  if (*experiment) return cli::experiment(cfg, csv_path, tol, std::cout, std::cerr);
  return cli::generate(kind, dim, seed, out_path, std::cout, std::cerr);
}
