// Command-line front end: zmc <coeffs|mesh|residual|certify|classify|hyper>.
#include "zmc/commands.hpp"
#include "zmc/util.hpp"

#include "CLI11.hpp"

#include <exception>
#include <iostream>
#include <string>

namespace {

// --xrange / --yrange arrive as "a:b"; CLI11 hands us the raw string.
void add_range_option(CLI::App* cmd, const std::string& name,
                      std::pair<double, double>& target, const std::string& desc) {
  cmd->add_option_function<std::string>(
         name,
         [&target](const std::string& s) { target = zmc::parse_range(s); }, desc)
      ->type_name("LO:HI");
}

void add_shared_options(CLI::App* cmd, zmc::CommandConfig& cfg) {
  cmd->add_option("--c", cfg.c_str,
                  "series parameter c as an exact rational, e.g. 1/2 or 3/4");
  cmd->add_option("--n", cfg.order, "truncation order N")->check(CLI::Range(3, 200));
  cmd->add_option("--delta", cfg.delta, "half-width of the certified y-band")
      ->check(CLI::PositiveNumber);
  add_range_option(cmd, "--xrange", cfg.x_range, "x range as lo:hi");
  add_range_option(cmd, "--yrange", cfg.y_range, "y range as lo:hi");
  cmd->add_option("--steps", cfg.steps, "grid points per axis")
      ->check(CLI::Range(2, 4001));
  cmd->add_option("--out", cfg.out_path, "output file path");
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "obj", "json", "table"}));
  cmd->add_option("--tol", cfg.tol, "lightlike classification band")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "seed for the deterministic sampler");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero mean curvature graphs that change causal type across a "
               "light-like line: coefficients, meshes, residual checks, and "
               "convergence certification"};
  app.require_subcommand(1);

  zmc::CommandConfig cfg;

  CLI::App* coeffs = app.add_subcommand(
      "coeffs", "print the series coefficients b_k with their invariants");
  add_shared_options(coeffs, cfg);
  coeffs->add_flag("--symbolic", cfg.symbolic, "keep c as a formal variable");

  CLI::App* mesh = app.add_subcommand(
      "mesh", "sample the graph over a rectangle and write CSV or OBJ");
  add_shared_options(mesh, cfg);
  mesh->add_flag("--certified-column", cfg.certified_column,
                 "append a certified-box flag column to the CSV");

  CLI::App* residual = app.add_subcommand(
      "residual", "verify the equation residual symbolically and numerically");
  add_shared_options(residual, cfg);
  residual->add_option("--yval", cfg.y_val, "y of the order sweep");

  CLI::App* certify = app.add_subcommand(
      "certify", "recompute the convergence constants and check every bound");
  add_shared_options(certify, cfg);
  certify->add_option("--samples", cfg.samples, "y draws per bound")
      ->check(CLI::PositiveNumber);
  certify->add_option("--lemma-kmax", cfg.lemma_k_max, "sum-bound sweep ceiling")
      ->check(CLI::Range(7, 100000));

  CLI::App* classify = app.add_subcommand(
      "classify", "map causal types over a grid and summarize per half-plane");
  add_shared_options(classify, cfg);

  CLI::App* hyper = app.add_subcommand(
      "hyper", "check the cylindrical lift to higher ambient dimension");
  add_shared_options(hyper, cfg);
  hyper->add_option("--dim", cfg.ambient_dim, "ambient space dimension n")
      ->check(CLI::Range(2, 64));
  hyper->add_option("--samples", cfg.samples, "random probe points")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad arguments are exit 2, --help stays 0
  }

  try {
    if (coeffs->parsed()) return zmc::cmd_coeffs(cfg, std::cout, std::cerr);
    if (mesh->parsed()) return zmc::cmd_mesh(cfg, std::cout, std::cerr);
    if (residual->parsed()) return zmc::cmd_residual(cfg, std::cout, std::cerr);
    if (certify->parsed()) return zmc::cmd_certify(cfg, std::cout, std::cerr);
    if (classify->parsed()) return zmc::cmd_classify(cfg, std::cout, std::cerr);
    if (hyper->parsed()) return zmc::cmd_hyper(cfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
