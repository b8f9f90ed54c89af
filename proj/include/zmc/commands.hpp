#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace zmc {

// Parsed CLI state shared by every subcommand. c stays a string so it can
// enter the exact pipeline as a rational ("1/2"), never as a double.
struct CommandConfig {
  std::string c_str = "1/2";
  int order = 20;
  double delta = 0.8;
  std::pair<double, double> x_range{-0.8, 0.8};
  std::pair<double, double> y_range{-0.8, 0.8};
  int steps = 101;
  std::string out_path;          // "" = per-command default
  std::string format;            // "" = per-command default
  double tol = 1e-9;             // lightlike classification band
  std::uint64_t seed = 20260814;
  bool symbolic = false;         // coeffs: keep c formal
  bool certified_column = false; // mesh: emit the certified flag column
  double y_val = 0.1;            // residual: y of the order sweep
  int ambient_dim = 3;           // hyper
  int samples = 50;              // certify y draws / hyper points
  int lemma_k_max = 200;         // certify sweep ceiling
};

// Each command writes its document to `out`, diagnostics to `err`, and
// returns a process exit code: 0 all checks passed, 1 a check failed,
// 2 unusable arguments.
int cmd_coeffs(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_mesh(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_residual(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_certify(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_classify(const CommandConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_hyper(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace zmc
