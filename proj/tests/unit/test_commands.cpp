#include "doctest.h"

#include "zmc/commands.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using zmc::CommandConfig;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

template <typename Cmd>
Run run(Cmd cmd, const CommandConfig& cfg) {
  std::ostringstream out, err;
  Run r;
  r.code = cmd(cfg, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("coeffs table output") {
  CommandConfig cfg;
  cfg.order = 7;
  cfg.symbolic = true;
  const Run r = run(zmc::cmd_coeffs, cfg);
  CHECK(r.code == 0);
  CHECK(r.out.find("70*c^5*y^9 - 14*c^3*y^3") != std::string::npos);
  CHECK(r.out.find("mu = 0") != std::string::npos);
  // The b_6 discrepancy note rides along whenever b_6 is printed.
  CHECK(r.out.find("-24*c^2*y^7") != std::string::npos);
  CHECK(r.out.find("erratum") != std::string::npos);
}

TEST_CASE("coeffs json output") {
  CommandConfig cfg;
  cfg.order = 8;
  cfg.format = "json";
  const Run r = run(zmc::cmd_coeffs, cfg);
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["order"] == 8);
  CHECK(doc["c"] == "1/2");
  CHECK(doc["coefficients"].size() == 9);
  CHECK(doc["coefficients"][5]["poly"] == "(9/8)*y^5");
  CHECK(doc["coefficients"][8]["odd_in_y"] == true);

  cfg.symbolic = true;
  const Run rs = run(zmc::cmd_coeffs, cfg);
  const auto sdoc = nlohmann::json::parse(rs.out);
  CHECK(sdoc["c"] == "symbolic");
  CHECK(sdoc["coefficients"][4]["poly"] == "-4*c^2*y^3");
  CHECK(sdoc["coefficients"][4]["weight_ok"] == true);
}

TEST_CASE("coeffs seed order prints just the seed rows") {
  CommandConfig cfg;
  cfg.order = 3;
  cfg.format = "json";
  cfg.symbolic = true;
  const Run r = run(zmc::cmd_coeffs, cfg);
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["coefficients"].size() == 4);
  CHECK(doc["coefficients"][3]["poly"] == "3*c*y");
}

TEST_CASE("coeffs argument errors") {
  CommandConfig cfg;
  cfg.format = "obj";
  CHECK(run(zmc::cmd_coeffs, cfg).code == 2);
  cfg.format = "table";
  cfg.c_str = "0";
  CHECK(run(zmc::cmd_coeffs, cfg).code == 2);
  cfg.c_str = "nonsense";
  CHECK(run(zmc::cmd_coeffs, cfg).code == 2);
  cfg.c_str = "1/2";
  cfg.order = 2;
  CHECK(run(zmc::cmd_coeffs, cfg).code == 2);
}

TEST_CASE("mesh writes csv and reports metadata") {
  CommandConfig cfg;
  cfg.order = 8;
  cfg.steps = 5;
  cfg.out_path = "test_cmd_mesh.csv";
  const Run r = run(zmc::cmd_mesh, cfg);
  CHECK(r.code == 0);
  const auto meta = nlohmann::json::parse(r.out);
  CHECK(meta["file"] == "test_cmd_mesh.csv");
  CHECK(meta["total_points"] == 25);
  CHECK(meta["certified_points"] == 5);  // the x = 0 column
  CHECK(meta.contains("warning"));       // 0.8 >> certified |x|

  std::ifstream in("test_cmd_mesh.csv");
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,y,t,causal,residual");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 25);
  in.close();
  std::remove("test_cmd_mesh.csv");
}

TEST_CASE("mesh inside the certified box carries no warning") {
  CommandConfig cfg;
  cfg.order = 8;
  cfg.steps = 3;
  cfg.x_range = {-0.002, 0.002};
  cfg.y_range = {-0.5, 0.5};
  cfg.out_path = "test_cmd_mesh2.csv";
  const Run r = run(zmc::cmd_mesh, cfg);
  CHECK(r.code == 0);
  const auto meta = nlohmann::json::parse(r.out);
  CHECK_FALSE(meta.contains("warning"));
  CHECK(meta["certified_points"] == 9);
  std::remove("test_cmd_mesh2.csv");
}

TEST_CASE("mesh degenerate two-step grid stays valid") {
  CommandConfig cfg;
  cfg.order = 8;
  cfg.steps = 2;
  cfg.out_path = "test_cmd_mesh3.csv";
  const Run r = run(zmc::cmd_mesh, cfg);
  CHECK(r.code == 0);
  const auto meta = nlohmann::json::parse(r.out);
  CHECK(meta["total_points"] == 4);
  std::ifstream in("test_cmd_mesh3.csv");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 5);  // header + 4 vertices
  in.close();
  std::remove("test_cmd_mesh3.csv");
}

TEST_CASE("residual command works at the seed order") {
  CommandConfig cfg;
  cfg.order = 3;
  const Run r = run(zmc::cmd_residual, cfg);
  CHECK(r.code == 0);
  CHECK(r.out.find("x^0..x^3 coefficients all zero") != std::string::npos);
}

TEST_CASE("residual command verdict") {
  CommandConfig cfg;
  cfg.order = 9;
  const Run r = run(zmc::cmd_residual, cfg);
  CHECK(r.code == 0);
  CHECK(r.out.find("x^0..x^9 coefficients all zero") != std::string::npos);
  CHECK(r.out.find("first surviving order: x^10") != std::string::npos);
  CHECK(r.out.find("result: PASS") != std::string::npos);

  cfg.format = "json";
  const Run j = run(zmc::cmd_residual, cfg);
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["symbolic"]["zero_through_order"] == true);
  CHECK(doc["symbolic"]["identity_ok"] == true);
  CHECK(doc["symbolic"]["first_nonzero_order"] == 10);
  CHECK(doc["sweep"]["slope"].get<double>() >= 8.5);
  CHECK(doc["passed"] == true);
}

TEST_CASE("certify command summary and report file") {
  CommandConfig cfg;
  cfg.order = 10;
  cfg.lemma_k_max = 40;
  cfg.out_path = "test_cmd_certify.json";
  const Run r = run(zmc::cmd_certify, cfg);
  CHECK(r.code == 0);
  CHECK(r.out.find("ALL CHECKS PASSED") != std::string::npos);
  CHECK(r.out.find("tau    = 2.691080436715163") != std::string::npos);

  std::ifstream in("test_cmd_certify.json");
  REQUIRE(in.good());
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["all_passed"] == true);
  CHECK(doc["constants"]["M"].get<double>() == doctest::Approx(415.925369).epsilon(1e-8));
  in.close();
  std::remove("test_cmd_certify.json");

  // delta must be positive; the library-level guard mirrors the CLI one.
  cfg.delta = 0.0;
  cfg.out_path.clear();
  CHECK(run(zmc::cmd_certify, cfg).code == 2);
}

TEST_CASE("classify summarizes the half-planes") {
  CommandConfig cfg;
  cfg.order = 10;
  cfg.steps = 21;
  const Run r = run(zmc::cmd_classify, cfg);
  CHECK(r.code == 0);
  CHECK(r.out.find("x < 0 spacelike fraction: 1") != std::string::npos);
  CHECK(r.out.find("x > 0 timelike fraction: 1") != std::string::npos);

  cfg.format = "json";
  const Run j = run(zmc::cmd_classify, cfg);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["zones"]["x_zero_column"]["L"] == 21);
  CHECK(doc["zones"]["x_negative"]["S"] == 210);
  CHECK(doc["zones"]["x_negative"]["T"] == 0);
  CHECK(doc["zones"]["x_positive"]["T"] == 210);
  CHECK(doc["away_from_axes"]["x_negative_spacelike_fraction"] == 1.0);
  CHECK(doc["rows_y_descending"].size() == 21);
}

TEST_CASE("hyper command delegation checks") {
  CommandConfig cfg;
  cfg.order = 10;
  cfg.ambient_dim = 4;
  cfg.samples = 20;
  const Run r = run(zmc::cmd_hyper, cfg);
  CHECK(r.code == 0);
  CHECK(r.out.find("delegation bit-exact with the 2D residual: yes") !=
        std::string::npos);
  CHECK(r.out.find("sign flip: yes") != std::string::npos);

  cfg.format = "json";
  const Run j = run(zmc::cmd_hyper, cfg);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["delegation_bitexact"] == true);
  CHECK(doc["cylindrical_invariance"] == true);
  CHECK(doc["type_change_across_plane"] == true);
  CHECK(doc["max_abs_residual"].get<double>() <= 1e-10);
  CHECK(doc["passed"] == true);

  cfg.ambient_dim = 1;
  CHECK(run(zmc::cmd_hyper, cfg).code == 2);
}

TEST_CASE("same config gives byte-identical documents") {
  CommandConfig cfg;
  cfg.order = 9;
  cfg.format = "json";
  for (auto* cmd : {&zmc::cmd_coeffs, &zmc::cmd_residual, &zmc::cmd_classify}) {
    const Run a = run(*cmd, cfg);
    const Run b = run(*cmd, cfg);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
  CommandConfig hcfg;
  hcfg.order = 8;
  hcfg.format = "json";
  const Run ha = run(zmc::cmd_hyper, hcfg);
  const Run hb = run(zmc::cmd_hyper, hcfg);
  CHECK(ha.out == hb.out);
}
