#include "doctest.h"

#include "zmc/mesh.hpp"
#include "zmc/rational.hpp"
#include "zmc/surface.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using zmc::GridMesh;
using zmc::Rational;
using zmc::TruncatedSolution;

TEST_CASE("uniform axis hits the midpoint exactly") {
  const auto xs = zmc::uniform_axis(-0.8, 0.8, 101);
  REQUIRE(xs.size() == 101);
  CHECK(xs.front() == -0.8);
  CHECK(xs.back() == 0.8);
  CHECK(xs[50] == 0.0);  // lerp form, not lo + i*h
  CHECK_THROWS_AS(zmc::uniform_axis(0, 1, 1), std::invalid_argument);
}

TEST_CASE("mesh carries the on-line column exactly") {
  const TruncatedSolution sol = TruncatedSolution::build(Rational(1, 2), 12);
  const GridMesh m = zmc::build_mesh(sol, {-0.8, 0.8}, {-0.8, 0.8}, 21);
  REQUIRE(m.nx == 21);
  REQUIRE(m.ny == 21);
  const int mid = 10;
  CHECK(m.xs[mid] == 0.0);
  for (int iy = 0; iy < m.ny; ++iy) {
    const auto idx = m.index(mid, iy);
    CHECK(m.t[idx] == m.ys[static_cast<std::size_t>(iy)]);  // t = y on the line
    CHECK(m.causal[idx] == 'L');
    CHECK(m.residual[idx] == 0.0);
  }
}

TEST_CASE("mesh labels split by the sign of x") {
  const TruncatedSolution sol = TruncatedSolution::build(Rational(1, 2), 20);
  const GridMesh m = zmc::build_mesh(sol, {-0.8, 0.8}, {-0.8, 0.8}, 21);
  for (int iy = 0; iy < m.ny; ++iy)
    for (int ix = 0; ix < m.nx; ++ix) {
      const char want = m.xs[static_cast<std::size_t>(ix)] < 0   ? 'S'
                        : m.xs[static_cast<std::size_t>(ix)] > 0 ? 'T'
                                                                 : 'L';
      CHECK(m.causal[m.index(ix, iy)] == want);
    }
  CHECK(m.residual_max > 0.0);
}

TEST_CASE("certified flags mark the convergence box") {
  const TruncatedSolution sol = TruncatedSolution::build(Rational(1, 2), 8);
  const GridMesh m =
      zmc::build_mesh(sol, {-0.8, 0.8}, {-0.8, 0.8}, 21,
                      TruncatedSolution::kCausalTol, 0.003, 0.8);
  long inside = 0;
  for (int iy = 0; iy < m.ny; ++iy)
    for (int ix = 0; ix < m.nx; ++ix) {
      const bool in = std::abs(m.xs[static_cast<std::size_t>(ix)]) <= 0.003 &&
                      std::abs(m.ys[static_cast<std::size_t>(iy)]) <= 0.8;
      CHECK(static_cast<bool>(m.certified[m.index(ix, iy)]) == in);
      inside += in;
    }
  CHECK(inside == 21);  // only the x = 0 column at this spacing
}

TEST_CASE("csv writer format") {
  const TruncatedSolution sol = TruncatedSolution::build(Rational(1, 2), 8);
  const GridMesh m = zmc::build_mesh(sol, {-0.1, 0.1}, {-0.1, 0.1}, 3,
                                     TruncatedSolution::kCausalTol, 0.003, 0.8);
  std::ostringstream os;
  zmc::write_mesh_csv(m, os, false);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "x,y,t,causal,residual");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 9);

  std::ostringstream os2;
  zmc::write_mesh_csv(m, os2, true);
  std::istringstream is2(os2.str());
  std::getline(is2, line);
  CHECK(line == "x,y,t,causal,residual,certified");
  // Center row is the on-line point: t = y = 0 rendered shortest.
  std::vector<std::string> body;
  while (std::getline(is2, line)) body.push_back(line);
  REQUIRE(body.size() == 9);
  CHECK(body[4] == "0,0,0,L,0,1");
}

TEST_CASE("obj writer emits quads over the grid") {
  const TruncatedSolution sol = TruncatedSolution::build(Rational(1, 2), 8);
  const GridMesh m = zmc::build_mesh(sol, {-0.1, 0.1}, {-0.1, 0.1}, 4);
  std::ostringstream os;
  zmc::write_mesh_obj(m, os, {"lifted graph"});
  std::istringstream is(os.str());
  std::string line;
  int vs = 0, fs = 0, comments = 0;
  while (std::getline(is, line)) {
    if (line.rfind("v ", 0) == 0) ++vs;
    if (line.rfind("f ", 0) == 0) ++fs;
    if (line.rfind("# ", 0) == 0) ++comments;
  }
  CHECK(vs == 16);
  CHECK(fs == 9);
  CHECK(comments == 1);
}

TEST_CASE("deterministic output") {
  const TruncatedSolution sol = TruncatedSolution::build(Rational(1, 2), 10);
  const GridMesh a = zmc::build_mesh(sol, {-0.5, 0.5}, {-0.5, 0.5}, 11);
  const GridMesh b = zmc::build_mesh(sol, {-0.5, 0.5}, {-0.5, 0.5}, 11);
  std::ostringstream sa, sb;
  zmc::write_mesh_csv(a, sa, false);
  zmc::write_mesh_csv(b, sb, false);
  CHECK(sa.str() == sb.str());
}
