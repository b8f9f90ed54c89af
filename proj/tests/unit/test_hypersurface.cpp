#include "doctest.h"

#include "zmc/hypersurface.hpp"
#include "zmc/rational.hpp"
#include "zmc/surface.hpp"
#include "zmc/util.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using zmc::HypersurfaceSlice;
using zmc::Rational;
using zmc::TruncatedSolution;

namespace {

TruncatedSolution base() { return TruncatedSolution::build(Rational(1, 2), 12); }

}  // namespace

TEST_CASE("dimension guards") {
  CHECK_THROWS_AS(HypersurfaceSlice(base(), 1), std::invalid_argument);
  CHECK_THROWS_AS(HypersurfaceSlice(base(), 0), std::invalid_argument);
  const HypersurfaceSlice h(base(), 4);
  CHECK(h.ambient_dim() == 4);
  CHECK_THROWS_AS(h.evaluate(std::vector<double>{0.1, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(h.residual(std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("n = 2 is the plane case itself") {
  const TruncatedSolution sol = base();
  const HypersurfaceSlice h(sol, 2);
  const std::vector<double> p{0.03, -0.2};
  CHECK(h.evaluate(p) == sol.evaluate(0.03, -0.2));
  CHECK(h.residual(p) == sol.residual_numeric(0.03, -0.2));
  CHECK(h.causal_quantity(p) == sol.causal_quantity(0.03, -0.2));
}

TEST_CASE("values ignore the cylinder coordinates") {
  const TruncatedSolution sol = base();
  for (const int n : {3, 5, 8}) {
    const HypersurfaceSlice h(sol, n);
    zmc::UniformSampler rng(42);
    for (int i = 0; i < 25; ++i) {
      std::vector<double> p(static_cast<std::size_t>(n));
      p[0] = rng.range(-0.05, 0.05);
      p[1] = rng.range(-0.5, 0.5);
      for (int j = 2; j < n; ++j) p[static_cast<std::size_t>(j)] = rng.range(-10, 10);
      CHECK(h.evaluate(p) == sol.evaluate(p[0], p[1]));
      CHECK(h.residual(p) == sol.residual_numeric(p[0], p[1]));
      CHECK(h.causal_quantity(p) == sol.causal_quantity(p[0], p[1]));
    }
  }
}

TEST_CASE("ambient-form expansion agrees with the delegated residual") {
  const TruncatedSolution sol = base();
  for (const int n : {2, 3, 5}) {
    const HypersurfaceSlice h(sol, n);
    zmc::UniformSampler rng(20260814);
    for (int i = 0; i < 25; ++i) {
      std::vector<double> p(static_cast<std::size_t>(n));
      p[0] = rng.range(-0.05, 0.05);
      p[1] = rng.range(-0.5, 0.5);
      for (int j = 2; j < n; ++j) p[static_cast<std::size_t>(j)] = rng.range(-1, 1);
      const double delegated = h.residual(p);
      const double ambient = zmc::residual_ambient_form(h, p);
      CHECK(std::fabs(ambient - delegated) <= 1e-12);
    }
  }
}

TEST_CASE("type change survives the lift") {
  const HypersurfaceSlice h(base(), 5);
  const std::vector<double> left{-0.1, 0.1, 0.0, 0.0, 0.0};
  const std::vector<double> right{0.1, 0.1, 0.0, 0.0, 0.0};
  const std::vector<double> on{0.0, 0.1, 7.0, -3.0, 0.25};
  CHECK(h.causal_quantity(left) > 0.0);
  CHECK(h.causal_quantity(right) < 0.0);
  CHECK(h.causal_quantity(on) == 0.0);
}

TEST_CASE("residual stays small near the line after the lift") {
  const HypersurfaceSlice h(base(), 3);
  zmc::UniformSampler rng(3);
  for (int i = 0; i < 50; ++i) {
    const std::vector<double> p{rng.range(-0.05, 0.05), rng.range(-0.05, 0.05),
                                rng.range(-5, 5)};
    CHECK(std::fabs(h.residual(p)) <= 1e-10);
  }
}
