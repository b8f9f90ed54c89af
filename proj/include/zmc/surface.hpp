#pragma once

#include "zmc/coefficient_table.hpp"
#include "zmc/cy_polynomial.hpp"
#include "zmc/rational.hpp"

#include <vector>

namespace zmc {

// Causal type of the graph t = f(x, y) in R^3 with signature (-++):
// the induced metric is Riemannian where 1 - f_x^2 - f_y^2 > 0, Lorentzian
// where it is negative, degenerate where it vanishes.
enum class CausalType { SPACELIKE, TIMELIKE, LIGHTLIKE };

char causal_code(CausalType t);         // 'S', 'T', 'L'
const char* causal_name(CausalType t);  // "spacelike", ...

struct Partials {
  double fx, fy, fxx, fxy, fyy;
};

// The order-N truncation f_N(x, y) = y + sum_{k=3}^{N} b_k(y) x^k / k with
// the b_k specialized at a fixed rational c > 0. Holds both the exact
// y-polynomials and per-k double coefficient caches; evaluation is Horner
// in x over Horner-in-y values, so x = 0 returns y bit-exactly.
class TruncatedSolution {
 public:
  TruncatedSolution(const CoefficientTable& table, const Rational& c_value);
  static TruncatedSolution build(const Rational& c_value, int order);

  int order() const { return static_cast<int>(b_.size()) - 1; }
  const Rational& c_value() const { return c_; }
  double c_double() const { return c_.to_double(); }
  const YPolynomial& coefficient(int k) const { return b_.at(static_cast<std::size_t>(k)); }

  double evaluate(double x, double y) const;
  Rational evaluate_exact(const Rational& x, const Rational& y) const;

  // Exact term-wise derivatives of the truncation, evaluated in doubles.
  Partials partials(double x, double y) const;

  // (1 - f_y^2) f_xx + 2 f_x f_y f_xy + (1 - f_x^2) f_yy straight from
  // partials. Cancellation-limited: useful down to ~1e-2 of x but not for
  // measuring the vanishing order (see ResidualPolynomial for that).
  double residual_numeric(double x, double y) const;

  // 1 - f_x^2 - f_y^2, assembled as -S(2 + S) - f_x^2 with S = f_y - 1 so
  // the near-line values don't lose digits to the 1 - (1 + S)^2 form.
  double causal_quantity(double x, double y) const;

  CausalType causal_type(double x, double y, double tol = kCausalTol) const;

  // On-line values are exactly zero and off-line values grow as 2c|x|^3,
  // so this cleanly separates at |x| >~ 2e-3 for c = 1/2.
  static constexpr double kCausalTol = 1e-9;

 private:
  Rational c_;
  std::vector<YPolynomial> b_;            // b_k at c, index k
  std::vector<std::vector<double>> bf_;   // float coeffs of b_k
  std::vector<std::vector<double>> dbf_;  // ... of b_k'
  std::vector<std::vector<double>> ddbf_; // ... of b_k''
};

}  // namespace zmc
