#pragma once

#include "zmc/coefficient_table.hpp"
#include "zmc/cy_polynomial.hpp"
#include "zmc/rational.hpp"

#include <string>
#include <vector>

namespace zmc {

// x-coefficient families of the series built from a coefficient table;
// index = power of x, entries are exact polynomials in (c, y). The family
// for the graph equation residual
//
//   (1 - f_y^2) f_xx + 2 f_x f_y f_xy + (1 - f_x^2) f_yy
//
// is assembled twice: once through the decomposition
//
//   Y := f_y - 1,  Ptilde := 2(Y f_xx - f_x f_xy),
//   Q := Y^2 f_xx - 2 f_x f_xy Y,  R := f_x^2 f_yy,
//
// giving f_yy - Ptilde - Q - R, and once literally from the partials. The
// two are equal as polynomials (`identity_ok`), and for a table of order N
// every coefficient through x^N must vanish identically.
struct ResidualDecomposition {
  std::vector<CYPolynomial> Y;
  std::vector<CYPolynomial> Ptilde;
  std::vector<CYPolynomial> Q;
  std::vector<CYPolynomial> R;
  std::vector<CYPolynomial> f_yy;
  std::vector<CYPolynomial> combined;  // f_yy - Ptilde - Q - R, full degree
  std::vector<CYPolynomial> direct;    // residual straight from the partials
};

struct ResidualVerdict {
  int order = 0;                    // N of the table
  bool zero_through_order = false;  // combined[k] == 0 for all k <= N
  int first_nonzero = -1;           // smallest k with combined[k] != 0
  std::string first_nonzero_poly;   // printable form, "" if none
  bool identity_ok = false;         // direct == combined coefficient-wise
};

ResidualDecomposition residual_decomposition(const CoefficientTable& table);
ResidualVerdict residual_symbolic(const CoefficientTable& table);

// Residual of the x-truncated solution at a fixed c, held as exact
// x-coefficient polynomials in y. Since the coefficients of x^0..x^N are
// identically zero, evaluation starts at the x^{N+1} scale instead of
// cancelling O(x^3) partials in floating point - the double route bottoms
// out near 1e-29 of noise at x = 1e-3 while the true value keeps falling,
// so order measurements must go through this class.
class ResidualPolynomial {
 public:
  ResidualPolynomial(const CoefficientTable& table, const Rational& c_value);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int first_nonzero() const;  // -1 if the residual is identically zero
  const YPolynomial& coefficient(int k) const;

  double evaluate(double x, double y) const;
  Rational evaluate_exact(const Rational& x, const Rational& y) const;

 private:
  int order_;
  std::vector<YPolynomial> coeffs_;
  std::vector<std::vector<double>> float_coeffs_;
};

}  // namespace zmc
