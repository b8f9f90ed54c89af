#pragma once

#include "zmc/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace zmc {

// Univariate polynomial in y over Rational. Dense coefficient vector,
// index = power of y; trailing zeros trimmed.
class YPolynomial {
 public:
  YPolynomial() = default;
  explicit YPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static YPolynomial zero() { return YPolynomial(); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  YPolynomial operator-() const;
  friend YPolynomial operator+(const YPolynomial& a, const YPolynomial& b);
  friend YPolynomial operator-(const YPolynomial& a, const YPolynomial& b);
  friend YPolynomial operator*(const YPolynomial& a, const YPolynomial& b);
  YPolynomial scaled(const Rational& s) const;

  YPolynomial derivative() const;

  Rational evaluate(const Rational& y) const;
  double evaluate(double y) const;

  // Coefficients rounded to double, for the fast evaluation path.
  std::vector<double> float_coeffs() const;

  friend bool operator==(const YPolynomial& a, const YPolynomial& b) { return a.c_ == b.c_; }

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Horner evaluation of a dense coefficient array (index = power).
double horner(const std::vector<double>& coeffs, double x);

// Exact bivariate polynomial in (c, y): finite map (c-exponent, y-exponent)
// -> nonzero Rational. The canonical term map makes equality structural.
class CYPolynomial {
 public:
  struct Monomial {
    int c_exp;
    int y_exp;
    auto operator<=>(const Monomial&) const = default;
  };
  using TermMap = std::map<Monomial, Rational>;

  CYPolynomial() = default;

  static CYPolynomial zero() { return CYPolynomial(); }
  static CYPolynomial constant(const Rational& r) { return term(r, 0, 0); }
  static CYPolynomial term(const Rational& coeff, int c_exp, int y_exp);

  bool is_zero() const { return terms_.empty(); }
  int deg_y() const;
  int deg_c() const;
  Rational coeff(int c_exp, int y_exp) const;
  const TermMap& terms() const { return terms_; }

  CYPolynomial operator-() const;
  friend CYPolynomial operator+(const CYPolynomial& a, const CYPolynomial& b);
  friend CYPolynomial operator-(const CYPolynomial& a, const CYPolynomial& b);
  friend CYPolynomial operator*(const CYPolynomial& a, const CYPolynomial& b);
  CYPolynomial scaled(const Rational& s) const;

  // Term-wise d/dy; c-exponents untouched.
  CYPolynomial diff_y() const;

  // The unique r with r'' = p and r(0) = r'(0) = 0.
  CYPolynomial double_integrate_zero_ic() const;

  // Exact substitution c -> c_value.
  YPolynomial specialize_c(const Rational& c_value) const;

  Rational evaluate(const Rational& c_value, const Rational& y) const;

  // True when every monomial has odd y-exponent (so p(-y) = -p(y)).
  bool odd_in_y() const;

  friend bool operator==(const CYPolynomial& a, const CYPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  // "70*c^5*y^9 - 14*c^3*y^3" style, descending in y then c. "0" if empty.
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& r);
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const CYPolynomial& p);

}  // namespace zmc
