#pragma once

#include "zmc/cy_polynomial.hpp"
#include "zmc/rational.hpp"

#include <vector>

namespace zmc {

struct SourceTerms {
  CYPolynomial P;
  CYPolynomial Q;
  CYPolynomial R;
};

// The coefficient family b_0..b_N of the type-changing solution
//
//   f(x,y) = y + c*y*x^3 + sum_{k>=4} b_k(y) x^k / k,
//
// generated by the second-order recurrence
//
//   b_k'' = -k (P_k + Q_k - R_k),   b_k(0) = b_k'(0) = 0   (k >= 4)
//
// from the seed b_0 = y, b_1 = b_2 = 0, b_3 = 3*c*y. Each b_k is an odd
// polynomial in y with coefficients that are rational multiples of powers
// of c; c stays a formal variable here. The table is immutable once built
// and safe to share across threads.
class CoefficientTable {
 public:
  // Seed table of order 3: [y, 0, 0, 3cy].
  static CoefficientTable seed();

  // Seed extended through order n (n >= 3).
  static CoefficientTable generate(int n);

  int order() const { return static_cast<int>(b_.size()) - 1; }
  const CYPolynomial& b(int k) const { return b_.at(static_cast<std::size_t>(k)); }
  const std::vector<CYPolynomial>& coefficients() const { return b_; }

  // Characteristic of the family: the constant mu in b_2' + b_2^2 + mu = 0.
  // Type change across the light-like line forces mu = 0 (and b_2 = 0).
  const Rational& characteristic() const { return mu_; }

  // Source terms of the reduced recurrence (b_2 = 0 already folded in):
  //   P_k = sum_{m=3}^{k-1} 2(k-2m+3)/(k-m+2) b_m b'_{k-m+2}          (k >= 4)
  //   Q_k = sum_{m=3}^{k-4} sum_{n=3}^{k-m-1}
  //           (3n-k+m-1)/(mn) b'_m b'_n b_{k-m-n+2}                   (k >= 7)
  //   R_k = sum_{m=3}^{k-4} sum_{n=3}^{k-m-1}
  //           b_m b_n b''_{k-m-n+2} / (k-m-n+2)                       (k >= 7)
  // with Q_k = R_k = 0 for 4 <= k <= 6. Requires b_3..b_{k-1} present.
  CYPolynomial source_P(int k) const;
  CYPolynomial source_Q(int k) const;
  CYPolynomial source_R(int k) const;

  // The un-reduced source sums, evaluated literally over their full index
  // ranges (P: m = 3..k-1; Q, R: double sums from m, n = 2). Used only as
  // an independent cross-check of the reduced forms above.
  SourceTerms general_sources(int k) const;

  // Returns a copy extended by one order.
  CoefficientTable extend() const;

  // Invariant probes, used by tests and the coeffs report.
  bool initial_conditions_ok(int k) const;  // no y^0 or y^1 monomials (k >= 4)
  bool odd_in_y_ok(int k) const;
  bool weight_ok(int k) const;       // every c^j y^i satisfies i + k - 3j = 1
  bool degree_bound_ok(int k) const; // deg_y b_k <= 2k - 5 with equality (k >= 3)
  bool ode_roundtrip_ok(int k) const;  // b_k'' + k(P_k + Q_k - R_k) = 0 (k >= 4)

 private:
  CoefficientTable() = default;
  void append_next();

  std::vector<CYPolynomial> b_;
  Rational mu_;
};

}  // namespace zmc
