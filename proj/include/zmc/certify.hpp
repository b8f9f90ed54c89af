#pragma once

#include "zmc/coefficient_table.hpp"
#include "zmc/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zmc {

// Closed form of the integral I(t, a) = int_t^{a-t} du / (u^2 (a-u)^2):
//   (2/a^3) * ( a(a - 2t) / (t(a - t)) + 2 log((a - t)/t) ).
// Requires 0 < t < a/2.
double integral_closed_form(double t, double a);

// g(t) = t * I(t, 1) = 2(1 - 2t)/(1 - t) + 4t log((1 - t)/t) on (0, 1/2).
// g(0+) -> 2, g(1/2) = 0, single interior maximum near t ~ 0.1379.
double tau_profile(double t);

// Supremum of tau_profile over (0, 1/2) by golden-section search (interval
// shrunk to 1e-9), plus a 1e-6 safety margin so g(t) <= tau holds at every
// floating-point t. Value ~ 2.6910804.
double compute_tau();

// Golden-section maximizer of a unimodal function on [lo, hi]; returns the
// abscissa once the bracket is shorter than tol.
template <typename F>
double golden_section_max(F f, double lo, double hi, double tol) {
  const double inv_phi = 0.6180339887498949;  // (sqrt 5 - 1) / 2
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

struct CertConstants {
  double c = 0.0;
  double delta = 0.0;
  double tau = 0.0;
  double M = 0.0;       // 3 max(144 c tau delta^{3/2}, (192 c^2 tau)^{1/4})
  double C = 0.0;       // delta * M; 1/C is the certified |x| radius
  double theta0 = 0.0;  // (3/c) (delta M)^3
};

CertConstants compute_constants(double c, double delta);

// One row of a bound sweep: did every sampled y pass for this index, and
// the smallest rhs - lhs margin seen.
struct PerKResult {
  int k = 0;
  bool passed = false;
  double worst_margin = 0.0;
};

// Inductive bounds, checked against the actual coefficients at fixed c with
// l* = (l-1)/2 - 2:
//   |b_l''(y)| <= c |y|^{l*} M^{l-3}
//   |b_l'(y)|  <= 3c |y|^{l*+1} M^{l-3} / (l* + 2)
//   |b_l(y)|   <= 3c |y|^{l*+2} M^{l-3} / (l* + 2)^2
// Samples must avoid y = 0 (negative powers of |y| for l <= 4); y = 0
// itself is covered separately by the finite b', b cases.
std::vector<PerKResult> check_proposition_bounds(const CoefficientTable& table,
                                                 const Rational& c, double M,
                                                 const std::vector<double>& ys);

// Source-term targets |k P_k|, |k Q_k|, |k R_k| <= (c/3) |y|^{k*} M^{k-3}.
std::vector<PerKResult> check_estimation_targets(const CoefficientTable& table,
                                                 const Rational& c, double M,
                                                 const std::vector<double>& ys);

// Geometric coefficient bound |b_k(y)| <= theta0 C^k for k >= k_from.
std::vector<PerKResult> check_uniform_bound(const CoefficientTable& table,
                                            const Rational& c, double theta0,
                                            double C_const,
                                            const std::vector<double>& ys,
                                            int k_from = 3);

// Discrete sum vs closed-form integral: for k >= p + 4,
//   sum_{q=2}^{k-p-2} k^3 / (q^2 (k-p-q)^2) <= I(1/k, 1 - p/k).
struct LemmaSumIntResult {
  int k = 0, p = 0;
  double lhs = 0.0, rhs = 0.0;
  bool passed = false;
};
LemmaSumIntResult check_lemma_sum_int(int k, int p);

// Double-sum chain: for k >= 7,
//   sum_{p=2}^{k-5} sum_{q=2}^{k-p-2} k^2/(p^2 q^2 (k-p-q)^2)
//     <= (6/k) I(1/k, 1) <= 6 tau.
struct LemmaSum2Result {
  int k = 0;
  double lhs = 0.0, mid = 0.0, bound = 0.0;
  bool passed = false;
};
LemmaSum2Result check_lemma_sum_2(int k, double tau);

struct LemmaSweepSummary {
  int k_max = 0;
  long cases_checked = 0;
  bool all_passed = false;
  double worst_margin = 0.0;  // min (rhs - lhs) over the sweep
  int worst_k = 0, worst_p = 0;
};

struct CertificationReport {
  std::string c_str;
  double c = 0.0;
  double delta = 0.0;
  int order = 0;
  int y_samples = 0;
  std::uint64_t seed = 0;
  double tau = 0.0, M = 0.0, C = 0.0, theta0 = 0.0;
  double x_certified = 0.0;  // 1/C
  std::vector<PerKResult> proposition;
  std::vector<PerKResult> estimation;
  std::vector<PerKResult> uniform;
  int first_uniform_k = -1;  // smallest k >= 3 where the geometric bound held
  LemmaSweepSummary lemma_sum_int;
  LemmaSweepSummary lemma_sum_2;
  bool all_passed = false;
};

CertificationReport run_certification(const CoefficientTable& table,
                                      const Rational& c, double delta,
                                      int y_samples, std::uint64_t seed,
                                      int lemma_k_max = 200);

// Stable JSON rendering of the report (ordered keys, shortest round-trip
// floats via the serializer).
std::string report_to_json(const CertificationReport& r);

}  // namespace zmc
